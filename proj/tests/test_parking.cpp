#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slidebij/parking.hpp"

#include <set>

using namespace slidebij;

TEST_CASE("parking function text round-trip") {
  ParkingFunction p = parse_pf("4:2,2:3,1:5,3:6,5:6,6:6");
  CHECK(p.column_of == std::vector<int>{5, 3, 6, 2, 6, 6});
  CHECK(format_pf(p) == "1:5,2:3,3:6,4:2,5:6,6:6");
  CHECK(parse_pf(format_pf(p)) == p);
  CHECK(parse_pf("").n() == 0);
  CHECK_THROWS_AS(parse_pf("1:1,1:1"), ParseError);  // duplicate label
  CHECK_THROWS_AS(parse_pf("1:3"), ParseError);      // column out of range
  CHECK_THROWS_AS(parse_pf("3:1"), ParseError);      // label out of range
  CHECK_THROWS_AS(parse_pf("1:"), ParseError);
  CHECK_THROWS_AS(parse_pf("1-2"), ParseError);
}

TEST_CASE("Dyck content check") {
  CHECK(is_dyck_content({}));
  CHECK(is_dyck_content({1}));
  CHECK(is_dyck_content({0, 1, 1, 0, 1, 3}));
  CHECK(is_dyck_content({0, 0, 1, 1, 2, 0, 3, 1}));
  CHECK_FALSE(is_dyck_content({2, 0}));  // dips below the diagonal
  CHECK_FALSE(is_dyck_content({0, 1}));  // never returns to it
  // Dyck = weakly-above walk; the zero composition of positive length fails.
  CHECK_FALSE(is_dyck_content({0}));
}

TEST_CASE("six-car example: dominance indices and failed restriction") {
  ParkingFunction p = parse_pf("4:2,2:3,1:5,3:6,5:6,6:6");
  CHECK(pf_content(p) == Composition{0, 1, 1, 0, 1, 3});
  CHECK(is_valid_pf(p));
  CHECK(pf_word(p) == Word{5, 3, 6, 2, 6, 6});
  CHECK(dominance_index(p, 1) == 0);
  CHECK(dominance_index(p, 2) == 2);
  CHECK(dominance_index(p, 3) == 0);
  CHECK(dominance_index(p, 4) == 3);
  CHECK(dominance_index(p, 5) == 0);
  CHECK(dominance_index(p, 6) == 0);
  // d(2) = 2 >= 2 violates the restriction.
  CHECK_FALSE(is_cpf(p));
  CHECK_THROWS_AS(cpf_to_slide(p), SemanticError);
}

TEST_CASE("eight-car column-restricted example maps to the worked slide tree") {
  ParkingFunction p = parse_pf("1:7,2:5,3:7,4:4,5:8,6:5,7:3,8:7");
  CHECK(pf_content(p) == Composition{0, 0, 1, 1, 2, 0, 3, 1});
  CHECK(is_valid_pf(p));
  CHECK(is_cpf(p));
  CHECK(pf_word(p) == parse_word("75748537"));
  Tree t = cpf_to_slide(p);
  CHECK(serialize_tree(t) == serialize_tree(tree_of_word(parse_word("73584757"))));
  CHECK(is_member(t, pf_content(p), SlideRule::OMEGA));
}

TEST_CASE("enumeration counts") {
  // Content (1,...,1): all n! labelings are parking functions.
  for (int n = 0; n <= 6; ++n) {
    Composition ones(n, 1);
    CountValue fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(CountValue(enumerate_pf(ones).size()) == fact);
  }
  // All cars in the last column: a single parking function, column-restricted.
  for (int n = 1; n <= 6; ++n) {
    Composition k(n, 0);
    k[n - 1] = n;
    auto all = enumerate_pf(k);
    REQUIRE(all.size() == 1);
    CHECK(is_cpf(all.front()));
  }
  // Non-Dyck content: nothing to enumerate.
  CHECK(enumerate_pf({2, 0}).empty());
  // PF count with content k is the plain multinomial.
  for (int n = 0; n <= 5; ++n)
    for (const Composition& k : compositions_of(n))
      if (is_dyck_content(k))
        CHECK(CountValue(enumerate_pf(k).size()) == multinomial(k));
}

TEST_CASE("column-restricted count matches the asymmetric multinomial") {
  for (int n = 0; n <= 5; ++n)
    for (const Composition& k : compositions_of(n))
      CHECK(CountValue(enumerate_cpf(k).size()) == asym_multinomial(k));
}

TEST_CASE("reversed parking words are exactly the slide-set words") {
  for (int n = 0; n <= 5; ++n) {
    for (const Composition& k : compositions_of(n)) {
      if (!is_reverse_catalan(k)) continue;
      std::set<Word> from_pf;
      for (const ParkingFunction& p : enumerate_cpf(k)) {
        Word w = pf_word(p);
        std::reverse(w.begin(), w.end());
        from_pf.insert(w);
      }
      std::set<Word> from_trees;
      for (const auto& key : slide_set_keys(k, SlideRule::OMEGA))
        from_trees.insert(word_of(parse_tree(key), k));
      CHECK(from_pf == from_trees);
      // cpf_to_slide agrees with rebuilding from the reversed word.
      for (const ParkingFunction& p : enumerate_cpf(k)) {
        Word w = pf_word(p);
        std::reverse(w.begin(), w.end());
        CHECK(serialize_tree(cpf_to_slide(p)) == serialize_tree(tree_of_word(w)));
      }
    }
  }
}
