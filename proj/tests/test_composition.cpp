#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slidebij/composition.hpp"

using namespace slidebij;

TEST_CASE("reverse-Catalan predicate") {
  CHECK(is_reverse_catalan({0, 0, 2, 1, 1, 2}));
  CHECK(is_reverse_catalan({1, 1, 1, 1}));
  CHECK_FALSE(is_reverse_catalan({2, 0}));
  CHECK_FALSE(is_reverse_catalan({1, 2, 1, 0}));
  CHECK(is_reverse_catalan({}));
}

TEST_CASE("maxzero") {
  CHECK(maxzero({1, 0, 2, 1}) == 2);
  CHECK(maxzero({1, 1, 1}) == kMaxzeroNone);
  CHECK(maxzero({0, 0, 2, 1, 1, 2}) == 2);
  CHECK(kMaxzeroNone < 1);
}

TEST_CASE("zeros_right_of") {
  CHECK(zeros_right_of({0, 2, 0, 1, 0, 3}, 2) == 2);
  CHECK(zeros_right_of({1, 1, 1}, 1) == 0);
  CHECK(zeros_right_of({0, 0, 1, 1, 2, 0, 3, 1}, 4) == 1);
  CHECK_THROWS_AS(zeros_right_of({1, 1}, 3), SemanticError);
}

TEST_CASE("derive") {
  CHECK(derive({1, 0, 2, 1}, 3) == Composition{1, 1, 1});
  CHECK(derive({1, 0, 2, 1}, 4) == Composition{1, 0, 2});
  CHECK(derive({1, 1}, 2) == Composition{1});
  CHECK_THROWS_AS(derive({1, 0, 2, 1}, 2), SemanticError);
  CHECK_THROWS_AS(derive({1, 0, 2, 1}, 1), SemanticError);  // j <= maxzero
}

TEST_CASE("asym_multinomial paper values") {
  CHECK(asym_multinomial({1, 0, 2, 1}) == 8);
  CHECK(asym_multinomial({0, 1, 2, 1}) == 12);
  CHECK(asym_multinomial({1, 1, 1, 1}) == 24);
  CHECK(asym_multinomial({0, 0, 0, 4}) == 1);
  CHECK(asym_multinomial({1, 2, 1, 0}) == 0);
  CHECK(asym_multinomial({}) == 1);
}

TEST_CASE("asym_multinomial all-ones is n!") {
  CountValue fact = 1;
  for (int n = 1; n <= 10; ++n) {
    fact *= n;
    CHECK(asym_multinomial(Composition(n, 1)) == fact);
  }
}

TEST_CASE("multinomial") {
  CHECK(multinomial({1, 0, 2, 1}) == 12);
  CHECK(multinomial({0, 0, 0, 4}) == 1);
  CHECK(multinomial({1, 1, 1, 1}) == 24);
  CHECK(multinomial({}) == 1);
}

TEST_CASE("properties over all compositions of n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const Composition& k : compositions_of(n)) {
      CountValue asym = asym_multinomial(k);
      CHECK(asym <= multinomial(k));
      CHECK((asym > 0) == is_reverse_catalan(k));
      // Recursion self-consistency.
      CountValue recomputed = (n == 0) ? CountValue(1) : CountValue(0);
      for (int j = maxzero(k) + 1; j <= n; ++j) recomputed += asym_multinomial(derive(k, j));
      if (n > 0) CHECK(asym == recomputed);
    }
  }
}

TEST_CASE("composition text round-trip") {
  CHECK(parse_composition("0,0,2,1,1,2") == Composition{0, 0, 2, 1, 1, 2});
  CHECK(format_composition({1, 0, 2, 1}) == "1,0,2,1");
  CHECK(parse_composition("") == Composition{});
  CHECK_THROWS_AS(parse_composition("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_composition("1,x"), ParseError);
  CHECK_THROWS_AS(parse_composition("1,2,"), ParseError);
}

TEST_CASE("compositions_of counts") {
  // n parts summing to n: C(2n-1, n-1).
  CHECK(compositions_of(0).size() == 1);
  CHECK(compositions_of(1).size() == 1);
  CHECK(compositions_of(4).size() == 35);
  CHECK(compositions_of(6).size() == 462);
}
