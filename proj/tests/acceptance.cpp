// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include "slidebij/verify.hpp"

#include <iostream>
#include <set>
#include <string>

using namespace slidebij;

namespace {

int failures = 0;

void line(int criterion, const std::string& what, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << criterion << ": " << what;
  if (!pass && !detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!pass) ++failures;
}

std::string first_failure(const Report& r) {
  for (const Check& c : r)
    if (!c.pass) return c.name + ": " + c.counterexample;
  return "";
}

// Criterion 1: exact recursion values.
void criterion1() {
  bool ok = asym_multinomial({1, 0, 2, 1}) == 8 && asym_multinomial({0, 1, 2, 1}) == 12;
  CountValue fact = 1;
  for (int n = 1; n <= 10; ++n) {
    fact *= n;
    ok = ok && asym_multinomial(Composition(n, 1)) == fact;
    Composition last(n, 0);
    last[n - 1] = n;
    ok = ok && asym_multinomial(last) == 1;
  }
  line(1, "exact asymmetric multinomial values", ok);
}

// Criterion 2: counting identities for every composition of n <= 6.
void criterion2() {
  Report r = verify_counts(6);
  line(2, "slide-set and CPF counts match the recursion (n <= 6)", all_pass(r), first_failure(r));
}

// Criterion 3: membership filter over all trivalent trees reproduces the
// staged enumeration, both rules, n <= 5.
void criterion3() {
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 5 && ok; ++n) {
    auto all = enumerate_trivalent(n);
    for (const Composition& k : compositions_of(n)) {
      for (SlideRule rule : {SlideRule::OMEGA, SlideRule::PSI}) {
        std::vector<std::string> filtered;
        for (const auto& key : all)
          if (is_member(parse_tree(key), k, rule)) filtered.push_back(key);
        if (filtered != slide_set_keys(k, rule)) {
          ok = false;
          detail = detail::comp_str(k);
          break;
        }
      }
      if (!ok) break;
    }
  }
  line(3, "membership filter equals staged enumeration (n <= 5)", ok, detail);
}

// Criterion 4: the insertion bijection round-trips and partitions (n <= 6).
// Criterion 6: CPF word sets equal slide-set word sets (n <= 6).
void criteria4and6() {
  Report r = verify_bijection(6);
  Report word_checks, pf_checks;
  for (Check& c : r)
    (c.name == "cpf-word-sets" ? pf_checks : word_checks).push_back(c);
  line(4, "sigma/pi bijection round-trips and partitions (n <= 6)", all_pass(word_checks),
       first_failure(word_checks));
  line(6, "reversed CPF words equal slide-set words (n <= 6)", all_pass(pf_checks),
       first_failure(pf_checks));
}

// Criterion 5: the eight-car worked example end to end.
void criterion5() {
  bool ok = true;
  std::string detail;
  try {
    ParkingFunction p = parse_pf("1:7,2:5,3:7,4:4,5:8,6:5,7:3,8:7");
    ok = is_valid_pf(p) && is_cpf(p) && pf_word(p) == parse_word("75748537");
    Word w = pf_word(p);
    std::reverse(w.begin(), w.end());
    ok = ok && w == parse_word("73584757");
    std::vector<std::string> chain = {"6357465", "524635", "41352", "3124", "312", "21", "1", ""};
    Word cur = w;
    for (const std::string& expected : chain) {
      auto [parent, step] = word_parent(cur);
      (void)step;
      if (format_word(parent) != expected) {
        ok = false;
        detail = "peel expected " + expected + " got " + format_word(parent);
      }
      cur = parent;
    }
    Composition k = content(w);
    Tree t = cpf_to_slide(p);
    ok = ok && k == Composition{0, 0, 1, 1, 2, 0, 3, 1} && is_member(t, k, SlideRule::OMEGA) &&
         word_of(t, k) == w && serialize_tree(tree_of_word(w)) == serialize_tree(t);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  line(5, "worked eight-car example end to end", ok, detail);
}

// Criterion 7: caterpillar characterization theorems (n <= 6).
void criterion7() {
  Report r = verify_caterpillar(6);
  line(7, "caterpillar word theorems and sentinel (n <= 6)", all_pass(r), first_failure(r));
}

// Criterion 8: the all-ones bijection (n <= 7).
void criterion8() {
  Report r = verify_ones(7);
  line(8, "phi/rho inverse bijections and 23-1 avoidance (n <= 7)", all_pass(r),
       first_failure(r));
}

// Criterion 9: structural lemma suite (n <= 5).
void criterion9() {
  Report r = verify_structure(5);
  line(9, "structural lemmas on labeled members (n <= 5)", all_pass(r), first_failure(r));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criteria4and6();
  criterion5();
  criterion7();
  criterion8();
  criterion9();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
