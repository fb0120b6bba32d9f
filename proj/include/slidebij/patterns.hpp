#pragma once

#include "slidebij/bijection.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace slidebij {

// Order-isomorphic normal form: the i-th smallest distinct value becomes i.
inline Word reduce(const Word& w) {
  if (w.empty()) throw SemanticError("reduce: empty word");
  std::vector<int> distinct(w.begin(), w.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Word out;
  out.reserve(w.size());
  for (int v : w)
    out.push_back(static_cast<int>(
                      std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()) +
                  1);
  return out;
}

// A vincular pattern: letters plus adjacency requirements between consecutive
// letters (true = the two matched host entries must be adjacent).
struct VincularPattern {
  Word letters;
  std::vector<char> adjacent;  // size letters.size() - 1
};

// Containment with reduction semantics: equal pattern letters must match
// equal host letters.
inline bool contains_vincular(const Word& w, const VincularPattern& p) {
  std::size_t m = p.letters.size();
  if (m == 0) return true;
  std::vector<std::size_t> pick(m);
  auto sgn = [](int a, int b) { return a == b ? 0 : (a < b ? -1 : 1); };
  auto compatible = [&](std::size_t t) {
    for (std::size_t s = 0; s < t; ++s)
      if (sgn(w[pick[s]], w[pick[t]]) != sgn(p.letters[s], p.letters[t])) return false;
    return true;
  };
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t t, std::size_t from) {
    if (t == m) return true;
    bool adjacent = t > 0 && p.adjacent[t - 1];
    std::size_t lo = adjacent ? pick[t - 1] + 1 : from;
    std::size_t hi = adjacent ? pick[t - 1] + 2 : w.size();
    for (std::size_t i = lo; i < hi && i < w.size(); ++i) {
      pick[t] = i;
      if (compatible(t) && search(t + 1, i + 1)) return true;
      if (adjacent) break;
    }
    return false;
  };
  return search(0, 0);
}

// No positions p < q < r with w_p = w_r > w_q (the pattern 2-1-2).
inline bool avoids_212(const Word& w) {
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p + 1; q < w.size(); ++q)
      for (std::size_t r = q + 1; r < w.size(); ++r)
        if (w[p] == w[r] && w[p] > w[q]) return false;
  return true;
}

// Barred pattern 23-2̄-1: whenever i+1 < j with w_j < w_i < w_{i+1}, some k
// with i+1 < k < j has w_k = w_i (every 23-1 extends to 23-2-1).
inline bool avoids_23bar2_1(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (!(w[i] < w[i + 1])) continue;
    for (std::size_t j = i + 2; j < w.size(); ++j) {
      if (!(w[j] < w[i])) continue;
      bool extended = false;
      for (std::size_t k = i + 2; k < j && !extended; ++k)
        if (w[k] == w[i]) extended = true;
      if (!extended) return false;
    }
  }
  return true;
}

// The earliest instance of the vincular pattern 23-1: w = prefix·x·y·middle·
// z·suffix where (x,y) is the leftmost adjacent ascent admitting a later
// strictly smaller letter, and z is the earliest such letter.
struct Decomposition231 {
  Word prefix;
  int x = 0;
  int y = 0;
  Word middle;
  int z = 0;
  Word suffix;
};

inline std::optional<Decomposition231> earliest_231(const Word& w) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (!(w[p] < w[p + 1])) continue;
    for (std::size_t q = p + 2; q < w.size(); ++q) {
      if (w[q] < w[p]) {
        Decomposition231 d;
        d.prefix.assign(w.begin(), w.begin() + p);
        d.x = w[p];
        d.y = w[p + 1];
        d.middle.assign(w.begin() + p + 2, w.begin() + q);
        d.z = w[q];
        d.suffix.assign(w.begin() + q + 1, w.end());
        return d;
      }
    }
  }
  return std::nullopt;
}

using WordPredicate = std::function<bool(const Word&)>;

// All words of content k passing every predicate, in lexicographic order.
inline std::vector<Word> enumerate_avoiders(const Composition& k,
                                            const std::vector<WordPredicate>& predicates) {
  int n = static_cast<int>(k.size());
  Word w;
  for (int i = 1; i <= n; ++i)
    for (int rep = 0; rep < k[i - 1]; ++rep) w.push_back(i);
  if (static_cast<int>(w.size()) != n)
    throw SemanticError("enumerate_avoiders: sum(k) must equal length(k)");
  std::vector<Word> out;
  if (w.empty()) {
    bool ok = true;
    for (const auto& pred : predicates) ok = ok && pred(w);
    if (ok) out.push_back(w);
    return out;
  }
  do {
    bool ok = true;
    for (const auto& pred : predicates)
      if (!pred(w)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// CLI pattern syntax: digits, '-' for a dash, '~' before a barred letter.
// Supported: arbitrary vincular patterns, plus the single barred pattern
// 23-~2-1.  Returns a predicate that is true when the word AVOIDS the
// pattern.
inline WordPredicate parse_pattern(const std::string& text) {
  if (text == "23-~2-1") return [](const Word& w) { return avoids_23bar2_1(w); };
  if (text.find('~') != std::string::npos)
    throw ParseError("only the barred pattern 23-~2-1 is supported", text.find('~'));
  VincularPattern p;
  bool expect_letter = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      // Consecutive digits with no dash between them must be adjacent in the
      // host word.
      if (!p.letters.empty()) p.adjacent.push_back(expect_letter ? 1 : 0);
      p.letters.push_back(ch - '0');
      expect_letter = true;
    } else if (ch == '-') {
      if (p.letters.empty() || !expect_letter) throw ParseError("misplaced dash", i);
      expect_letter = false;
    } else {
      throw ParseError("invalid pattern character", i);
    }
  }
  if (p.letters.empty()) throw ParseError("empty pattern", 0);
  if (!expect_letter) throw ParseError("pattern ends with a dash", text.size());
  return [p](const Word& w) { return !contains_vincular(w, p); };
}

}  // namespace slidebij
