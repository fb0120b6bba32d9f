#pragma once

#include "slidebij/bijection.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace slidebij {

// A parking function of semilength n: the map label x -> column, with the
// implicit Dyck path having k_c down-steps in column c.  Within a column,
// labels are drawn increasing bottom to top, so the map is the whole datum.
struct ParkingFunction {
  std::vector<int> column_of;  // index x-1 holds the column of label x, 1-based columns

  int n() const { return static_cast<int>(column_of.size()); }
  bool operator==(const ParkingFunction&) const = default;
  auto operator<=>(const ParkingFunction&) const = default;
};

inline Composition pf_content(const ParkingFunction& p) {
  Composition k(p.n(), 0);
  for (int c : p.column_of) {
    if (c < 1 || c > p.n()) throw SemanticError("parking function column out of range");
    ++k[c - 1];
  }
  return k;
}

// Geometric Dyck validity: walk the path from (0,n) to (n,0), one right step
// into column c followed by k_c down steps; it must stay weakly above the
// diagonal y = n - x.
inline bool is_dyck_content(const Composition& k) {
  int n = static_cast<int>(k.size());
  int y = n;
  for (int c = 1; c <= n; ++c) {
    // after the right step into column c we are at x = c
    y -= k[c - 1];
    if (y < n - c) return false;
  }
  return y == 0;
}

inline bool is_valid_pf(const ParkingFunction& p) { return is_dyck_content(pf_content(p)); }

// All parking functions with column multiplicities k, ordered by their words.
inline std::vector<ParkingFunction> enumerate_pf(const Composition& k) {
  std::vector<ParkingFunction> out;
  if (!is_dyck_content(k)) return out;
  int n = static_cast<int>(k.size());
  Word cols;  // the multiset of columns, smallest first
  for (int c = 1; c <= n; ++c)
    for (int rep = 0; rep < k[c - 1]; ++rep) cols.push_back(c);
  if (cols.empty()) {
    out.push_back(ParkingFunction{});
    return out;
  }
  do {
    out.push_back(ParkingFunction{cols});
  } while (std::next_permutation(cols.begin(), cols.end()));
  return out;
}

// d_P(x): the number of columns strictly right of x's column in which x
// exceeds every entry (empty columns count).
inline CountValue dominance_index(const ParkingFunction& p, int x) {
  if (x < 1 || x > p.n()) throw SemanticError("dominance_index: label out of range");
  int col = p.column_of[x - 1];
  CountValue d = 0;
  for (int c = col + 1; c <= p.n(); ++c) {
    bool dominated = true;
    for (int y = 1; y <= p.n() && dominated; ++y)
      if (p.column_of[y - 1] == c && y >= x) dominated = false;
    if (dominated) ++d;
  }
  return d;
}

// Column-restricted: d_P(x) < x for every label x.
inline bool is_cpf(const ParkingFunction& p) {
  for (int x = 1; x <= p.n(); ++x)
    if (dominance_index(p, x) >= x) return false;
  return true;
}

inline std::vector<ParkingFunction> enumerate_cpf(const Composition& k) {
  std::vector<ParkingFunction> out;
  for (ParkingFunction& p : enumerate_pf(k))
    if (is_cpf(p)) out.push_back(std::move(p));
  return out;
}

// w_i = the column that label i occupies.
inline Word pf_word(const ParkingFunction& p) { return p.column_of; }

// The slide tree of a column-restricted parking function: rebuild from the
// reversed word.
inline Tree cpf_to_slide(const ParkingFunction& p) {
  if (!is_valid_pf(p)) throw SemanticError("cpf_to_slide: not a parking function");
  if (!is_cpf(p)) throw SemanticError("cpf_to_slide: parking function is not column-restricted");
  Word w = pf_word(p);
  std::reverse(w.begin(), w.end());
  return tree_of_word(w);
}

// Text format: "x1:c1,x2:c2,..." (label:column pairs, any order, all labels).
inline std::string format_pf(const ParkingFunction& p) {
  std::string out;
  for (int x = 1; x <= p.n(); ++x) {
    if (x > 1) out += ',';
    out += std::to_string(x) + ":" + std::to_string(p.column_of[x - 1]);
  }
  return out;
}

inline ParkingFunction parse_pf(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    return std::stoi(text.substr(start, pos - start));
  };
  if (!text.empty()) {
    while (true) {
      int x = read_int();
      if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
      ++pos;
      int c = read_int();
      pairs.emplace_back(x, c);
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
    }
  }
  int n = static_cast<int>(pairs.size());
  ParkingFunction p;
  p.column_of.assign(n, 0);
  for (auto [x, c] : pairs) {
    if (x < 1 || x > n) throw ParseError("label out of range", 0);
    if (p.column_of[x - 1] != 0) throw ParseError("duplicate label", 0);
    if (c < 1 || c > n) throw ParseError("column out of range", 0);
    p.column_of[x - 1] = c;
  }
  return p;
}

}  // namespace slidebij
