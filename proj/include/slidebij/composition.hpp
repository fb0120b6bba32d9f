#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace slidebij {

using Composition = std::vector<int>;
using CountValue = boost::multiprecision::cpp_int;

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

struct SemanticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rightmost zero position (1-based), or kMaxzeroNone when every part is
// positive.  The sentinel sorts strictly below every numeric index.
inline constexpr int kMaxzeroNone = 0;

inline int maxzero(const Composition& k) {
  for (int j = static_cast<int>(k.size()); j >= 1; --j)
    if (k[j - 1] == 0) return j;
  return kMaxzeroNone;
}

inline bool is_reverse_catalan(const Composition& k) {
  long long suffix = 0;
  int n = static_cast<int>(k.size());
  for (int i = 1; i <= n; ++i) {
    suffix += k[n - i];
    if (suffix < i) return false;
  }
  return true;
}

inline CountValue zeros_right_of(const Composition& k, int i) {
  if (i < 1 || i > static_cast<int>(k.size()))
    throw SemanticError("zeros_right_of: index out of range");
  int z = 0;
  for (int j = i; j < static_cast<int>(k.size()); ++j)
    if (k[j] == 0) ++z;
  return z;
}

// k^{(j)}: decrement k_j, then delete the rightmost zero of the result.
inline Composition derive(const Composition& k, int j) {
  int mz = maxzero(k);
  if (j <= mz || j > static_cast<int>(k.size()))
    throw SemanticError("derive: index must satisfy maxzero(k) < j <= n");
  if (k[j - 1] < 1) throw SemanticError("derive: k_j must be positive");
  Composition out = k;
  --out[j - 1];
  int drop = (out[j - 1] == 0) ? j : mz;
  if (drop == kMaxzeroNone)
    throw SemanticError("derive: no zero to remove");  // unreachable for sum(k)=n
  out.erase(out.begin() + (drop - 1));
  return out;
}

namespace detail {
inline std::map<Composition, CountValue>& asym_memo() {
  static std::map<Composition, CountValue> memo;
  return memo;
}
inline std::mutex& asym_memo_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

// The asymmetric multinomial coefficient <<n; k>> by its defining recursion.
// Vanishes exactly on the non-reverse-Catalan compositions.
inline CountValue asym_multinomial(const Composition& k) {
  int n = static_cast<int>(k.size());
  long long sum = 0;
  for (int part : k) {
    if (part < 0) throw SemanticError("asym_multinomial: negative part");
    sum += part;
  }
  if (sum != n) throw SemanticError("asym_multinomial: sum(k) must equal length(k)");
  if (n == 0) return 1;
  {
    std::scoped_lock lock(detail::asym_memo_mutex());
    auto it = detail::asym_memo().find(k);
    if (it != detail::asym_memo().end()) return it->second;
  }
  CountValue total = 0;
  for (int j = maxzero(k) + 1; j <= n; ++j) total += asym_multinomial(derive(k, j));
  {
    std::scoped_lock lock(detail::asym_memo_mutex());
    detail::asym_memo().emplace(k, total);
  }
  return total;
}

// Ordinary multinomial (sum k)! / prod k_i!.
inline CountValue multinomial(const Composition& k) {
  long long sum = 0;
  for (int part : k) {
    if (part < 0) throw SemanticError("multinomial: negative part");
    sum += part;
  }
  CountValue value = 1;
  for (long long i = 2; i <= sum; ++i) value *= i;
  for (int part : k)
    for (int i = 2; i <= part; ++i) value /= i;
  return value;
}

inline Composition parse_composition(const std::string& text) {
  Composition k;
  std::size_t pos = 0;
  if (text.empty()) return k;
  while (pos < text.size()) {
    std::size_t next = pos;
    while (next < text.size() && text[next] != ',') ++next;
    std::string piece = text.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      int value = std::stoi(piece, &used);
      if (used != piece.size() || value < 0) throw std::invalid_argument(piece);
      k.push_back(value);
    } catch (const std::exception&) {
      throw ParseError("invalid composition entry '" + piece + "'", pos);
    }
    pos = (next < text.size()) ? next + 1 : next;
    if (next < text.size() && next + 1 == text.size())
      throw ParseError("trailing comma in composition", next);
  }
  return k;
}

inline std::string format_composition(const Composition& k) {
  std::string out;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(k[i]);
  }
  return out;
}

// All compositions of n with n parts (parts >= 0), lexicographic.
inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[idx] = v;
      self(self, idx + 1, remaining - v);
    }
    cur[idx] = 0;
  };
  rec(rec, 0, n);
  return out;
}

}  // namespace slidebij
