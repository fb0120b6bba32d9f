#pragma once

#include "slidebij/composition.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace slidebij {

// Leaf label: b, c, or a numeric leaf.  The leaf a is implicit: it hangs off
// the root vertex of every Tree.  Order: a < b < c < 1 < 2 < ...
struct Leaf {
  int v = 0;  // -2 = b, -1 = c, >= 1 numeric
  auto operator<=>(const Leaf&) const = default;
  bool is_num() const { return v >= 1; }
  int num() const {
    assert(is_num());
    return v;
  }
};

inline constexpr Leaf kLeafB{-2};
inline constexpr Leaf kLeafC{-1};
inline Leaf num_leaf(int i) {
  assert(i >= 1);
  return Leaf{i};
}

inline std::string to_string(Leaf l) {
  if (l == kLeafB) return "b";
  if (l == kLeafC) return "c";
  return std::to_string(l.v);
}

// Rooted representation of a stable tree on leaves {a,b,c,1..n}: the root
// vertex is the internal vertex adjacent to the leaf a.  Every internal vertex
// stores its child subtrees and child leaves; the edge toward the parent
// (toward a) may carry a numeric label.  Slide trees always keep a and b
// adjacent, so they serialize as "(a,b,...)"; the type itself supports every
// stable tree, which the trivalent-tree enumerator needs.
struct Tree {
  struct Vertex {
    int parent = -1;
    int elabel = 0;  // label on the edge toward the parent; 0 = unlabeled
    std::vector<int> kids;
    std::vector<Leaf> leaves;
    bool alive = false;
  };
  std::vector<Vertex> vs;
  int root = -1;

  int new_vertex(int parent) {
    vs.push_back(Vertex{});
    vs.back().parent = parent;
    vs.back().alive = true;
    return static_cast<int>(vs.size()) - 1;
  }
  int n_children(int v) const {
    return static_cast<int>(vs[v].kids.size() + vs[v].leaves.size());
  }
  bool has_leaf(int v, Leaf l) const {
    const auto& ls = vs[v].leaves;
    return std::find(ls.begin(), ls.end(), l) != ls.end();
  }
  void remove_leaf(int v, Leaf l) {
    auto& ls = vs[v].leaves;
    auto it = std::find(ls.begin(), ls.end(), l);
    assert(it != ls.end());
    ls.erase(it);
  }
  void remove_kid(int v, int kid) {
    auto& ks = vs[v].kids;
    auto it = std::find(ks.begin(), ks.end(), kid);
    assert(it != ks.end());
    ks.erase(it);
  }

  // Vertex holding the given leaf as a child; -1 if absent.
  int vertex_of_leaf(Leaf l) const {
    for (int v = 0; v < static_cast<int>(vs.size()); ++v)
      if (vs[v].alive && has_leaf(v, l)) return v;
    return -1;
  }

  Leaf subtree_min(int v) const {
    Leaf best{1 << 20};
    for (Leaf l : vs[v].leaves) best = std::min(best, l);
    for (int kid : vs[v].kids) best = std::min(best, subtree_min(kid));
    return best;
  }
  bool subtree_has_leaf(int v, Leaf l) const {
    if (has_leaf(v, l)) return true;
    for (int kid : vs[v].kids)
      if (subtree_has_leaf(kid, l)) return true;
    return false;
  }
  void subtree_leaves(int v, std::vector<Leaf>& out) const {
    for (Leaf l : vs[v].leaves) out.push_back(l);
    for (int kid : vs[v].kids) subtree_leaves(kid, out);
  }
  int subtree_size(int v) const {
    int total = static_cast<int>(vs[v].leaves.size());
    for (int kid : vs[v].kids) total += subtree_size(kid);
    return total;
  }

  void all_leaves(std::vector<Leaf>& out) const { subtree_leaves(root, out); }
  int num_numeric_leaves() const {
    std::vector<Leaf> ls;
    all_leaves(ls);
    int n = 0;
    for (Leaf l : ls)
      if (l.is_num()) ++n;
    return n;
  }
};

// A branch: the subtree on the far side of an edge from the root.  Either a
// whole vertex subtree (its parent edge) or a single child leaf (its leaf
// edge).
struct BranchRef {
  int vertex = -1;  // the vertex below the edge, or the vertex holding .leaf
  std::optional<Leaf> leaf;
  bool is_single_leaf() const { return leaf.has_value(); }
};

inline Leaf min_leaf(const Tree& t, const BranchRef& b) {
  return b.is_single_leaf() ? *b.leaf : t.subtree_min(b.vertex);
}
inline int branch_size(const Tree& t, const BranchRef& b) {
  return b.is_single_leaf() ? 1 : t.subtree_size(b.vertex);
}
inline void branch_leaves(const Tree& t, const BranchRef& b, std::vector<Leaf>& out) {
  if (b.is_single_leaf())
    out.push_back(*b.leaf);
  else
    t.subtree_leaves(b.vertex, out);
}

// The base star (a,b,c).
inline Tree star_tree() {
  Tree t;
  t.root = t.new_vertex(-1);
  t.vs[t.root].leaves = {kLeafB, kLeafC};
  return t;
}

namespace detail {

inline std::pair<Leaf, std::string> serialize_rec(const Tree& t, int v) {
  std::vector<std::pair<Leaf, std::string>> parts;
  for (Leaf l : t.vs[v].leaves) parts.emplace_back(l, to_string(l));
  for (int kid : t.vs[v].kids) parts.push_back(serialize_rec(t, kid));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i].second;
  }
  out += ')';
  return {parts.front().first, out};
}

}  // namespace detail

// Canonical serialization: children of every vertex ordered by minimal leaf;
// two trees are equal iff their serializations are byte-equal.  Slide trees
// (b adjacent to a) always render as "(a,b,...)".
inline std::string serialize_tree(const Tree& t) {
  auto [min, body] = detail::serialize_rec(t, t.root);
  (void)min;
  return "(a," + body.substr(1);
}

inline Tree parse_tree(const std::string& text) {
  Tree t;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= text.size() || text[pos] != ch)
      throw ParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  };
  // Parses one node into vertex v (as a child leaf or child subtree).
  auto parse_node = [&](auto&& self, int v) -> void {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    char ch = text[pos];
    if (ch == '(') {
      ++pos;
      int kid = t.new_vertex(v);
      t.vs[v].kids.push_back(kid);
      self(self, kid);
      while (true) {
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          self(self, kid);
        } else {
          break;
        }
      }
      expect(')');
      if (t.n_children(kid) < 2)
        throw ParseError("internal vertex of degree < 3", pos);
    } else if (ch == 'b') {
      ++pos;
      t.vs[v].leaves.push_back(kLeafB);
    } else if (ch == 'c') {
      ++pos;
      t.vs[v].leaves.push_back(kLeafC);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1) throw ParseError("numeric leaf must be >= 1", pos);
      t.vs[v].leaves.push_back(num_leaf(value));
    } else if (ch == 'a') {
      throw ParseError("leaf a may only appear at the front", pos);
    } else {
      throw ParseError("unexpected character", pos);
    }
  };

  expect('(');
  skip_ws();
  if (pos >= text.size() || text[pos] != 'a') throw ParseError("tree must start with leaf a", pos);
  ++pos;
  t.root = t.new_vertex(-1);
  while (true) {
    skip_ws();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      parse_node(parse_node, t.root);
    } else {
      break;
    }
  }
  expect(')');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input after tree", pos);
  if (t.n_children(t.root) < 2) throw ParseError("root vertex of degree < 3", pos);

  // Leaf set must be exactly {b, c, 1..n}.
  std::vector<Leaf> ls;
  t.all_leaves(ls);
  std::sort(ls.begin(), ls.end());
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw ParseError("duplicate leaf label", pos);
  if (ls.size() < 2 || ls[0] != kLeafB || ls[1] != kLeafC)
    throw ParseError("leaves b and c are required", pos);
  for (std::size_t i = 2; i < ls.size(); ++i)
    if (ls[i].v != static_cast<int>(i) - 1)
      throw ParseError("numeric leaves must be exactly 1..n", pos);
  return t;
}

// Rebuilds the tree in canonical child order with dead vertices dropped.
inline Tree canonicalize(const Tree& t) { return parse_tree(serialize_tree(t)); }

inline bool is_trivalent(const Tree& t) {
  for (int v = 0; v < static_cast<int>(t.vs.size()); ++v)
    if (t.vs[v].alive && t.n_children(v) != 2) return false;
  return true;
}

// Internal edges form a path iff no vertex meets three of them.  Incident
// internal edges at v: one per child subtree, plus the parent edge unless the
// parent side is the leaf a.
inline bool is_caterpillar(const Tree& t) {
  for (int v = 0; v < static_cast<int>(t.vs.size()); ++v) {
    if (!t.vs[v].alive) continue;
    int internal = static_cast<int>(t.vs[v].kids.size()) + (t.vs[v].parent >= 0 ? 1 : 0);
    if (internal > 2) return false;
  }
  return true;
}

// All (2n+1)!! trivalent trees on leaves {a,b,c,1..n}, canonical and sorted.
inline std::vector<std::string> enumerate_trivalent(int n) {
  std::vector<Tree> cur = {star_tree()};
  for (int m = 1; m <= n; ++m) {
    std::vector<Tree> next;
    for (const Tree& t : cur) {
      // Insert leaf m into the a-edge: new root above the old root.
      {
        Tree u = t;
        int nr = u.new_vertex(-1);
        u.vs[u.root].parent = nr;
        u.vs[nr].kids.push_back(u.root);
        u.vs[nr].leaves.push_back(num_leaf(m));
        u.root = nr;
        next.push_back(std::move(u));
      }
      for (int v = 0; v < static_cast<int>(t.vs.size()); ++v) {
        if (!t.vs[v].alive) continue;
        // Into each leaf edge at v.
        for (Leaf l : t.vs[v].leaves) {
          Tree u = t;
          u.remove_leaf(v, l);
          int w = u.new_vertex(v);
          u.vs[v].kids.push_back(w);
          u.vs[w].leaves = {l, num_leaf(m)};
          next.push_back(std::move(u));
        }
        // Into each internal edge below v.
        for (int kid : t.vs[v].kids) {
          Tree u = t;
          u.remove_kid(v, kid);
          int w = u.new_vertex(v);
          u.vs[v].kids.push_back(w);
          u.vs[w].kids.push_back(kid);
          u.vs[kid].parent = w;
          u.vs[w].leaves.push_back(num_leaf(m));
          next.push_back(std::move(u));
        }
      }
    }
    cur = std::move(next);
  }
  std::vector<std::string> out;
  out.reserve(cur.size());
  for (const Tree& t : cur) out.push_back(serialize_tree(t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Serialization that also shows edge labels: a labeled child subtree renders
// as (...)=L.  Display-only format.
inline std::string serialize_labeled(const Tree& t) {
  auto rec = [&](auto&& self, int v) -> std::pair<Leaf, std::string> {
    std::vector<std::pair<Leaf, std::string>> parts;
    for (Leaf l : t.vs[v].leaves) parts.emplace_back(l, to_string(l));
    for (int kid : t.vs[v].kids) {
      auto part = self(self, kid);
      if (t.vs[kid].elabel) part.second += "=" + std::to_string(t.vs[kid].elabel);
      parts.push_back(std::move(part));
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ',';
      out += parts[i].second;
    }
    out += ')';
    return {parts.front().first, out};
  };
  auto [min, body] = rec(rec, t.root);
  (void)min;
  std::string out = "(a," + body.substr(1);
  if (t.vs[t.root].elabel) out += "=" + std::to_string(t.vs[t.root].elabel);
  return out;
}

// DOT export; includes edge labels when present.  Vertex ids follow canonical
// traversal order.
inline std::string export_dot(const Tree& t) {
  std::string body;
  int counter = 0;
  // Emits the subtree at v and returns (min leaf, dot id of v).
  auto rec = [&](auto&& self, int v) -> std::pair<Leaf, std::string> {
    std::string my_id = "v" + std::to_string(counter++);
    body += "  " + my_id + " [shape=point];\n";
    struct Child {
      Leaf min;
      bool leaf;
      int kid;
    };
    std::vector<Child> children;
    for (Leaf l : t.vs[v].leaves) children.push_back({l, true, -1});
    for (int kid : t.vs[v].kids) children.push_back({t.subtree_min(kid), false, kid});
    std::sort(children.begin(), children.end(),
              [](const Child& x, const Child& y) { return x.min < y.min; });
    Leaf my_min = children.front().min;
    for (const Child& ch : children) {
      if (ch.leaf) {
        body += "  " + my_id + " -- \"" + to_string(ch.min) + "\";\n";
      } else {
        auto [kid_min, kid_id] = self(self, ch.kid);
        (void)kid_min;
        body += "  " + my_id + " -- " + kid_id;
        if (t.vs[ch.kid].elabel) body += " [label=\"" + std::to_string(t.vs[ch.kid].elabel) + "\"]";
        body += ";\n";
      }
    }
    return {my_min, my_id};
  };
  rec(rec, t.root);
  std::string out = "graph slidetree {\n  node [shape=plaintext];\n";
  out += "  v0 -- \"a\";\n";
  out += body;
  out += "}\n";
  return out;
}

}  // namespace slidebij
