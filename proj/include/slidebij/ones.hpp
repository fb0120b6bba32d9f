#pragma once

#include "slidebij/caterpillar.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace slidebij {

namespace detail {

inline Composition all_ones(int n) { return Composition(n, 1); }

// Relabels numeric leaves and edge labels of a reduced tree by the sorted
// letters of the original subword: value i becomes letters[i-1].
inline void unreduce_tree(Tree& t, const std::vector<int>& letters) {
  for (auto& v : t.vs) {
    if (!v.alive) continue;
    if (v.elabel) v.elabel = letters[v.elabel - 1];
    for (Leaf& l : v.leaves)
      if (l.is_num()) l = num_leaf(letters[l.num() - 1]);
  }
}

// Deep-copies the subtree of src rooted at src_v into dst as a child of
// dst_parent, preserving edge labels and leaves.
inline int copy_subtree(Tree& dst, const Tree& src, int src_v, int dst_parent) {
  int v = dst.new_vertex(dst_parent);
  dst.vs[dst_parent].kids.push_back(v);
  dst.vs[v].elabel = src.vs[src_v].elabel;
  dst.vs[v].leaves = src.vs[src_v].leaves;
  for (int kid : src.vs[src_v].kids) copy_subtree(dst, src, kid, v);
  return v;
}

inline int vertex_of_elabel(const Tree& t, int label) {
  for (int v = 0; v < static_cast<int>(t.vs.size()); ++v)
    if (t.vs[v].alive && t.vs[v].elabel == label) return v;
  throw SemanticError("rho: expected edge label not present");
}

inline int min_elabel(const Tree& t, int v) {
  int best = t.vs[v].elabel;
  for (int kid : t.vs[v].kids) best = std::min(best, min_elabel(t, kid));
  return best;
}

// Edge-labeled tree for a permutation, with leaf labels carried along via the
// constructive merge: caterpillar when 23-1-avoiding, otherwise split at the
// earliest 23-1 instance, build both halves, and graft the z-side branch of B
// in place of the extra leaf of A.
inline Tree rho_rec(const Word& p) {
  int n = static_cast<int>(p.size());
  auto dec = earliest_231(p);
  if (!dec) {
    Tree t = tree_of_caterpillar_word(p);
    auto res = slide_labeling(t, all_ones(n), SlideRule::OMEGA);
    if (!res.ok) throw SemanticError("rho: caterpillar base case is not a slide tree");
    return res.labeled;
  }

  Word wxyu = dec->prefix;
  wxyu.push_back(dec->x);
  wxyu.push_back(dec->y);
  wxyu.insert(wxyu.end(), dec->middle.begin(), dec->middle.end());
  Word wxzv = dec->prefix;
  wxzv.push_back(dec->x);
  wxzv.push_back(dec->z);
  wxzv.insert(wxzv.end(), dec->suffix.begin(), dec->suffix.end());

  auto build = [](const Word& sub) {
    Tree t = rho_rec(reduce(sub));
    std::vector<int> letters(sub.begin(), sub.end());
    std::sort(letters.begin(), letters.end());
    unreduce_tree(t, letters);
    return t;
  };
  Tree A = build(wxyu);
  Tree B = build(wxzv);

  // The far end of edge x: one kid (the y-branch U in A, the z-branch V in B)
  // plus one spare leaf (d in A, e in B).
  int vxa = vertex_of_elabel(A, dec->x);
  int vxb = vertex_of_elabel(B, dec->x);
  if (A.vs[vxa].kids.size() != 1 || A.vs[vxa].leaves.size() != 1 ||
      B.vs[vxb].kids.size() != 1 || B.vs[vxb].leaves.size() != 1)
    throw SemanticError("rho: unexpected branching at the end of edge x");
  int u_top = A.vs[vxa].kids.front();
  int v_top = B.vs[vxb].kids.front();
  if (A.vs[u_top].elabel != dec->y || B.vs[v_top].elabel != dec->z)
    throw SemanticError("rho: branch top edges do not carry y and z");
  Leaf d = A.vs[vxa].leaves.front();
  Leaf e = B.vs[vxb].leaves.front();
  if (e != A.subtree_min(u_top) || d != B.subtree_min(v_top))
    throw SemanticError("rho: spare leaves are not the opposite branch minima");

  A.remove_leaf(vxa, d);
  copy_subtree(A, B, v_top, vxa);
  return A;
}

}  // namespace detail

// Edge-labeled slide tree of a permutation, validated: the slide labeling of
// the resulting leaf labeling reproduces the recursively built edge labels.
inline Tree rho_labeled(const Word& p) {
  int n = static_cast<int>(p.size());
  if (content(p) != detail::all_ones(n)) throw SemanticError("rho: input is not a permutation");
  Tree t = detail::rho_rec(p);
  auto res = slide_labeling(canonicalize(t), detail::all_ones(n), SlideRule::OMEGA);
  if (!res.ok || serialize_labeled(res.labeled) != serialize_labeled(t))
    throw SemanticError("rho: merged labeling fails the slide algorithm");
  return res.labeled;
}

inline Tree rho(const Word& p) { return canonicalize(rho_labeled(p)); }

// The edge-labeled shape only: each edge renders as label(children...), with
// children ordered by minimal edge label.
inline std::string rho_hat_shape(const Word& p) {
  Tree t = rho_labeled(p);
  auto rec = [&](auto&& self, int v) -> std::string {
    std::vector<std::pair<int, int>> kids;
    for (int kid : t.vs[v].kids) kids.emplace_back(detail::min_elabel(t, kid), kid);
    std::sort(kids.begin(), kids.end());
    std::string out;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(t.vs[kids[i].second].elabel) + "(" + self(self, kids[i].second) + ")";
    }
    return out;
  };
  return rec(rec, t.root);
}

// Reads the permutation back off a labeled all-ones slide tree: edge labels
// from the root outward, recursing into the branch with larger minimal edge
// label first at each fork.
inline Word phi(const Tree& t) {
  int n = t.num_numeric_leaves();
  auto res = slide_labeling(t, detail::all_ones(n), SlideRule::OMEGA);
  if (!res.ok) throw SemanticError("phi: tree is not an all-ones slide tree");
  const Tree& lt = res.labeled;
  Word out;
  auto rec = [&](auto&& self, int v) -> void {
    std::vector<std::pair<int, int>> kids;
    for (int kid : lt.vs[v].kids) kids.emplace_back(detail::min_elabel(lt, kid), kid);
    std::sort(kids.begin(), kids.end(), std::greater<>());
    for (auto [mn, kid] : kids) {
      (void)mn;
      out.push_back(lt.vs[kid].elabel);
      self(self, kid);
    }
  };
  rec(rec, lt.root);
  return out;
}

}  // namespace slidebij
