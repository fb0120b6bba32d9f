#pragma once

#include "slidebij/slide.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace slidebij {

using Word = std::vector<int>;

inline Composition content(const Word& w) {
  int n = static_cast<int>(w.size());
  Composition k(n, 0);
  for (int letter : w) {
    if (letter < 1 || letter > n)
      throw SemanticError("word letter out of range [1..n]");
    ++k[letter - 1];
  }
  return k;
}

// Words print as compact digit strings when n <= 9, else comma-separated.
inline std::string format_word(const Word& w) {
  bool compact = w.size() <= 9;
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !compact) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

inline Word parse_word(const std::string& text) {
  Word w;
  if (text.empty()) return w;
  if (text.find(',') != std::string::npos) {
    for (int part : parse_composition(text)) w.push_back(part);
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char ch = text[i];
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw ParseError("invalid word character", i);
      w.push_back(ch - '0');
    }
  }
  return w;
}

struct BijectionStep {
  bool with_i = false;  // true: sigma_ij; false: sigma_j
  int i = 0;
  int j = 0;
};

namespace detail {

inline void shift_labels(Tree& t, int threshold, int delta) {
  for (auto& v : t.vs) {
    if (!v.alive) continue;
    if (v.elabel >= threshold) v.elabel += delta;
    for (Leaf& l : v.leaves)
      if (l.is_num() && l.v >= threshold) l.v += delta;
  }
}

inline void relabel_leaf(Tree& t, Leaf from, Leaf to) {
  int v = t.vertex_of_leaf(from);
  if (v < 0) throw SemanticError("relabel_leaf: leaf " + to_string(from) + " absent");
  for (Leaf& l : t.vs[v].leaves)
    if (l == from) l = to;
}

// Replace the leaf `at` by a new vertex with parent edge labeled j and leaves
// {j, other}.
inline void grow_cherry(Tree& t, Leaf at, int j, Leaf other) {
  int u = t.vertex_of_leaf(at);
  if (u < 0) throw SemanticError("grow_cherry: leaf " + to_string(at) + " absent");
  t.remove_leaf(u, at);
  int w = t.new_vertex(u);
  t.vs[u].kids.push_back(w);
  t.vs[w].elabel = j;
  t.vs[w].leaves = {num_leaf(j), other};
}

// Replace the cherry vertex `w` (two leaf children) by the single leaf `keep`.
inline void collapse_cherry(Tree& t, int w, Leaf keep) {
  int p = t.vs[w].parent;
  if (p < 0) throw SemanticError("collapse_cherry: cherry at the root");
  t.remove_kid(p, w);
  t.vs[p].leaves.push_back(keep);
  t.vs[w].alive = false;
}

}  // namespace detail

inline Leaf maxzero_leaf(const Composition& k) {
  int z = maxzero(k);
  return z == kMaxzeroNone ? kLeafC : num_leaf(z);
}

// Largest sub-branch of B containing B's second-smallest leaf but not its
// smallest.
inline BranchRef min2(const Tree& t, const BranchRef& b) {
  std::vector<Leaf> ls;
  branch_leaves(t, b, ls);
  if (ls.size() < 2) throw SemanticError("min2: branch has a single leaf");
  std::sort(ls.begin(), ls.end());
  Leaf smallest = ls[0], second = ls[1];
  int at = t.vertex_of_leaf(second);
  // Climb from the leaf edge of `second` while the subtree avoids `smallest`.
  if (t.subtree_has_leaf(at, smallest)) return BranchRef{at, second};
  int cur = at;
  while (t.vs[cur].parent >= 0 && !t.subtree_has_leaf(t.vs[cur].parent, smallest))
    cur = t.vs[cur].parent;
  return BranchRef{cur, std::nullopt};
}

// last(T): start from the largest branch whose minimum is maxzero(k) (the
// whole branch containing c when k has no zeros) and iterate min2 down to a
// single leaf.
inline Leaf last_leaf(const Tree& t, const Composition& k) {
  Leaf z = maxzero_leaf(k);
  std::optional<BranchRef> best;
  int best_size = -1;
  auto consider = [&](const BranchRef& b) {
    if (min_leaf(t, b) != z) return;
    int size = branch_size(t, b);
    if (size > best_size) {
      best = b;
      best_size = size;
    }
  };
  for (int v = 0; v < static_cast<int>(t.vs.size()); ++v) {
    if (!t.vs[v].alive) continue;
    for (Leaf l : t.vs[v].leaves) consider(BranchRef{v, l});
    for (int kid : t.vs[v].kids) consider(BranchRef{kid, std::nullopt});
  }
  if (!best) throw SemanticError("last: no branch with minimum " + to_string(z));
  BranchRef b = *best;
  while (branch_size(t, b) > 1) b = min2(t, b);
  if (b.is_single_leaf()) return *b.leaf;
  return t.vs[b.vertex].leaves.front();
}

struct PathDecomposition {
  std::vector<std::vector<int>> runs;  // maximal decreasing runs of edge labels, a -> target
  std::vector<BranchRef> branches;     // B_1..B_l at the run junctions; B_l at v_target
  std::vector<Leaf> minima;            // m_1..m_l
};

// Decompose the a -> target path of a fully labeled tree into maximal
// decreasing runs; a run breaks wherever the next edge label weakly ascends.
// Requires a trivalent tree (each junction carries exactly one branch).
inline PathDecomposition path_decomposition(const Tree& t, Leaf target) {
  int vt = t.vertex_of_leaf(target);
  if (vt < 0) throw SemanticError("path_decomposition: target leaf absent");
  std::vector<int> path;  // vertices from below the root down to vt
  for (int v = vt; v >= 0; v = t.vs[v].parent) path.push_back(v);
  std::reverse(path.begin(), path.end());
  // path[0] is the root; path edges are the parent edges of path[1..].
  PathDecomposition out;
  std::vector<int> run;
  auto off_path_branch = [&](int v, int path_kid, std::optional<Leaf> skip) -> BranchRef {
    for (Leaf l : t.vs[v].leaves)
      if (!(skip && l == *skip)) return BranchRef{v, l};
    for (int kid : t.vs[v].kids)
      if (kid != path_kid) return BranchRef{kid, std::nullopt};
    throw SemanticError("path_decomposition: junction vertex has no branch");
  };
  for (std::size_t s = 1; s < path.size(); ++s) {
    int label = t.vs[path[s]].elabel;
    if (label == 0) throw SemanticError("path_decomposition: unlabeled edge on path");
    run.push_back(label);
    bool last_edge = (s + 1 == path.size());
    bool breaks = last_edge || t.vs[path[s + 1]].elabel >= label;
    if (breaks) {
      out.runs.push_back(run);
      run.clear();
      int path_kid = last_edge ? -1 : static_cast<int>(path[s + 1]);
      std::optional<Leaf> skip = last_edge ? std::optional<Leaf>(target) : std::nullopt;
      BranchRef b = off_path_branch(path[s], path_kid, skip);
      out.branches.push_back(b);
      out.minima.push_back(min_leaf(t, b));
    }
  }
  return out;
}

// sigma_ij on a labeled member of Slide^omega(k), maxzero(k) < i < j <= n+1:
// increment labels >= i, then rewire along the a -> j path.  This is the
// folded two-case form (the first case of the definition is subsumed).
inline Tree sigma_ij(Tree t, int i, int j) {
  detail::shift_labels(t, i, +1);
  auto pd = path_decomposition(t, num_leaf(j));
  const auto& m = pd.minima;
  int l = static_cast<int>(m.size());
  if (l < 1) throw SemanticError("sigma_ij: empty path decomposition");
  int limit = (Leaf{j} < m[l - 1]) ? l - 1 : l;
  int d = limit + 1;
  for (int r = 1; r <= limit; ++r)
    if (m[r - 1] > Leaf{i}) {
      d = r;
      break;
    }
  Leaf partner{i};
  if (d <= limit) {
    std::vector<Leaf> old(m.begin() + (d - 1), m.begin() + limit);  // m_d..m_{limit-1}
    partner = m[limit - 1];
    detail::relabel_leaf(t, m[d - 1], Leaf{i});
    for (int r = d + 1; r <= limit; ++r)
      detail::relabel_leaf(t, m[r - 1], old[r - 1 - d]);
  }
  detail::grow_cherry(t, num_leaf(j), j, partner);
  return t;
}

// Literal three-case transcription of the definition, for cross-checking.
inline Tree sigma_ij_literal(Tree t, int i, int j) {
  detail::shift_labels(t, i, +1);
  auto pd = path_decomposition(t, num_leaf(j));
  auto m = pd.minima;
  int l = static_cast<int>(m.size());
  Leaf li{i}, lj{j};
  Leaf partner{0};
  if ((m[l - 1] < li) || (l >= 2 && m[l - 2] < li && lj < m[l - 1])) {
    partner = li;  // case 1: m_l < i < j  or  m_{l-1} < i < j < m_l
  } else if (m[l - 1] < lj) {
    // case 2: m_{d-1} < i < m_d < ... < m_l < j
    int d = 1;
    while (m[d - 1] < li) ++d;
    partner = m[l - 1];
    std::vector<Leaf> old = m;
    detail::relabel_leaf(t, m[d - 1], li);
    for (int r = d + 1; r <= l; ++r) detail::relabel_leaf(t, m[r - 1], old[r - 2]);
  } else {
    // case 3: m_{d-1} < i < m_d < ... < j < m_l
    int d = 1;
    while (m[d - 1] < li) ++d;
    partner = m[l - 2];
    std::vector<Leaf> old = m;
    detail::relabel_leaf(t, m[d - 1], li);
    for (int r = d + 1; r <= l - 1; ++r) detail::relabel_leaf(t, m[r - 1], old[r - 2]);
  }
  detail::grow_cherry(t, num_leaf(j), j, partner);
  return t;
}

// sigma_j on a labeled member of Slide^omega(k), maxzero(k) < j <= n+1.
inline Tree sigma_j(Tree t, int j, const Composition& k) {
  Leaf v = last_leaf(t, k);
  detail::shift_labels(t, j, +1);
  if (v.is_num() && v.v >= j) v.v += 1;
  if (v < Leaf{j}) {
    detail::grow_cherry(t, v, j, v);
    return t;
  }
  int u = t.vertex_of_leaf(v);
  std::optional<Leaf> adjacent;
  for (Leaf l : t.vs[u].leaves)
    if (l != v) adjacent = l;
  if (!adjacent)
    throw SemanticError("sigma_j: last(T) is not adjacent to another leaf");
  Leaf i = *adjacent;
  if (i < Leaf{j}) {
    detail::grow_cherry(t, i, j, i);
    return t;
  }
  // j < i: attach at the m_d with m_d < j < m_{d+1} on the a -> v path.
  auto pd = path_decomposition(t, v);
  const auto& m = pd.minima;
  int d = 0;
  for (int r = 1; r <= static_cast<int>(m.size()); ++r)
    if (m[r - 1] < Leaf{j}) d = r;
  if (d == 0 || d == static_cast<int>(m.size()))
    throw SemanticError("sigma_j: no valid attachment index");
  detail::grow_cherry(t, m[d - 1], j, m[d - 1]);
  return t;
}

// pi_j: remove the unique edge labeled j (a cherry with leaves {j, l}) and
// keep l, then decrement labels > j.
inline Tree pi_j(Tree t, int j) {
  int w = -1;
  for (int v = 0; v < static_cast<int>(t.vs.size()); ++v)
    if (t.vs[v].alive && t.vs[v].elabel == j) {
      if (w != -1) throw SemanticError("pi_j: edge label " + std::to_string(j) + " not unique");
      w = v;
    }
  if (w == -1) throw SemanticError("pi_j: no edge labeled " + std::to_string(j));
  if (t.vs[w].leaves.size() != 2 || !t.vs[w].kids.empty() || !t.has_leaf(w, num_leaf(j)))
    throw SemanticError("pi_j: tree not in the image of sigma_j");
  Leaf other = t.vs[w].leaves[0] == num_leaf(j) ? t.vs[w].leaves[1] : t.vs[w].leaves[0];
  detail::collapse_cherry(t, w, other);
  detail::shift_labels(t, j + 1, -1);
  return t;
}

// pi_ij: undo sigma_ij at the cherry of leaf j, reversing the leaf cycling,
// then decrement labels > i.  (The definition's "greater than j" in the v = i
// case must be "greater than i" to invert the increment; round-trip tests pin
// this down.)
inline Tree pi_ij(Tree t, int i, int j) {
  int w = t.vertex_of_leaf(num_leaf(j));
  if (w < 0 || t.vs[w].leaves.size() != 2 || !t.vs[w].kids.empty() || t.vs[w].elabel != j)
    throw SemanticError("pi_ij: tree not in the image of sigma_ij");
  Leaf v = t.vs[w].leaves[0] == num_leaf(j) ? t.vs[w].leaves[1] : t.vs[w].leaves[0];
  detail::collapse_cherry(t, w, num_leaf(j));
  if (v != Leaf{i}) {
    auto pd = path_decomposition(t, num_leaf(j));
    auto m = pd.minima;
    int l = static_cast<int>(m.size());
    int d = 0;
    for (int r = 1; r <= l; ++r)
      if (m[r - 1] == Leaf{i}) d = r;
    if (d == 0) throw SemanticError("pi_ij: no branch minimum equals i");
    int top;  // highest index of the values cycled back down toward i
    if (m[l - 1] < Leaf{j}) {
      detail::relabel_leaf(t, m[l - 1], v);
      top = l - 1;
    } else {
      detail::relabel_leaf(t, m[l - 2], v);
      top = l - 2;
    }
    for (int r = top; r >= d; --r) detail::relabel_leaf(t, m[r - 1], m[r]);
  }
  detail::shift_labels(t, i + 1, -1);
  return t;
}

// Assembled insertion map: T' in Slide^omega(derive(k, j)) -> Slide^omega(k).
inline Tree big_sigma(const Tree& labeled, const Composition& k, int j) {
  int n = static_cast<int>(k.size());
  if (j <= maxzero(k) || j > n) throw SemanticError("big_sigma: j out of range");
  if (k[j - 1] > 1 && maxzero(k) == kMaxzeroNone)
    throw SemanticError("big_sigma: k_j > 1 requires a zero part in k");
  if (k[j - 1] > 1) return sigma_ij(labeled, maxzero(k), j);
  return sigma_j(labeled, j, derive(k, j));
}

// Assembled removal map; also reports which insertion produced T.
inline std::pair<Tree, BijectionStep> big_pi(const Tree& labeled, const Composition& k) {
  if (k.empty()) throw SemanticError("big_pi: empty composition");
  Leaf jl = last_leaf(labeled, k);
  if (!jl.is_num()) throw SemanticError("big_pi: last(T) is not numeric");
  int j = jl.num();
  int edge_count = 0;
  for (const auto& v : labeled.vs)
    if (v.alive && v.elabel == j) ++edge_count;
  if (edge_count != k[j - 1])
    throw SemanticError("big_pi: edge multiplicity of " + std::to_string(j) +
                        " disagrees with k");
  BijectionStep step;
  step.j = j;
  if (k[j - 1] > 1) {
    step.with_i = true;
    step.i = maxzero(k);
    if (step.i == kMaxzeroNone) throw SemanticError("big_pi: k_j > 1 needs a zero in k");
    return {pi_ij(labeled, step.i, j), step};
  }
  return {pi_j(labeled, j), step};
}

// The word of a tree: peel with big_pi, then rebuild letters forward.
inline Word word_of(const Tree& t, const Composition& k) {
  auto labeling = slide_labeling(t, k, SlideRule::OMEGA);
  if (!labeling.ok)
    throw SemanticError("word_of: tree is not a member of the omega slide set");
  Tree lt = labeling.labeled;
  Composition kk = k;
  std::vector<BijectionStep> steps;
  while (!kk.empty()) {
    auto [peeled, step] = big_pi(lt, kk);
    lt = std::move(peeled);
    steps.push_back(step);
    kk = derive(kk, step.j);
  }
  if (serialize_tree(lt) != "(a,b,c)")
    throw SemanticError("word_of: peeling did not reach the base tree");
  Word w;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    int threshold = it->with_i ? it->i : it->j;
    for (int& letter : w)
      if (letter >= threshold) ++letter;
    w.push_back(it->j);
  }
  return w;
}

// One peel of a nonempty word: identifies the final insertion step and
// returns the word it was applied to.
inline std::pair<Word, BijectionStep> word_parent(const Word& w) {
  if (w.empty()) throw SemanticError("word_parent: empty word");
  Composition k = content(w);  // validates letters
  Word cur = w;
  int j = cur.back();
  BijectionStep step;
  step.j = j;
  cur.pop_back();
  if (k[j - 1] == 1) {
    for (int& letter : cur)
      if (letter > j) --letter;
  } else {
    step.with_i = true;
    step.i = maxzero(k);
    if (step.i == kMaxzeroNone || step.i >= j)
      throw SemanticError("invalid slide word: letter " + std::to_string(j) +
                          " repeats with no zero left of it");
    for (int& letter : cur)
      if (letter > step.i) --letter;
  }
  return {cur, step};
}

// The full insertion chain of a word, outermost (last-applied) step first.
inline std::vector<BijectionStep> word_steps(Word w) {
  std::vector<BijectionStep> steps;
  while (!w.empty()) {
    auto [parent, step] = word_parent(w);
    w = std::move(parent);
    steps.push_back(step);
  }
  return steps;
}

// Rebuild a tree from its word: recover the step chain by peeling the word,
// then replay the insertions from the base star.  The result carries its
// slide labeling on the edges.
inline Tree tree_of_word_labeled(const Word& w) {
  std::vector<BijectionStep> steps = word_steps(w);
  Tree lt = star_tree();
  Composition kk;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    int n = static_cast<int>(kk.size());
    if (it->with_i) {
      if (!(maxzero(kk) < it->i && it->i < it->j && it->j <= n + 1))
        throw SemanticError("invalid slide word: sigma_ij precondition fails");
      Composition next = kk;
      next.insert(next.begin() + (it->i - 1), 0);
      ++next[it->j - 1];
      lt = sigma_ij(std::move(lt), it->i, it->j);
      kk = std::move(next);
    } else {
      if (!(maxzero(kk) < it->j && it->j <= n + 1))
        throw SemanticError("invalid slide word: sigma_j precondition fails");
      lt = sigma_j(std::move(lt), it->j, kk);
      kk.insert(kk.begin() + (it->j - 1), 1);
    }
  }
  if (!slide_labeling(lt, content(w), SlideRule::OMEGA).ok)
    throw SemanticError("invalid slide word: reconstruction is not a slide tree");
  return lt;
}

inline Tree tree_of_word(const Word& w) { return canonicalize(tree_of_word_labeled(w)); }

}  // namespace slidebij
