#pragma once

#include "slidebij/patterns.hpp"
#include "slidebij/slide.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace slidebij {

// The unique caterpillar candidate for an edge word w: build the spine, label
// descent leaves (left edge label greater than right) with the left edge's
// label, then fill nondescent leaves left to right with the smallest unused
// label among c,1..n — skipping to the second smallest when the smallest
// equals the edge immediately to the right.  The right end contributes one
// descent leaf (taking the last edge's label) and one final nondescent leaf.
inline Tree tree_of_caterpillar_word(const Word& w) {
  if (!avoids_212(w))
    throw SemanticError("tree_of_caterpillar_word: word contains the pattern 2-1-2");
  int n = static_cast<int>(w.size());
  Tree t = star_tree();
  if (n == 0) return t;
  t.vs[t.root].leaves = {kLeafB};

  // Spine vertices v[1..n]; the parent edge of v[i] carries w_i.
  std::vector<int> spine(n + 1, t.root);
  for (int i = 1; i <= n; ++i) {
    spine[i] = t.new_vertex(spine[i - 1]);
    t.vs[spine[i - 1]].kids.push_back(spine[i]);
    t.vs[spine[i]].elabel = w[i - 1];
  }

  // Gap i sits between edges w_i and w_{i+1} (i = 1..n-1); gap n is the right
  // end, holding both a descent and a nondescent leaf.
  std::vector<std::optional<Leaf>> gap_label(n + 1);
  std::vector<char> used(n + 1, 0);  // numeric labels taken by descent leaves
  for (int i = 1; i < n; ++i)
    if (w[i - 1] > w[i]) {
      gap_label[i] = num_leaf(w[i - 1]);
      used[w[i - 1]] = 1;
    }
  if (used[w[n - 1]])
    throw SemanticError("tree_of_caterpillar_word: duplicate descent label");
  Leaf end_descent = num_leaf(w[n - 1]);
  used[w[n - 1]] = 1;

  std::vector<Leaf> unused = {kLeafC};
  for (int v = 1; v <= n; ++v)
    if (!used[v]) unused.push_back(num_leaf(v));

  auto take = [&](std::optional<int> right_edge) {
    if (unused.empty())
      throw SemanticError("tree_of_caterpillar_word: ran out of leaf labels");
    std::size_t pick = 0;
    if (right_edge && unused[0] == Leaf{*right_edge}) {
      if (unused.size() < 2)
        throw SemanticError("tree_of_caterpillar_word: ran out of leaf labels");
      pick = 1;
    }
    Leaf l = unused[pick];
    unused.erase(unused.begin() + pick);
    return l;
  };

  for (int i = 1; i < n; ++i)
    if (!gap_label[i]) gap_label[i] = take(w[i]);
  Leaf end_nondescent = take(std::nullopt);

  for (int i = 1; i < n; ++i) t.vs[spine[i]].leaves.push_back(*gap_label[i]);
  t.vs[spine[n]].leaves = {end_descent, end_nondescent};

  // Sanity: every label used exactly once (guaranteed for 2-1-2 avoiders).
  std::vector<Leaf> ls;
  t.all_leaves(ls);
  std::sort(ls.begin(), ls.end());
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end())
    throw SemanticError("tree_of_caterpillar_word: duplicate leaf label");
  return t;
}

// Word statistics for letter i of w: the rightmost run length, the repeats
// right of the rightmost i (all letters / only larger letters), and the
// number of zero parts of the content right of position i.
struct WordStats {
  int ell = 0;
  int total_rep = 0;
  int big_rep = 0;
  int z = 0;
};

inline WordStats word_stats(const Word& w, int i) {
  int n = static_cast<int>(w.size());
  int last = -1;
  for (int pos = 0; pos < n; ++pos)
    if (w[pos] == i) last = pos;
  if (last == -1) throw SemanticError("word_stats: letter does not occur");
  WordStats s;
  int run_end = last;
  while (run_end - s.ell >= 0 && w[run_end - s.ell] == i) ++s.ell;
  Composition suffix_count(n + 1, 0);
  for (int pos = last + 1; pos < n; ++pos) ++suffix_count[w[pos]];
  for (int j = 1; j <= n; ++j) {
    if (j == i) continue;
    int extra = std::max(suffix_count[j] - 1, 0);
    s.total_rep += extra;
    if (j > i) s.big_rep += extra;
  }
  s.z = static_cast<int>(zeros_right_of(content(w), i));
  return s;
}

// Word-level membership test for caterpillar slide trees.
inline bool caterpillar_member(const Word& w, SlideRule rule) {
  Composition k = content(w);
  if (!is_reverse_catalan(k)) return false;
  if (!avoids_212(w) || !avoids_23bar2_1(w)) return false;
  int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i) {
    if (k[i - 1] == 0) continue;
    WordStats s = word_stats(w, i);
    int lhs = rule == SlideRule::PSI ? s.total_rep + s.ell : s.big_rep;
    if (lhs < s.z) return false;
  }
  return true;
}

inline std::vector<Word> enumerate_caterpillar_words(const Composition& k, SlideRule rule) {
  return enumerate_avoiders(k, {[rule](const Word& w) { return caterpillar_member(w, rule); }});
}

// The edge word of a caterpillar member: slide labels read from the root.
inline Word caterpillar_edge_word(const Tree& t, const Composition& k, SlideRule rule) {
  if (!is_caterpillar(t)) throw SemanticError("caterpillar_edge_word: tree is not a caterpillar");
  auto res = slide_labeling(t, k, rule);
  if (!res.ok) throw SemanticError("caterpillar_edge_word: tree is not a slide set member");
  Word w;
  int v = res.labeled.root;
  while (!res.labeled.vs[v].kids.empty()) {
    if (res.labeled.vs[v].kids.size() != 1)
      throw SemanticError("caterpillar_edge_word: branching vertex in a caterpillar");
    v = res.labeled.vs[v].kids.front();
    w.push_back(res.labeled.vs[v].elabel);
  }
  return w;
}

}  // namespace slidebij
