#pragma once

#include "slidebij/tree.hpp"

#include <deque>
#include <map>
#include <string>
#include <vector>

namespace slidebij {

enum class SlideRule { PSI, OMEGA };

struct SlideLabeling {
  bool ok = false;
  Tree labeled;                 // input tree with elabel set on every internal edge
  std::vector<int> order;       // vertex ids in the order their parent edges were labeled
  int fail_step = 0;            // step l at which the labeling failed
  std::string reason;
};

namespace detail {

// Connected component of `seed` under labeled edges only.
inline std::vector<int> labeled_component(const Tree& t, int seed) {
  std::vector<int> comp = {seed};
  std::vector<char> in(t.vs.size(), 0);
  in[seed] = 1;
  std::deque<int> queue = {seed};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    int p = t.vs[v].parent;
    if (p >= 0 && t.vs[v].elabel != 0 && !in[p]) {
      in[p] = 1;
      comp.push_back(p);
      queue.push_back(p);
    }
    for (int kid : t.vs[v].kids) {
      if (t.vs[kid].elabel != 0 && !in[kid]) {
        in[kid] = 1;
        comp.push_back(kid);
        queue.push_back(kid);
      }
    }
  }
  return comp;
}

// Minimum over the boundary branches of a labeled-edge component, excluding
// the leaf `skip_leaf` and the boundary edge into vertex `skip_kid`.  The
// parent edge of the component's top vertex is never counted (it points
// toward a).
inline std::optional<Leaf> component_branch_min(const Tree& t, const std::vector<int>& comp,
                                                std::optional<Leaf> skip_leaf, int skip_kid) {
  std::vector<char> in(t.vs.size(), 0);
  for (int v : comp) in[v] = 1;
  std::optional<Leaf> best;
  auto consider = [&](Leaf l) {
    if (!best || l < *best) best = l;
  };
  for (int v : comp) {
    for (Leaf l : t.vs[v].leaves)
      if (!(skip_leaf && l == *skip_leaf)) consider(l);
    for (int kid : t.vs[v].kids)
      if (!in[kid] && kid != skip_kid) consider(t.subtree_min(kid));
  }
  return best;
}

}  // namespace detail

// The k-slide labeling algorithm: for l = n down to 1, label k_l edges.  Each
// step finds the first unlabeled internal edge e on the path from leaf l
// toward a, contracts labeled edges (realized as labeled-edge components),
// compares the branch minima m_l and m_a on the two sides of e, and labels e
// with l iff l >= m_l >= m_a (OMEGA) or m_l >= m_a (PSI).
inline SlideLabeling slide_labeling(const Tree& input, const Composition& k, SlideRule rule) {
  SlideLabeling result;
  if (!is_trivalent(input)) throw SemanticError("slide_labeling: tree must be trivalent");
  int n = static_cast<int>(k.size());
  long long sum = 0;
  for (int part : k) sum += part;
  if (sum != n) throw SemanticError("slide_labeling: sum(k) must equal length(k)");
  if (input.num_numeric_leaves() != n)
    throw SemanticError("slide_labeling: tree and composition disagree on n");

  Tree t = input;
  for (auto& v : t.vs) v.elabel = 0;

  for (int l = n; l >= 1; --l) {
    for (int rep = 0; rep < k[l - 1]; ++rep) {
      int vl = t.vertex_of_leaf(num_leaf(l));
      int p = vl;
      int found = -1;
      while (p != t.root) {
        if (t.vs[p].elabel == 0) {
          found = p;
          break;
        }
        p = t.vs[p].parent;
      }
      if (found == -1) {
        result.fail_step = l;
        result.reason = "no unlabeled internal edge on the path from " + std::to_string(l) +
                        " to a";
        result.labeled = t;
        return result;
      }
      int upper_seed = t.vs[found].parent;
      auto lower = detail::labeled_component(t, found);
      auto upper = detail::labeled_component(t, upper_seed);
      auto ml = detail::component_branch_min(t, lower, num_leaf(l), -1);
      auto ma = detail::component_branch_min(t, upper, std::nullopt, found);
      if (!ml || !ma) throw SemanticError("slide_labeling: degenerate branch structure");
      bool good = (*ml >= *ma) && (rule == SlideRule::PSI || Leaf{l} >= *ml);
      if (!good) {
        result.fail_step = l;
        result.reason = "condition failed at step " + std::to_string(l) + ": m_l=" +
                        to_string(*ml) + ", m_a=" + to_string(*ma) +
                        (rule == SlideRule::OMEGA ? " (need l >= m_l >= m_a)"
                                                  : " (need m_l >= m_a)");
        result.labeled = t;
        return result;
      }
      t.vs[found].elabel = l;
      result.order.push_back(found);
    }
  }
  result.ok = true;
  result.labeled = std::move(t);
  return result;
}

inline bool is_member(const Tree& t, const Composition& k, SlideRule rule) {
  return slide_labeling(t, k, rule).ok;
}

// All trees obtained from T by an i-slide: insert v' in the middle of the
// a-side edge at v_i, move the branch with the minimal leaf plus any subset of
// the other non-a branches (leaf i must stay, and at least one branch besides
// i must remain at v_i).
inline std::vector<Tree> i_slides(const Tree& t, int i) {
  Leaf li = num_leaf(i);
  int v = t.vertex_of_leaf(li);
  if (v < 0) throw SemanticError("i_slides: " + std::to_string(i) + " is not a leaf");

  struct Child {
    bool leaf;
    Leaf l;
    int kid;
  };
  std::vector<Child> movable;
  for (Leaf l : t.vs[v].leaves)
    if (l != li) movable.push_back({true, l, -1});
  for (int kid : t.vs[v].kids) movable.push_back({false, t.subtree_min(kid), kid});

  std::vector<Tree> out;
  if (movable.size() < 2) return out;  // deg(v_i) = 3: nothing may slide

  std::size_t m_idx = 0;
  for (std::size_t idx = 1; idx < movable.size(); ++idx)
    if (movable[idx].l < movable[m_idx].l) m_idx = idx;
  std::vector<Child> rest;
  for (std::size_t idx = 0; idx < movable.size(); ++idx)
    if (idx != m_idx) rest.push_back(movable[idx]);

  // Every proper subset of `rest` may accompany the minimal branch.
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << rest.size()); ++mask) {
    Tree u = t;
    int vp;
    if (u.vs[v].parent == -1) {
      vp = u.new_vertex(-1);
      u.vs[v].parent = vp;
      u.vs[vp].kids.push_back(v);
      u.root = vp;
    } else {
      int parent = u.vs[v].parent;
      vp = u.new_vertex(parent);
      u.remove_kid(parent, v);
      u.vs[parent].kids.push_back(vp);
      u.vs[vp].kids.push_back(v);
      u.vs[v].parent = vp;
    }
    auto move_child = [&](const Child& ch) {
      if (ch.leaf) {
        u.remove_leaf(v, ch.l);
        u.vs[vp].leaves.push_back(ch.l);
      } else {
        u.remove_kid(v, ch.kid);
        u.vs[vp].kids.push_back(ch.kid);
        u.vs[ch.kid].parent = vp;
      }
    };
    move_child(movable[m_idx]);
    for (std::size_t bit = 0; bit < rest.size(); ++bit)
      if (mask & (std::size_t{1} << bit)) move_child(rest[bit]);
    out.push_back(std::move(u));
  }
  return out;
}

// The staged slide-set construction.  OMEGA: start from the a,b,c star and at
// step i attach leaf i to any internal vertex, then perform k_i i-slides.
// PSI: start with all of b,c,1..n at one vertex and perform the slides only.
inline std::vector<Tree> enumerate_slide_set(const Composition& k, SlideRule rule) {
  int n = static_cast<int>(k.size());
  long long sum = 0;
  for (int part : k) sum += part;
  if (sum != n) throw SemanticError("enumerate_slide_set: sum(k) must equal length(k)");

  std::vector<Tree> cur;
  if (rule == SlideRule::OMEGA) {
    cur.push_back(star_tree());
  } else {
    Tree t = star_tree();
    for (int i = 1; i <= n; ++i) t.vs[t.root].leaves.push_back(num_leaf(i));
    cur.push_back(t);
  }

  auto dedup = [](std::vector<Tree>& trees) {
    std::map<std::string, Tree> seen;
    for (Tree& t : trees) seen.emplace(serialize_tree(t), std::move(t));
    trees.clear();
    for (auto& [key, t] : seen) trees.push_back(std::move(t));
  };

  for (int i = 1; i <= n; ++i) {
    if (rule == SlideRule::OMEGA) {
      std::vector<Tree> attached;
      for (const Tree& t : cur) {
        for (int v = 0; v < static_cast<int>(t.vs.size()); ++v) {
          if (!t.vs[v].alive) continue;
          Tree u = t;
          u.vs[v].leaves.push_back(num_leaf(i));
          attached.push_back(std::move(u));
        }
      }
      cur = std::move(attached);
      dedup(cur);
    }
    for (int rep = 0; rep < k[i - 1]; ++rep) {
      std::vector<Tree> next;
      for (const Tree& t : cur)
        for (Tree& u : i_slides(t, i)) next.push_back(std::move(u));
      cur = std::move(next);
      dedup(cur);
    }
  }
  dedup(cur);
  return cur;
}

inline std::vector<std::string> slide_set_keys(const Composition& k, SlideRule rule) {
  std::vector<std::string> out;
  for (const Tree& t : enumerate_slide_set(k, rule)) out.push_back(serialize_tree(t));
  return out;  // already sorted: dedup uses an ordered map
}

}  // namespace slidebij
