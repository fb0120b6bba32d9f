#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slidebij/ones.hpp"

#include <set>

using namespace slidebij;

namespace {

Composition ones(int n) { return Composition(n, 1); }

// Collects the edge labels of the subtree rooted at v (including v's own).
void subtree_elabels(const Tree& t, int v, std::vector<int>& out) {
  if (t.vs[v].elabel) out.push_back(t.vs[v].elabel);
  for (int kid : t.vs[v].kids) subtree_elabels(t, kid, out);
}

// Rebuilds t with the subtree at prune_v replaced by the leaf min(B), then
// relabels numeric leaves order-preservingly to 1..m.
Tree prune_branch(const Tree& t, int prune_v) {
  Tree out;
  Leaf min_b = t.subtree_min(prune_v);
  auto rec = [&](auto&& self, int src, int dst_parent) -> void {
    int v = out.new_vertex(dst_parent);
    if (dst_parent >= 0)
      out.vs[dst_parent].kids.push_back(v);
    else
      out.root = v;
    out.vs[v].leaves = t.vs[src].leaves;
    for (int kid : t.vs[src].kids) {
      if (kid == prune_v)
        out.vs[v].leaves.push_back(min_b);
      else
        self(self, kid, v);
    }
  };
  rec(rec, t.root, -1);
  // Order-preserving relabel of the numeric leaves.
  std::vector<int> nums;
  std::vector<Leaf> ls;
  out.all_leaves(ls);
  for (Leaf l : ls)
    if (l.is_num()) nums.push_back(l.num());
  std::sort(nums.begin(), nums.end());
  for (auto& vert : out.vs)
    for (Leaf& l : vert.leaves)
      if (l.is_num())
        l = num_leaf(static_cast<int>(
                         std::lower_bound(nums.begin(), nums.end(), l.num()) - nums.begin()) +
                     1);
  return out;
}

}  // namespace

TEST_CASE("nine-letter worked example") {
  Word p = parse_word("853769421");
  Tree t = rho(p);
  CHECK(serialize_tree(t) ==
        serialize_tree(parse_tree("(a,b,(8,(5,(((c,1),2),(7,((3,4),(6,9)))))))")));
  CHECK(is_member(t, ones(9), SlideRule::OMEGA));
  CHECK_FALSE(is_caterpillar(t));
  CHECK(phi(t) == p);
  CHECK(rho_hat_shape(p) == "8(5(3(2(1()),7(6(4(),9())))))");
}

TEST_CASE("small cases") {
  CHECK(serialize_tree(rho({})) == "(a,b,c)");
  CHECK(phi(star_tree()).empty());
  CHECK(serialize_tree(rho({1})) == "(a,b,(c,1))");
  CHECK(phi(parse_tree("(a,b,(c,1))")) == Word{1});
  // A decreasing permutation gives the decreasing caterpillar.
  Word dec = {3, 2, 1};
  CHECK(serialize_tree(rho(dec)) == serialize_tree(tree_of_caterpillar_word(dec)));
  CHECK(phi(rho(dec)) == dec);
  CHECK(rho_hat_shape(dec) == "3(2(1()))");
  CHECK_THROWS_AS(rho({1, 1}), SemanticError);  // not a permutation
  CHECK_THROWS_AS(phi(parse_tree("(a,b,(1,(2,c)))")), SemanticError);  // non-member
}

TEST_CASE("23-1 avoiders map to caterpillars via the chain construction") {
  for (int n = 0; n <= 5; ++n) {
    for (const Word& p : enumerate_avoiders(ones(n), {})) {
      bool avoids = !earliest_231(p).has_value();
      Tree t = rho(p);
      CHECK(is_caterpillar(t) == avoids);
      if (avoids)
        CHECK(serialize_tree(t) == serialize_tree(tree_of_caterpillar_word(p)));
      else
        CHECK(earliest_231(phi(t)).has_value());  // Lemma: phi of a non-caterpillar has 23-1
    }
  }
}

TEST_CASE("phi and rho are inverse bijections") {
  for (int n = 0; n <= 6; ++n) {
    // phi o rho = id on S_n, and the images are distinct.
    std::set<std::string> images;
    for (const Word& p : enumerate_avoiders(ones(n), {})) {
      Tree t = rho(p);
      CHECK(phi(t) == p);
      CHECK(images.insert(serialize_tree(t)).second);
    }
    // rho o phi = id on the slide set; image(rho) is the whole set.
    auto keys = slide_set_keys(ones(n), SlideRule::OMEGA);
    CHECK(images == std::set<std::string>(keys.begin(), keys.end()));
    for (const auto& key : keys) {
      Tree t = parse_tree(key);
      CHECK(serialize_tree(rho(phi(t))) == key);
    }
  }
}

TEST_CASE("branch minima do not slide inside their branch") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& key : slide_set_keys(ones(n), SlideRule::OMEGA)) {
      auto res = slide_labeling(parse_tree(key), ones(n), SlideRule::OMEGA);
      REQUIRE(res.ok);
      const Tree& lt = res.labeled;
      for (int v = 0; v < static_cast<int>(lt.vs.size()); ++v) {
        if (!lt.vs[v].alive || v == lt.root) continue;
        std::vector<int> labels;
        subtree_elabels(lt, v, labels);
        std::sort(labels.begin(), labels.end());
        std::vector<Leaf> ls;
        lt.subtree_leaves(v, ls);
        Leaf mn = lt.subtree_min(v);
        std::vector<int> expect;
        for (Leaf l : ls)
          if (l.is_num() && l != mn) expect.push_back(l.num());
        std::sort(expect.begin(), expect.end());
        CHECK(labels == expect);
      }
    }
  }
}

TEST_CASE("pruning any branch leaves a smaller all-ones member") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& key : slide_set_keys(ones(n), SlideRule::OMEGA)) {
      Tree t = parse_tree(key);
      for (int v = 0; v < static_cast<int>(t.vs.size()); ++v) {
        if (!t.vs[v].alive || v == t.root) continue;
        Tree pruned = canonicalize(prune_branch(t, v));
        CHECK(is_member(pruned, ones(pruned.num_numeric_leaves()), SlideRule::OMEGA));
      }
    }
  }
}
