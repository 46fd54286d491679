#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "r1space/canon.hpp"
#include "r1space/core.hpp"

using namespace r1;

namespace {

Approximation ap(std::initializer_list<Block> blocks) {
  return Approximation(std::vector<Block>(blocks));
}

// Empty < Stem < any Leaves; Leaves(I) below Leaves(I') iff I subset of I'
bool tree_below(const CanonicalTree& a, const CanonicalTree& b) {
  using K = CanonicalTree::Kind;
  if (a.kind == K::Empty) return true;
  if (a.kind == K::Stem) return b.kind != K::Empty;
  if (b.kind != K::Leaves) return false;
  return std::includes(b.positions.begin(), b.positions.end(), a.positions.begin(),
                       a.positions.end());
}

}  // namespace

TEST_CASE("tree family and text form") {
  for (int n = 0; n <= 8; ++n) {
    auto trees = enumerate_trees(n);
    CHECK(trees.size() == (size_t{2} << n) + 1);
    std::set<std::string> texts;
    for (const CanonicalTree& T : trees) {
      texts.insert(T.to_text());
      CHECK(CanonicalTree::from_text(n, T.to_text()) == T);
    }
    CHECK(texts.size() == trees.size());
  }
  CHECK(enumerate_trees(1)[0].to_text() == "E");
  CHECK(enumerate_trees(1)[1].to_text() == "S");
  CHECK(enumerate_trees(1)[2].to_text() == "L{0}");
  CHECK_THROWS(CanonicalTree::leaves(2, {}));
  CHECK_THROWS(CanonicalTree::leaves(2, {3}));
}

TEST_CASE("project") {
  Block u(5, {1, 3, 4});
  auto p = project(CanonicalTree::leaves(2, {0, 2}), u);
  CHECK(p.has_stem);
  CHECK(p.m == 5);
  CHECK(p.leaves == std::vector<int>{1, 4});

  auto e = project(CanonicalTree::empty(2), u);
  CHECK_FALSE(e.has_stem);
  CHECK(e.nodes() == NodeSet{Node::root()});

  auto full = project(CanonicalTree::full(2), u);
  CHECK(full.nodes() == u.nodes());

  CHECK_THROWS(project(CanonicalTree::stem(1), u));  // shape mismatch
}

TEST_CASE("et_equiv") {
  CHECK(et_equiv(CanonicalTree::empty(1), Block(4, {0, 1}), Block(5, {2, 3})));
  CHECK(et_equiv(CanonicalTree::stem(1), Block(4, {0, 1}), Block(4, {2, 3})));
  CHECK_FALSE(et_equiv(CanonicalTree::stem(1), Block(4, {0, 1}), Block(5, {0, 1})));
  CHECK(et_equiv(CanonicalTree::leaves(1, {1}), Block(4, {0, 2}), Block(4, {1, 2})));
}

TEST_CASE("canonical_equiv and tree sequences") {
  Approximation a = ap({Block(0, {0}), Block(2, {0, 1})});
  Approximation b = ap({Block(0, {0}), Block(2, {1, 2})});
  TreeSeq all_empty({CanonicalTree::empty(0), CanonicalTree::empty(1)});
  TreeSeq all_full({CanonicalTree::full(0), CanonicalTree::full(1)});
  TreeSeq mixed({CanonicalTree::leaves(0, {0}), CanonicalTree::stem(1)});
  CHECK(canonical_equiv(all_empty, a, b));
  CHECK_FALSE(canonical_equiv(all_full, a, b));
  CHECK(canonical_equiv(all_full, a, a));
  CHECK(canonical_equiv(mixed, a, b));
  CHECK_THROWS(canonical_equiv(all_full, a, ap({Block(0, {0})})));

  CHECK(TreeSeq::from_text("L{0};S").to_text() == "L{0};S");
  CHECK_THROWS(TreeSeq({CanonicalTree::empty(1)}));  // wrong family at position 0
}

TEST_CASE("census") {
  CHECK(enumerate_treeseqs(1).size() == 3);
  CHECK(enumerate_treeseqs(2).size() == 15);
  CHECK(enumerate_treeseqs(3).size() == 135);
  CHECK(canonical_census(1) == 3);
  CHECK(canonical_census(2) == 15);
  CHECK(canonical_census(3) == 135);
  CHECK(canonical_census(4) == 2295);
  CHECK_THROWS(canonical_census(0));
}

TEST_CASE("project_member") {
  CHECK(project_member(CanonicalTree::stem(1), 1, initial_tree(3)).size() == 2);
  CHECK(project_member(CanonicalTree::empty(1), 1, initial_tree(3)).size() == 1);
  CHECK(project_member(CanonicalTree::full(0), 0, initial_tree(2)).size() == 3);
}

TEST_CASE("projection is monotone in the tree") {
  for (int n = 0; n <= 3; ++n) {
    std::vector<Block> blocks;
    for (int m = n; m <= 6; ++m) {
      for (const Block& u : enumerate_subtrees(initial_tree(m + 1), n, Approximation())) {
        if (u.m == m) blocks.push_back(u);
      }
    }
    auto trees = enumerate_trees(n);
    for (const CanonicalTree& T : trees) {
      for (const CanonicalTree& U : trees) {
        if (!tree_below(T, U)) continue;
        for (const Block& u : blocks) {
          NodeSet small = project(T, u).nodes();
          NodeSet big = project(U, u).nodes();
          CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        }
      }
    }
  }
}

TEST_CASE("E_T' refines E_T exactly when T is below T'") {
  Member x = initial_tree(6);
  for (int n = 0; n <= 2; ++n) {
    auto blocks = enumerate_subtrees(x, n, Approximation());
    auto trees = enumerate_trees(n);
    for (const CanonicalTree& T : trees) {
      for (const CanonicalTree& U : trees) {
        bool refines = true;  // every E_U class sits inside an E_T class
        for (size_t i = 0; i < blocks.size() && refines; ++i) {
          for (size_t j = i + 1; j < blocks.size() && refines; ++j) {
            if (et_equiv(U, blocks[i], blocks[j]) && !et_equiv(T, blocks[i], blocks[j]))
              refines = false;
          }
        }
        CHECK(refines == tree_below(T, U));
      }
    }
  }
}

TEST_CASE("distinct tree sequences induce distinct relations at depth n+2") {
  for (int n = 1; n <= 2; ++n) {
    auto elems = enumerate_approx(initial_tree(n + 2), n);
    std::set<std::vector<bool>> tables;
    for (const TreeSeq& seq : enumerate_treeseqs(n)) {
      std::vector<bool> table;
      for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i + 1; j < elems.size(); ++j)
          table.push_back(canonical_equiv(seq, elems[i], elems[j]));
      }
      CHECK(tables.insert(table).second);
    }
    CHECK(tables.size() == canonical_census(n));
  }
}
