#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "r1space/core.hpp"

using namespace r1;

namespace {

Approximation ap(std::initializer_list<Block> blocks) {
  return Approximation(std::vector<Block>(blocks));
}

Member mb(std::initializer_list<Block> blocks) { return Member(std::vector<Block>(blocks)); }

bool nodeset_le(const NodeSet& small, const NodeSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// independent oracle: all length-n block sequences drawn from the sub-block
// pool that form a valid approximation inside x
std::set<std::string> brute_force_approx(const Member& x, int n) {
  std::vector<Block> pool;
  for (int k = 0; k < x.depth(); ++k) {
    auto more = enumerate_subtrees(x, k, Approximation());
    pool.insert(pool.end(), more.begin(), more.end());
  }
  std::set<std::string> out;
  std::vector<Block> acc;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(acc.size()) == n) {
      out.insert(Approximation(acc).to_text());
      return;
    }
    for (const Block& u : pool) {
      if (u.shape() != static_cast<int>(acc.size())) continue;
      if (!acc.empty() && u.m <= acc.back().m) continue;
      acc.push_back(u);
      self(self);
      acc.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

TEST_CASE("block construction and text form") {
  Block u(2, {0, 2});
  CHECK(u.shape() == 1);
  CHECK(u.to_text() == "2:0,2");
  CHECK(Block::from_text("2:0,2") == u);
  CHECK(u.contains(Block(2, {0})));
  CHECK_FALSE(u.contains(Block(2, {1})));
  CHECK_FALSE(u.contains(Block(3, {0})));
  CHECK_THROWS(Block(2, {0, 3}));   // leaf beyond m
  CHECK_THROWS(Block(2, {1, 1}));   // not strictly increasing
  CHECK_THROWS(Block(2, {}));       // empty leaves
}

TEST_CASE("approximation invariants and text form") {
  Approximation a = ap({Block(0, {0}), Block(2, {0, 1})});
  CHECK(a.to_text() == "0:0|2:0,1");
  CHECK(Approximation::from_text("0:0|2:0,1") == a);
  CHECK(Approximation::from_text("").empty());
  CHECK_THROWS(ap({Block(0, {0}), Block(2, {0})}));           // shape 0 at position 1
  CHECK_THROWS(ap({Block(2, {0}), Block(1, {0, 1})}));        // indices not increasing
  CHECK_THROWS(ap({Block(1, {0, 1})}));                       // shape 1 at position 0
}

TEST_CASE("truncate returns the first n blocks") {
  Member x = mb({Block(0, {0}), Block(1, {0, 1}), Block(2, {0, 1, 2})});
  CHECK(truncate(x, 0).empty());
  CHECK(truncate(x, 2) == ap({Block(0, {0}), Block(1, {0, 1})}));
  Approximation a = ap({Block(2, {1}), Block(5, {0, 2})});
  CHECK(truncate(a, 1) == ap({Block(2, {1})}));
  CHECK_THROWS_AS(truncate(x, 4), std::out_of_range);
}

TEST_CASE("le_fin basics") {
  CHECK(le_fin(ap({Block(2, {1})}), ap({Block(0, {0}), Block(2, {1, 2})})));
  CHECK_FALSE(le_fin(ap({Block(2, {1})}), ap({Block(0, {0}), Block(3, {1, 2})})));
  Member b = initial_tree(4);
  for (int n = 0; n <= 4; ++n) CHECK(le_fin(truncate(b, n), b));
}

TEST_CASE("le_member basics") {
  Member x = mb({Block(0, {0}), Block(1, {0, 1}), Block(2, {0, 1, 2})});
  CHECK(le_member(x, x));
  CHECK(le_member(mb({Block(1, {0}), Block(2, {0, 2})}), x));
  // a shape-1 block cannot serve as a member's first block
  CHECK_THROWS(mb({Block(1, {0, 1})}));
}

TEST_CASE("depth_of") {
  Member b = mb({Block(0, {0}), Block(3, {0, 1}), Block(7, {1, 4, 6})});
  CHECK(depth_of(b, Approximation()) == 0);
  CHECK(depth_of(b, ap({Block(3, {1})})) == 2);
  CHECK_FALSE(depth_of(b, ap({Block(5, {0})})).has_value());
  Member x = initial_tree(5);
  for (int n = 0; n <= 5; ++n) CHECK(depth_of(x, truncate(x, n)) == n);
}

TEST_CASE("enumerate_subtrees counts and order") {
  Member x = initial_tree(3);
  auto k1 = enumerate_subtrees(x, 1, Approximation());
  REQUIRE(k1.size() == 4);
  CHECK(k1[0].to_text() == "1:0,1");
  CHECK(k1[3].to_text() == "2:1,2");
  CHECK(std::is_sorted(k1.begin(), k1.end()));
  CHECK(enumerate_subtrees(x, 3, Approximation()).empty());
  CHECK(enumerate_subtrees(x, 0, Approximation()).size() == 6);
  // restriction strictly beyond the blocks touched by `after`
  auto beyond = enumerate_subtrees(x, 0, ap({Block(1, {0})}));
  REQUIRE(beyond.size() == 3);
  for (const Block& u : beyond) CHECK(u.m == 2);
  // an `after` that is not inside x yields nothing
  CHECK(enumerate_subtrees(x, 0, ap({Block(5, {0})})).empty());
}

TEST_CASE("enumerate_approx counts and brute-force oracle") {
  CHECK(enumerate_approx(initial_tree(3), 2).size() == 10);
  CHECK(enumerate_approx(initial_tree(2), 2).size() == 1);
  auto zero = enumerate_approx(initial_tree(3), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  for (int depth = 1; depth <= 4; ++depth) {
    Member x = initial_tree(depth);
    for (int n = 1; n <= std::min(depth, 3); ++n) {
      auto fast = enumerate_approx(x, n);
      std::set<std::string> got;
      for (const Approximation& a : fast) {
        CHECK(le_fin(a, x));
        got.insert(a.to_text());
      }
      CHECK(got.size() == fast.size());  // no duplicates
      CHECK(got == brute_force_approx(x, n));
    }
  }
}

TEST_CASE("glue") {
  Member b = initial_tree(5);
  CHECK(glue(Approximation(), b).member == b);
  CHECK_FALSE(glue(Approximation(), b).ran_short);
  CHECK(glue(truncate(b, 2), b).member == b);

  auto g = glue(ap({Block(1, {0})}), b);
  CHECK_FALSE(g.ran_short);
  CHECK(g.member == mb({Block(1, {0}), Block(2, {0, 1}), Block(3, {0, 1, 2}),
                        Block(4, {0, 1, 2, 3})}));

  // nothing beyond the approximation: result is just a, flagged
  auto short_glue = glue(ap({Block(4, {0})}), b);
  CHECK(short_glue.ran_short);
  CHECK(short_glue.member == mb({Block(4, {0})}));
}

TEST_CASE("le_fin structural test agrees with node-set inclusion") {
  std::mt19937 rng(1234);
  Member x = initial_tree(5);
  std::vector<Approximation> pool;
  for (int n = 1; n <= 3; ++n) {
    auto more = enumerate_approx(x, n);
    pool.insert(pool.end(), more.begin(), more.end());
  }
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const Approximation& a = pool[pick(rng)];
    const Approximation& b = pool[pick(rng)];
    CHECK(le_fin(a, b) == nodeset_le(a.nodes(), b.nodes()));  // le_fin asserts this internally too
  }
}

TEST_CASE("le_member is a partial order on small members") {
  Member x = initial_tree(4);
  std::vector<Member> members;
  for (int d = 1; d <= 3; ++d) {
    for (const Approximation& a : enumerate_approx(x, d)) members.push_back(to_member(a));
  }
  size_t n = members.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) rel[i][j] = le_member(members[i], members[j]);
  }
  for (size_t i = 0; i < n; ++i) {
    CHECK(rel[i][i]);
    for (size_t j = 0; j < n; ++j) {
      if (i != j && rel[i][j]) CHECK_FALSE(rel[j][i]);  // antisymmetry
      if (!rel[i][j]) continue;
      for (size_t k = 0; k < n; ++k) {
        if (rel[j][k]) CHECK(rel[i][k]);  // transitivity
      }
    }
  }
}

TEST_CASE("equal prefixes agree at every shorter length") {
  Member x = initial_tree(4);
  auto a2 = enumerate_approx(x, 2);
  for (const Approximation& a : a2) {
    for (const Approximation& b : a2) {
      if (a == b) {
        for (int i = 0; i <= 2; ++i) CHECK(truncate(a, i) == truncate(b, i));
      }
    }
  }
}
