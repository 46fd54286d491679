#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "r1space/core.hpp"
#include "r1space/ellentuck.hpp"

using namespace r1;

namespace {

// all set partitions of {0..n-1} as label tables (restricted growth strings)
std::vector<std::vector<long>> set_partitions(int n) {
  std::vector<std::vector<long>> out;
  std::vector<long> acc(n, 0);
  auto rec = [&](auto&& self, int i, long maxed) -> void {
    if (i == n) {
      out.push_back(acc);
      return;
    }
    for (long c = 0; c <= maxed + 1; ++c) {
      acc[i] = c;
      self(self, i + 1, std::max(maxed, c));
    }
  };
  rec(rec, 1, 0);
  return out;
}

// brute-force existence oracle: is there any M of size >= target on which the
// table agrees with some E_I?
bool er_solvable(const RelationTable& table, int target) {
  for (int size = table.N; size >= target; --size) {
    bool found = false;
    for_each_combination(table.N, size, [&](const std::vector<int>& M) {
      for (const IndexSet& I : enumerate_index_sets(table.k)) {
        ErCertificate cert{M, I, 0};
        auto sets = ksubsets_of(M, table.k);
        long n = static_cast<long>(sets.size());
        cert.verified_pairs = n * (n - 1) / 2;
        if (verify_er_certificate(table, cert)) {
          found = true;
          return false;
        }
      }
      return true;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("e_I_equiv") {
  CHECK(e_I_equiv({0}, {1, 3}, {1, 5}));
  CHECK(e_I_equiv({}, {1, 3}, {2, 5}));
  CHECK_FALSE(e_I_equiv({0, 1}, {1, 3}, {1, 5}));
  CHECK_THROWS(e_I_equiv({0}, {1, 3}, {1}));
  CHECK_THROWS(e_I_equiv({2}, {1, 3}, {1, 5}));
}

TEST_CASE("index set enumeration") {
  auto sets = enumerate_index_sets(2);
  REQUIRE(sets.size() == 4);
  CHECK(sets[0] == IndexSet{});
  CHECK(sets[1] == IndexSet{0});
  CHECK(sets[2] == IndexSet{0, 1});
  CHECK(sets[3] == IndexSet{1});
}

TEST_CASE("finite_ramsey") {
  auto constant = RelationTable::from_function(2, 5, [](const KSet&) { return 0L; });
  auto M = finite_ramsey(constant, 3);
  REQUIRE(M.has_value());
  CHECK(*M == std::vector<int>{0, 1, 2, 3, 4});

  auto parity =
      RelationTable::from_function(2, 5, [](const KSet& x) { return (x[0] + x[1]) % 2L; });
  M = finite_ramsey(parity, 3);
  REQUIRE(M.has_value());
  CHECK(*M == std::vector<int>{0, 2, 4});
  CHECK(verify_monochromatic(parity, *M));

  // pentagon coloring: edges of C5 one color, diagonals the other; no
  // monochromatic triangle (the R(3,3)=6 extremal example)
  auto c5 = RelationTable::from_function(2, 5, [](const KSet& x) {
    int d = x[1] - x[0];
    return (d == 1 || d == 4) ? 0L : 1L;
  });
  CHECK_FALSE(finite_ramsey(c5, 3).has_value());
}

TEST_CASE("er_canonize on globally canonical relations") {
  auto first = RelationTable::from_function(2, 6, [](const KSet& x) { return long(x[0]); });
  auto cert = er_canonize(first, 4);
  REQUIRE(cert.has_value());
  CHECK(cert->M == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(cert->I == IndexSet{0});
  CHECK(verify_er_certificate(first, *cert));

  for (const IndexSet& I : enumerate_index_sets(2)) {
    auto table = RelationTable::from_function(2, 7, [&](const KSet& x) {
      long key = 0;
      for (int i : I) key = key * 100 + x[i] + 1;
      return key;
    });
    auto c = er_canonize(table, 3);
    REQUIRE(c.has_value());
    CHECK(c->M == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(c->I == I);
  }
}

TEST_CASE("er_canonize parity relation lands on an even-spaced set") {
  auto parity =
      RelationTable::from_function(2, 8, [](const KSet& x) { return (x[0] + x[1]) % 2L; });
  auto cert = er_canonize(parity, 3);
  REQUIRE(cert.has_value());
  CHECK(verify_er_certificate(parity, *cert));
  CHECK(cert->M.size() == 4);
  // the canonical witness: all labels equal on {0,2,4,6}
  ErCertificate handmade{{0, 2, 4, 6}, {}, 15};
  CHECK(verify_er_certificate(parity, handmade));
}

TEST_CASE("all 52 set partitions of a 5-set canonize at k=1") {
  auto partitions = set_partitions(5);
  REQUIRE(partitions.size() == 52);
  for (const auto& labels : partitions) {
    auto table =
        RelationTable::from_function(1, 5, [&](const KSet& x) { return labels[x[0]]; });
    auto cert = er_canonize(table, 3);
    REQUIRE(cert.has_value());
    CHECK(verify_er_certificate(table, *cert));
  }
}

TEST_CASE("er_canonize agrees with a brute-force existence oracle") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<long> lab(0, 3);
    auto table =
        RelationTable::from_function(2, 7, [&](const KSet&) { return lab(rng); });
    auto cert = er_canonize(table, 3);
    CHECK(cert.has_value() == er_solvable(table, 3));
    if (cert) CHECK(verify_er_certificate(table, *cert));
  }
}

TEST_CASE("relation table totality") {
  RelationTable t;
  t.k = 1;
  t.N = 3;
  t.labels[{0}] = 0;
  CHECK_THROWS_AS(t.validate_total(), std::invalid_argument);
  CHECK_THROWS_AS(er_canonize(t, 2), std::invalid_argument);
}
