#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "r1space/core.hpp"

// The projection-tree family on shape-n blocks, the projection maps, the
// induced equivalence relations, and canonical relations on length-n
// approximations given by tree sequences.

namespace r1 {

// An element of the family of downward-closed subtrees of the full shape-n
// block: the root alone, root+stem, or root+stem+leaves at a nonempty set of
// positions I within {0,...,n}.  There are 2^(n+1) + 1 of them.
struct CanonicalTree {
  enum class Kind { Empty = 0, Stem = 1, Leaves = 2 };
  int n = 0;
  Kind kind = Kind::Empty;
  std::vector<int> positions;  // nonempty, increasing, within {0..n}; Leaves only

  static CanonicalTree empty(int n) { return CanonicalTree{n, Kind::Empty, {}}; }
  static CanonicalTree stem(int n) { return CanonicalTree{n, Kind::Stem, {}}; }
  static CanonicalTree leaves(int n, std::vector<int> positions);
  static CanonicalTree full(int n);

  std::string to_text() const;  // "E", "S", or "L{i1,i2,...}"
  static CanonicalTree from_text(int n, const std::string& text);

  friend bool operator==(const CanonicalTree&, const CanonicalTree&) = default;
  friend auto operator<=>(const CanonicalTree&, const CanonicalTree&) = default;
};

// Image of a block under a projection tree: possibly just the root, or the
// stem with a (possibly empty) leaf subset.  Value equality is structural.
struct ProjectedBlock {
  bool has_stem = false;
  int m = -1;                // present iff has_stem
  std::vector<int> leaves;   // leaf values, increasing; nonempty implies has_stem

  NodeSet nodes() const;
  std::string to_text() const;

  friend bool operator==(const ProjectedBlock&, const ProjectedBlock&) = default;
  friend auto operator<=>(const ProjectedBlock&, const ProjectedBlock&) = default;
};

// T-projection of a shape-n block: keeps the nodes in the positions occurring
// in T (leaf positions index into the block's sorted leaf list).
// Throws std::invalid_argument on a shape mismatch.
ProjectedBlock project(const CanonicalTree& T, const Block& u);

// u and v are E_T-equivalent iff their T-projections coincide.
bool et_equiv(const CanonicalTree& T, const Block& u, const Block& v);

// All trees of the shape-n family, in the canonical order E < S < L{...} with
// leaf-position sets ordered lexicographically as sorted lists.
std::vector<CanonicalTree> enumerate_trees(int n);

// A sequence <T(0),...,T(n-1)> with T(i) in the shape-i family; defines a
// canonical equivalence relation on length-n approximations componentwise.
struct TreeSeq {
  std::vector<CanonicalTree> trees;

  TreeSeq() = default;
  explicit TreeSeq(std::vector<CanonicalTree> trees);

  int length() const { return static_cast<int>(trees.size()); }
  std::string to_text() const;  // components joined by ";"
  static TreeSeq from_text(const std::string& text);

  friend bool operator==(const TreeSeq&, const TreeSeq&) = default;
};

// Componentwise E_T equality.  Throws std::invalid_argument on length mismatch.
bool canonical_equiv(const TreeSeq& seq, const Approximation& a, const Approximation& b);

// All tree sequences of length n, lexicographic in the component order.
std::vector<TreeSeq> enumerate_treeseqs(int n);

// Number of canonical equivalence relations on length-n approximations:
// product over i < n of (2^(i+1) + 1).
std::uint64_t canonical_census(int n);

// Images of all shape-n sub-blocks of x under project, deduplicated, sorted.
std::vector<ProjectedBlock> project_member(const CanonicalTree& T, int n, const Member& x);

}  // namespace r1
