#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

// Data model for the ambient height-2 tree, its finite blocks, approximations,
// truncated members, the inclusion orderings, and the exhaustive enumerators
// everything else is built on.  All types are immutable values and every
// operation is pure and deterministic.

namespace r1 {

// A node of the ambient tree: the root, a stem <m>, or a leaf <m,i> with i <= m.
// Total order: root, then per stem index m the stem followed by its leaves.
struct Node {
  enum class Kind { Root = 0, Stem = 1, Leaf = 2 };
  Kind kind = Kind::Root;
  int m = -1;
  int i = -1;

  static Node root() { return Node{}; }
  static Node stem(int m) { return Node{Kind::Stem, m, -1}; }
  static Node leaf(int m, int i);

  friend bool operator==(const Node& a, const Node& b) {
    return a.kind == b.kind && a.m == b.m && a.i == b.i;
  }
  friend bool operator<(const Node& a, const Node& b) {
    if (a.m != b.m) return a.m < b.m;
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.i < b.i;
  }
};

using NodeSet = std::set<Node>;

// One finite subtree of the m-th block of the ambient tree: the stem <m> plus a
// nonempty, strictly increasing set of leaf positions, each <= m.  A block with
// k+1 leaves has shape k.  The root is considered part of every block.
struct Block {
  int m = 0;
  std::vector<int> leaves;

  Block() = default;
  Block(int m, std::vector<int> leaves);

  int shape() const { return static_cast<int>(leaves.size()) - 1; }
  // true iff other has the same stem index and a leaf subset of ours
  bool contains(const Block& other) const;
  NodeSet nodes() const;  // root, stem, leaves

  std::string to_text() const;  // "m:l1,l2,..."
  static Block from_text(const std::string& text);

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

// A finite sequence of blocks with strictly increasing indices where the j-th
// block has shape j.  An Approximation of length n is an element of AR_n.
struct Approximation {
  std::vector<Block> blocks;

  Approximation() = default;
  explicit Approximation(std::vector<Block> blocks);

  int length() const { return static_cast<int>(blocks.size()); }
  bool empty() const { return blocks.empty(); }
  NodeSet nodes() const;

  std::string to_text() const;  // blocks joined by "|"; empty -> ""
  static Approximation from_text(const std::string& text);

  friend bool operator==(const Approximation&, const Approximation&) = default;
  friend auto operator<=>(const Approximation&, const Approximation&) = default;
};

// A depth-d truncation of an infinite member: structurally the same invariants
// as an Approximation, kept as a distinct role because members are search
// universes while approximations are search objects.
struct Member {
  std::vector<Block> blocks;

  Member() = default;
  explicit Member(std::vector<Block> blocks);

  int depth() const { return static_cast<int>(blocks.size()); }
  NodeSet nodes() const;
  Approximation as_approximation() const { return Approximation(blocks); }

  std::string to_text() const;
  static Member from_text(const std::string& text);

  friend bool operator==(const Member&, const Member&) = default;
  friend auto operator<=>(const Member&, const Member&) = default;
};

// The first `depth` blocks of the ambient tree itself (block j = full block j).
Member initial_tree(int depth);

Member to_member(const Approximation& a);

// First n blocks.  Throws std::out_of_range if n exceeds the available depth.
Approximation truncate(const Approximation& x, int n);
Approximation truncate(const Member& x, int n);

// a <= b in the finite ordering: every block of a is contained in a block of b
// with the same index.  Computed both structurally and as node-set inclusion;
// the two must agree.
bool le_fin(const Approximation& a, const Approximation& b);
bool le_fin(const Approximation& a, const Member& b);

// y <= x on members (same dual computation).
bool le_member(const Member& y, const Member& x);

// Least n with le_fin(a, truncate(b, n)); nullopt renders "infinite" relative
// to the truncation.
std::optional<int> depth_of(const Member& b, const Approximation& a);

// All blocks of shape k contained in blocks of x at positions >= depth_of(x,
// after); lexicographic by (block index, leaf set).  `after` empty means no
// restriction; an `after` not inside x yields the empty list.
std::vector<Block> enumerate_subtrees(const Member& x, int k, const Approximation& after);

// All length-n approximations a with le_fin(a, x), lexicographic.
std::vector<Approximation> enumerate_approx(const Member& x, int n);

struct GlueResult {
  Member member;
  // set when b had no blocks beyond a at all, so the result is just a
  bool ran_short = false;
};

// Member beginning with a's blocks followed by greedy lexicographic-least
// thinnings of b's blocks strictly beyond a's block-index horizon.
// Throws std::invalid_argument if the first available block is too small.
GlueResult glue(const Approximation& a, const Member& b);

// Visit all k-element subsets of items in lexicographic order.
void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace r1
