#pragma once

#include <cstdint>
#include <string>

#include "r1space/core.hpp"
#include "r1space/ellentuck.hpp"

// Builtin label features so that relations and colorings can be named on the
// command line instead of shipped as label-table files.  Every feature is a
// pure function of the canonical serialization (plus the seed where stated).

namespace r1 {

// "name" or "name:arg", e.g. "stem_parity:1", "seeded_random:42", "length".
// Known names: const, stem_parity, min_leaf, max_leaf, leaf_sum_parity,
// length, last_block, seeded_random.
struct FeatureSpec {
  std::string name;
  int arg = 0;
  bool has_arg = false;

  static FeatureSpec parse(const std::string& text);  // throws on unknown name
  std::string to_text() const;
};

std::uint64_t fnv1a(const std::string& text, std::uint64_t seed);

// Label of a length-n approximation; component features read block arg.
//   const -> 0; stem_parity:i -> m of block i mod 2; min_leaf/max_leaf:i ->
//   extreme leaf of block i; leaf_sum_parity:i -> leaf sum of block i mod 2;
//   length -> n; last_block -> hash of the last block's text;
//   seeded_random:s -> hash of the text, reduced mod 6 so collisions occur.
long feature_label_approx(const FeatureSpec& spec, const Approximation& a);

// Label of a single block (doubles as a 2-coloring: always 0 or 1 for the
// parity and seeded_random features).
long feature_label_block(const FeatureSpec& spec, const Block& u);

// Label of a k-set; index features read coordinates (min_leaf:i -> x_i,
// max_leaf:i -> x_{k-1-i}, last_block -> x_{k-1}).
long feature_label_kset(const FeatureSpec& spec, const KSet& x);

}  // namespace r1
