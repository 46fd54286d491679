#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "r1space/core.hpp"

// Constructive one-step pigeonhole: given a 2-coloring of the shape-k blocks
// beyond an approximation a inside a universe B, build a thinned member all of
// whose one-step extensions carry a single color.  Follows the classical
// three-stage construction: per-block monochromatic subtrees via the finite
// Ramsey subroutine, color stabilization across blocks, final thinning.

namespace r1 {

// Total 2-coloring of the shape-|a| blocks beyond a inside a declared universe.
// Keys are the text form of the colored block.
struct ExtensionColoring {
  Approximation a;
  std::map<std::string, int> colors;  // values 0 or 1

  int color_of(const Block& u) const;  // throws on a missing entry
};

struct HomogeneityCertificate {
  Member A;
  int color = 0;
  struct Entry {
    int source_index = 0;        // block index of the universe block scanned
    Block witness;               // monochromatic sub-block found there
    int witness_color = 0;
    std::string note;            // how the block size was justified
  };
  std::vector<Entry> transcript;
};

// Smallest universe size guaranteeing a monochromatic subset of the given size
// under a 2-coloring of subset_size-subsets; nullopt when outside the built-in
// table {R(2,2)=2, R(3,3)=6, R(4,4)=18} (k=0 reduces to the pigeonhole bound).
std::optional<int> guaranteed_universe(int subset_size, int mono_size);

// nullopt renders "exhausted": the truncation could not supply the needed
// Ramsey sizes.  Throws std::invalid_argument if a is not inside B or the
// coloring is not total over the extension universe.
std::optional<HomogeneityCertificate> homogenize(const Member& B, const ExtensionColoring& coloring,
                                                 int new_blocks);

// Independent exhaustive re-check: every shape-|a| sub-block of cert.A beyond
// a has cert.color, the prefix of A up to a's depth matches B, and every later
// block of A is a sub-block of a block of B.
bool verify_homogeneity(const Member& B, const ExtensionColoring& coloring,
                        const HomogeneityCertificate& cert);

}  // namespace r1
