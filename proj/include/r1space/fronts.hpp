#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "r1space/canon.hpp"
#include "r1space/core.hpp"

// Fronts on truncated members, the Schreier-like front, extension sets,
// separating tests, the inner map phi built from per-prefix projection trees,
// and a certificate-producing canonization search for relations on fronts.
//
// Everything here is truncation-relative: an operation that would quantify
// over infinite members instead quantifies over the declared universe, and
// outcomes distinguish refutation from running out of truncation.

namespace r1 {

struct Front {
  Member universe;
  std::vector<Approximation> elements;
};

// Total labeling of front elements, keyed by their text form.
struct FrontRelation {
  std::map<std::string, long> labels;
  long label_of(const Approximation& t) const;  // throws on a missing entry
};

// Tree in the shape-|s| family for each proper prefix s of a front element,
// keyed by the prefix's text form.
struct PhiAssignment {
  std::map<std::string, CanonicalTree> trees;
  const CanonicalTree& tree_for(const Approximation& s) const;  // throws if missing
};

struct PairReport {
  bool ok = true;
  std::optional<std::pair<Approximation, Approximation>> witness;
};

// No element is a proper prefix of another.
PairReport is_nash_williams(const Front& F);
// No le_fin between distinct elements.
PairReport is_sperner(const Front& F);

enum class CoverOutcome { Covered, Indeterminate, Uncovered };
struct CoverReport {
  CoverOutcome outcome = CoverOutcome::Covered;
  // uncovered depth-d members; for Indeterminate every one of these could
  // still be covered by an element extending past depth d
  std::vector<Approximation> witnesses;
};

// Does every depth-d member of the universe have an element of F as a prefix?
CoverReport covers(const Front& F, int d);

// Index of a shape-0 block in the fixed lexicographic enumeration of all
// shape-0 blocks of the ambient tree: m(m+1)/2 + leaf.
int shape0_enumeration_index(const Block& b);

// The Schreier-like front inside the universe: all t with |t| equal to the
// enumeration index of t(0) (index-0 entries excluded).
Front schreier_front(const Member& universe);

struct ExtensionSet {
  Approximation base;
  // tails y with base + y a legal approximation inside the universe;
  // includes the empty tail, lexicographic order
  std::vector<std::vector<Block>> items;
};

// Legal extension tails of s drawn from universe blocks strictly beyond
// max(depth_of(universe, s), depth_of(universe, t)).
ExtensionSet ext(const Member& universe, const Approximation& s,
                 const std::optional<Approximation>& t = std::nullopt);

Approximation concat(const Approximation& base, const std::vector<Block>& tail);

enum class SepOutcome { Separates, Collides, Vacuous };
struct SepReport {
  SepOutcome outcome = SepOutcome::Vacuous;
  std::optional<std::pair<Approximation, Approximation>> witness;  // colliding completions
};

// Do all completions of s and t into F (through common extension tails)
// receive distinct labels?  Vacuous when no completed extensions exist
// within the truncation.
SepReport separates(const Member& universe, const Approximation& s, const Approximation& t,
                    const Front& F, const FrontRelation& f);

// Truncation-relative mixing probe: true iff no sub-member of the universe
// separates s and t.  Exhaustive over all sub-members, so the universe depth
// is capped at 4.
bool mixes_within_truncation(const Member& universe, const Approximation& s,
                             const Approximation& t, const Front& F, const FrontRelation& f);

// phi(t) = union over i < |t| of the projection of t(i) under the tree
// assigned to the prefix of t of length i.
NodeSet build_phi(const Front& F, const PhiAssignment& assign, const Approximation& t);

// P is an initial-segment restriction of Q by block positions (j = 0 gives
// the bare root).  Non-strict: equality counts.
bool nodeset_prefix(const NodeSet& P, const NodeSet& Q);

struct InnerReport {
  bool inner = true;
  bool nash_williams = true;
  bool sperner = true;
  std::optional<Approximation> inner_witness;
  std::optional<std::pair<Approximation, Approximation>> nw_witness;
  std::optional<std::pair<Approximation, Approximation>> sperner_witness;
};

// phi is total over F, element text -> image node set.
InnerReport check_inner_ns_sperner(const Front& F, const std::map<std::string, NodeSet>& phi);

struct RepresentsReport {
  bool ok = true;
  std::optional<std::pair<Approximation, Approximation>> witness;
};

// labels equal iff phi-images equal, over all pairs of elements.
RepresentsReport represents(const Front& F, const std::map<std::string, NodeSet>& phi,
                            const FrontRelation& R);

struct FrontCertificate {
  Member C;
  PhiAssignment assign;
  long verified_pairs = 0;
};

// Search sub-members C (largest first) and per-prefix tree assignments whose
// phi represents R on F|C with no proper inclusion or proper prefix between
// images of distinct elements.  nullopt when exhausted.
// Throws std::invalid_argument if F is not Nash-Williams.
std::optional<FrontCertificate> canonize_front(const Front& F, const FrontRelation& R,
                                               int min_blocks);

// Independent exhaustive re-check of a front certificate.
bool verify_front_certificate(const Front& F, const FrontRelation& R,
                              const FrontCertificate& cert);

// Elements of F lying inside X.
std::vector<Approximation> restrict_front(const Front& F, const Member& X);

// Proper prefixes r_i(t), i < |t|, of the given elements, deduplicated and
// ordered by (length, text).
std::vector<Approximation> proper_prefixes(const std::vector<Approximation>& elements);

}  // namespace r1
