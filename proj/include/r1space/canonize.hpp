#pragma once

#include <map>
#include <optional>
#include <string>

#include "r1space/canon.hpp"
#include "r1space/core.hpp"

// Certificate-producing canonization searches: find a sub-member on which a
// given equivalence relation on length-n approximations (or on shape-n blocks)
// coincides with one of the canonical relations.

namespace r1 {

// Total labeling of enumerate_approx(universe, n); equal labels = related.
struct ARnRelation {
  int n = 1;
  Member universe;
  std::map<std::string, long> labels;  // keyed by Approximation text

  long label_of(const Approximation& a) const;  // throws on a missing entry
  void validate_total() const;
};

struct CanonCertificate {
  Member D;
  TreeSeq seq;
  long verified_pairs = 0;
};

// Least certificate with D of >= min_blocks blocks (D by descending block
// count then lexicographic, TreeSeq in enumeration order) such that on all
// length-n approximations inside D, labels agree exactly with the canonical
// relation of seq.  nullopt when exhausted.
std::optional<CanonCertificate> canonize_arn(const ARnRelation& R, int min_blocks);

// Independent exhaustive pairwise re-check.
bool verify_arn_certificate(const ARnRelation& R, const CanonCertificate& cert);

// Total labeling of enumerate_subtrees(universe, n, {}); equal labels = related.
struct R1nRelation {
  int n = 0;
  Member universe;
  std::map<std::string, long> labels;  // keyed by Block text

  long label_of(const Block& u) const;
  void validate_total() const;
};

struct R1nCertificate {
  Member C;
  CanonicalTree T;
  long verified_pairs = 0;
};

// Least (C, T) with labels-equal iff projections-equal over all shape-n
// sub-blocks of C; same search order as canonize_arn.
std::optional<R1nCertificate> canonize_r1n(const R1nRelation& E, int min_blocks);

bool verify_r1n_certificate(const R1nRelation& E, const R1nCertificate& cert);

}  // namespace r1
