#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Classical baseline on [N]^k: canonical relations E_I, a finite Ramsey
// subroutine, and a finite Erdos-Rado canonizer.  Finite N may lie below the
// relevant Ramsey number, so "exhausted" (nullopt) is a legal outcome distinct
// from failure.

namespace r1 {

using KSet = std::vector<int>;      // strictly increasing
using IndexSet = std::vector<int>;  // increasing subset of {0..k-1}, may be empty

std::string kset_text(const KSet& x);  // "x0,x1,..."

// Total labeling of [N]^k; equal labels induce the equivalence relation.
// Doubles as a coloring for the Ramsey subroutine.
struct RelationTable {
  int k = 1;
  int N = 0;
  std::map<KSet, long> labels;

  static RelationTable from_function(int k, int N, const std::function<long(const KSet&)>& f);
  long label_of(const KSet& x) const;  // throws on a missing entry
  void validate_total() const;
};

// x_i = y_i for all i in I.  Throws std::invalid_argument on arity mismatch.
bool e_I_equiv(const IndexSet& I, const KSet& x, const KSet& y);

// Largest (then lexicographic-least) M within [N] with |M| >= target on which
// the coloring is constant; nullopt when no such M exists in [N].
std::optional<std::vector<int>> finite_ramsey(const RelationTable& coloring, int target);

// true iff the coloring is constant on [M]^k (shares no state with the search)
bool verify_monochromatic(const RelationTable& coloring, const std::vector<int>& M);

struct ErCertificate {
  std::vector<int> M;
  IndexSet I;
  long verified_pairs = 0;
};

// Least (by |M| descending, then M, then I) pair with |M| >= target and the
// table agreeing with E_I on all of [M]^k; nullopt when exhausted.
// Requires target >= k+1 so that agreement is non-vacuous.
std::optional<ErCertificate> er_canonize(const RelationTable& table, int target);

// Exhaustive pairwise re-check of a certificate, independent of the search.
bool verify_er_certificate(const RelationTable& table, const ErCertificate& cert);

// All k-subsets of M in lexicographic order.
std::vector<KSet> ksubsets_of(const std::vector<int>& M, int k);

// All subsets of {0..k-1} in lexicographic order as sorted lists (empty first).
std::vector<IndexSet> enumerate_index_sets(int k);

}  // namespace r1
