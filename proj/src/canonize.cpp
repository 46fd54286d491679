#include "r1space/canonize.hpp"

#include <stdexcept>
#include <vector>

namespace r1 {

long ARnRelation::label_of(const Approximation& a) const {
  auto it = labels.find(a.to_text());
  if (it == labels.end())
    throw std::invalid_argument("relation is not total: missing " + a.to_text());
  return it->second;
}

void ARnRelation::validate_total() const {
  for (const Approximation& a : enumerate_approx(universe, n)) label_of(a);
}

long R1nRelation::label_of(const Block& u) const {
  auto it = labels.find(u.to_text());
  if (it == labels.end())
    throw std::invalid_argument("relation is not total: missing " + u.to_text());
  return it->second;
}

void R1nRelation::validate_total() const {
  for (const Block& u : enumerate_subtrees(universe, n, Approximation())) label_of(u);
}

namespace {

// labels-equal coincides with key-equal iff key partition and label partition
// induce a bijection
template <typename Item, typename KeyFn, typename LabelFn>
bool partitions_match(const std::vector<Item>& items, const KeyFn& key, const LabelFn& label) {
  std::map<std::string, long> key_label;
  std::map<long, std::string> label_key;
  for (const Item& x : items) {
    std::string k = key(x);
    long l = label(x);
    auto [ki, kins] = key_label.try_emplace(k, l);
    if (!kins && ki->second != l) return false;
    auto [li, lins] = label_key.try_emplace(l, k);
    if (!lins && li->second != k) return false;
  }
  return true;
}

std::string projection_key(const TreeSeq& seq, const Approximation& a) {
  std::string key;
  for (int i = 0; i < seq.length(); ++i) {
    if (i) key += '|';
    key += project(seq.trees[i], a.blocks[i]).to_text();
  }
  return key;
}

}  // namespace

std::optional<CanonCertificate> canonize_arn(const ARnRelation& R, int min_blocks) {
  if (min_blocks < R.n)
    throw std::invalid_argument("canonize_arn: min_blocks must be at least n");
  R.validate_total();
  auto seqs = enumerate_treeseqs(R.n);
  for (int d = R.universe.depth(); d >= min_blocks; --d) {
    for (const Approximation& da : enumerate_approx(R.universe, d)) {
      Member D = to_member(da);
      auto elems = enumerate_approx(D, R.n);
      for (const TreeSeq& seq : seqs) {
        if (!partitions_match(
                elems, [&](const Approximation& a) { return projection_key(seq, a); },
                [&](const Approximation& a) { return R.label_of(a); }))
          continue;
        long m = static_cast<long>(elems.size());
        CanonCertificate cert{D, seq, m * (m - 1) / 2};
        if (!verify_arn_certificate(R, cert))
          throw std::logic_error("canonize_arn: certificate failed re-verification");
        return cert;
      }
    }
  }
  return std::nullopt;
}

bool verify_arn_certificate(const ARnRelation& R, const CanonCertificate& cert) {
  if (!le_member(cert.D, R.universe)) return false;
  if (cert.seq.length() != R.n) return false;
  auto elems = enumerate_approx(cert.D, R.n);
  long pairs = 0;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = i + 1; j < elems.size(); ++j) {
      ++pairs;
      bool same_label = R.label_of(elems[i]) == R.label_of(elems[j]);
      if (same_label != canonical_equiv(cert.seq, elems[i], elems[j])) return false;
    }
  }
  return pairs == cert.verified_pairs;
}

std::optional<R1nCertificate> canonize_r1n(const R1nRelation& E, int min_blocks) {
  if (min_blocks < E.n + 1)
    throw std::invalid_argument("canonize_r1n: min_blocks must exceed the block shape");
  E.validate_total();
  auto trees = enumerate_trees(E.n);
  for (int d = E.universe.depth(); d >= min_blocks; --d) {
    for (const Approximation& ca : enumerate_approx(E.universe, d)) {
      Member C = to_member(ca);
      auto blocks = enumerate_subtrees(C, E.n, Approximation());
      for (const CanonicalTree& T : trees) {
        if (!partitions_match(
                blocks, [&](const Block& u) { return project(T, u).to_text(); },
                [&](const Block& u) { return E.label_of(u); }))
          continue;
        long m = static_cast<long>(blocks.size());
        R1nCertificate cert{C, T, m * (m - 1) / 2};
        if (!verify_r1n_certificate(E, cert))
          throw std::logic_error("canonize_r1n: certificate failed re-verification");
        return cert;
      }
    }
  }
  return std::nullopt;
}

bool verify_r1n_certificate(const R1nRelation& E, const R1nCertificate& cert) {
  if (!le_member(cert.C, E.universe)) return false;
  if (cert.T.n != E.n) return false;
  auto blocks = enumerate_subtrees(cert.C, E.n, Approximation());
  long pairs = 0;
  for (size_t i = 0; i < blocks.size(); ++i) {
    for (size_t j = i + 1; j < blocks.size(); ++j) {
      ++pairs;
      bool same_label = E.label_of(blocks[i]) == E.label_of(blocks[j]);
      if (same_label != et_equiv(cert.T, blocks[i], blocks[j])) return false;
    }
  }
  return pairs == cert.verified_pairs;
}

}  // namespace r1
