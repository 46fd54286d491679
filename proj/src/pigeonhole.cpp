#include "r1space/pigeonhole.hpp"

#include <algorithm>
#include <stdexcept>

#include "r1space/ellentuck.hpp"

namespace r1 {

int ExtensionColoring::color_of(const Block& u) const {
  auto it = colors.find(u.to_text());
  if (it == colors.end())
    throw std::invalid_argument("coloring is not total: missing " + u.to_text());
  if (it->second != 0 && it->second != 1)
    throw std::invalid_argument("coloring must be 2-valued: " + u.to_text());
  return it->second;
}

std::optional<int> guaranteed_universe(int subset_size, int mono_size) {
  if (subset_size == 1) return 2 * mono_size - 1;  // pigeonhole on points
  if (subset_size == 2) {
    switch (mono_size) {
      case 2: return 2;
      case 3: return 6;
      case 4: return 18;
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

struct StageOneHit {
  int source_position = 0;
  Block w;
  int color = 0;
  std::string note;
};

// Find a sub-block of `host` with `size` leaves all of whose shape-(k)
// subtrees share one color: the finite Ramsey subroutine on the leaf set,
// identifying shape-k subtrees of one block with (k+1)-subsets of its leaves.
std::optional<Block> monochromatic_subblock(const Block& host, int k,
                                            const ExtensionColoring& coloring, int size) {
  int L = static_cast<int>(host.leaves.size());
  if (L < size || size < k + 1) return std::nullopt;
  RelationTable leaf_coloring = RelationTable::from_function(k + 1, L, [&](const KSet& idx) {
    std::vector<int> leaves(idx.size());
    for (size_t j = 0; j < idx.size(); ++j) leaves[j] = host.leaves[idx[j]];
    return static_cast<long>(coloring.color_of(Block(host.m, std::move(leaves))));
  });
  auto M = finite_ramsey(leaf_coloring, size);
  if (!M) return std::nullopt;
  // thin the returned set to exactly `size` leaves, lexicographic-least
  std::vector<int> leaves(size);
  for (int j = 0; j < size; ++j) leaves[j] = host.leaves[(*M)[j]];
  return Block(host.m, std::move(leaves));
}

}  // namespace

std::optional<HomogeneityCertificate> homogenize(const Member& B, const ExtensionColoring& coloring,
                                                 int new_blocks) {
  if (new_blocks < 1) throw std::invalid_argument("homogenize: new_blocks must be >= 1");
  auto start = depth_of(B, coloring.a);
  if (!start) throw std::invalid_argument("homogenize: a is not inside the universe");
  int n = *start;
  int k = coloring.a.length();
  // totality over the declared extension universe
  for (const Block& u : enumerate_subtrees(B, k, coloring.a)) coloring.color_of(u);

  // Stage 1: successive targets n, n+1, ..., each from a fresh block of B.
  // 2*new_blocks - 1 hits guarantee new_blocks of one color.
  std::vector<StageOneHit> hits;
  int wanted = 2 * new_blocks - 1;
  int target_shape = n;
  for (int p = n; p < B.depth() && static_cast<int>(hits.size()) < wanted; ++p) {
    const Block& host = B.blocks[p];
    auto w = monochromatic_subblock(host, k, coloring, target_shape + 1);
    if (!w) continue;
    std::vector<int> probe(w->leaves.begin(), w->leaves.begin() + (k + 1));
    int color = coloring.color_of(Block(w->m, std::move(probe)));
    auto bound = guaranteed_universe(k + 1, target_shape + 1);
    std::string note = bound && static_cast<int>(host.leaves.size()) >= *bound
                           ? "guaranteed by size table (reconstructed bounds)"
                           : "found by exhaustive search";
    hits.push_back(StageOneHit{p, *w, color, note});
    ++target_shape;
  }

  // Stage 2: stabilize on the first-found color that can supply enough blocks.
  int counts[2] = {0, 0};
  for (const auto& h : hits) ++counts[h.color];
  int color;
  if (!hits.empty() && counts[hits.front().color] >= new_blocks) {
    color = hits.front().color;
  } else if (!hits.empty() && counts[1 - hits.front().color] >= new_blocks) {
    color = 1 - hits.front().color;
  } else {
    return std::nullopt;  // exhausted the truncation
  }

  // Stage 3: thin the selected sub-blocks down to shapes n, n+1, ...
  HomogeneityCertificate cert;
  cert.color = color;
  std::vector<Block> blocks(B.blocks.begin(), B.blocks.begin() + n);
  int l = 0;
  for (const auto& h : hits) {
    if (h.color != color || l >= new_blocks) continue;
    std::vector<int> leaves(h.w.leaves.begin(), h.w.leaves.begin() + (n + l + 1));
    blocks.emplace_back(h.w.m, std::move(leaves));
    cert.transcript.push_back(
        HomogeneityCertificate::Entry{B.blocks[h.source_position].m, h.w, h.color, h.note});
    ++l;
  }
  cert.A = Member(std::move(blocks));
  if (!verify_homogeneity(B, coloring, cert))
    throw std::logic_error("homogenize: certificate failed re-verification");
  return cert;
}

bool verify_homogeneity(const Member& B, const ExtensionColoring& coloring,
                        const HomogeneityCertificate& cert) {
  auto start = depth_of(B, coloring.a);
  if (!start) return false;
  int n = *start;
  if (cert.A.depth() < n) return false;
  // structural: prefix agrees with B, later blocks are sub-blocks of B
  if (truncate(cert.A, n) != truncate(B, n)) return false;
  for (int p = n; p < cert.A.depth(); ++p) {
    bool inside = false;
    for (const Block& host : B.blocks) {
      if (host.contains(cert.A.blocks[p])) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  // homogeneity: every shape-|a| sub-block of A beyond a has the stated color
  for (const Block& u : enumerate_subtrees(cert.A, coloring.a.length(), coloring.a)) {
    if (coloring.color_of(u) != cert.color) return false;
  }
  return true;
}

}  // namespace r1
