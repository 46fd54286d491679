#include "r1space/core.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace r1 {

Node Node::leaf(int m, int i) {
  if (i > m || i < 0) throw std::invalid_argument("leaf <m,i> requires 0 <= i <= m");
  return Node{Kind::Leaf, m, i};
}

Block::Block(int m, std::vector<int> leaves) : m(m), leaves(std::move(leaves)) {
  if (m < 0) throw std::invalid_argument("block index must be nonnegative");
  if (this->leaves.empty()) throw std::invalid_argument("block needs at least one leaf");
  int prev = -1;
  for (int l : this->leaves) {
    if (l <= prev) throw std::invalid_argument("block leaves must be strictly increasing");
    if (l < 0 || l > m) throw std::invalid_argument("block leaf out of range 0..m");
    prev = l;
  }
}

bool Block::contains(const Block& other) const {
  if (other.m != m) return false;
  return std::includes(leaves.begin(), leaves.end(), other.leaves.begin(), other.leaves.end());
}

NodeSet Block::nodes() const {
  NodeSet out;
  out.insert(Node::root());
  out.insert(Node::stem(m));
  for (int l : leaves) out.insert(Node::leaf(m, l));
  return out;
}

std::string Block::to_text() const {
  std::ostringstream os;
  os << m << ':';
  for (size_t j = 0; j < leaves.size(); ++j) {
    if (j) os << ',';
    os << leaves[j];
  }
  return os.str();
}

Block Block::from_text(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("block text needs 'm:leaves'");
  int m = std::stoi(text.substr(0, colon));
  std::vector<int> leaves;
  std::istringstream is(text.substr(colon + 1));
  std::string item;
  while (std::getline(is, item, ',')) leaves.push_back(std::stoi(item));
  return Block(m, std::move(leaves));
}

namespace {

void validate_block_seq(const std::vector<Block>& blocks, const char* what) {
  int prev_index = -1;
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].m <= prev_index)
      throw std::invalid_argument(std::string(what) + ": block indices must be strictly increasing");
    if (blocks[j].shape() != static_cast<int>(j))
      throw std::invalid_argument(std::string(what) + ": block at position " + std::to_string(j) +
                                  " must have shape " + std::to_string(j));
    prev_index = blocks[j].m;
  }
}

NodeSet block_seq_nodes(const std::vector<Block>& blocks) {
  NodeSet out;
  out.insert(Node::root());
  for (const Block& b : blocks) {
    out.insert(Node::stem(b.m));
    for (int l : b.leaves) out.insert(Node::leaf(b.m, l));
  }
  return out;
}

std::string block_seq_text(const std::vector<Block>& blocks) {
  std::string out;
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (j) out += '|';
    out += blocks[j].to_text();
  }
  return out;
}

std::vector<Block> block_seq_from_text(const std::string& text) {
  std::vector<Block> blocks;
  if (text.empty()) return blocks;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, '|')) blocks.push_back(Block::from_text(item));
  return blocks;
}

// Structural test for inclusion of one block sequence in another: each block of
// a must be contained in the (unique) block of b with the same index.
bool structural_le(const std::vector<Block>& a, const std::vector<Block>& b) {
  size_t pos = 0;
  for (const Block& ab : a) {
    while (pos < b.size() && b[pos].m < ab.m) ++pos;
    if (pos == b.size() || b[pos].m != ab.m || !b[pos].contains(ab)) return false;
  }
  return true;
}

bool dual_le(const std::vector<Block>& a, const std::vector<Block>& b) {
  bool structural = structural_le(a, b);
  NodeSet na = block_seq_nodes(a), nb = block_seq_nodes(b);
  bool by_nodes = std::includes(nb.begin(), nb.end(), na.begin(), na.end());
  if (structural != by_nodes)
    throw std::logic_error("le_fin: structural and node-set inclusion disagree");
  return structural;
}

}  // namespace

Approximation::Approximation(std::vector<Block> bs) : blocks(std::move(bs)) {
  validate_block_seq(blocks, "approximation");
}

NodeSet Approximation::nodes() const { return block_seq_nodes(blocks); }
std::string Approximation::to_text() const { return block_seq_text(blocks); }
Approximation Approximation::from_text(const std::string& text) {
  return Approximation(block_seq_from_text(text));
}

Member::Member(std::vector<Block> bs) : blocks(std::move(bs)) {
  validate_block_seq(blocks, "member");
}

NodeSet Member::nodes() const { return block_seq_nodes(blocks); }
std::string Member::to_text() const { return block_seq_text(blocks); }
Member Member::from_text(const std::string& text) { return Member(block_seq_from_text(text)); }

Member initial_tree(int depth) {
  std::vector<Block> blocks;
  for (int j = 0; j < depth; ++j) {
    std::vector<int> leaves(j + 1);
    for (int i = 0; i <= j; ++i) leaves[i] = i;
    blocks.emplace_back(j, std::move(leaves));
  }
  return Member(std::move(blocks));
}

Member to_member(const Approximation& a) { return Member(a.blocks); }

namespace {
std::vector<Block> prefix_blocks(const std::vector<Block>& blocks, int n, const char* what) {
  if (n < 0 || n > static_cast<int>(blocks.size()))
    throw std::out_of_range(std::string(what) + ": truncation length exceeds available depth");
  return std::vector<Block>(blocks.begin(), blocks.begin() + n);
}
}  // namespace

Approximation truncate(const Approximation& x, int n) {
  return Approximation(prefix_blocks(x.blocks, n, "truncate"));
}

Approximation truncate(const Member& x, int n) {
  return Approximation(prefix_blocks(x.blocks, n, "truncate"));
}

bool le_fin(const Approximation& a, const Approximation& b) { return dual_le(a.blocks, b.blocks); }
bool le_fin(const Approximation& a, const Member& b) { return dual_le(a.blocks, b.blocks); }
bool le_member(const Member& y, const Member& x) { return dual_le(y.blocks, x.blocks); }

std::optional<int> depth_of(const Member& b, const Approximation& a) {
  // least n with all of a's blocks among the first n blocks of b
  if (a.empty()) return 0;
  for (int n = a.length(); n <= b.depth(); ++n) {
    if (le_fin(a, truncate(b, n))) return n;
  }
  return std::nullopt;
}

void for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Block> enumerate_subtrees(const Member& x, int k, const Approximation& after) {
  std::vector<Block> out;
  if (k < 0) throw std::invalid_argument("enumerate_subtrees: k must be nonnegative");
  auto start = depth_of(x, after);
  if (!start) return out;  // `after` not realizable inside this truncation
  for (int p = *start; p < x.depth(); ++p) {
    const Block& host = x.blocks[p];
    int L = static_cast<int>(host.leaves.size());
    for_each_combination(L, k + 1, [&](const std::vector<int>& idx) {
      std::vector<int> leaves(idx.size());
      for (size_t j = 0; j < idx.size(); ++j) leaves[j] = host.leaves[idx[j]];
      out.emplace_back(host.m, std::move(leaves));
      return true;
    });
  }
  return out;
}

namespace {
void gen_approx(const Member& x, int n, int next_pos, std::vector<Block>& acc,
                std::vector<Approximation>& out) {
  int shape = static_cast<int>(acc.size());
  if (shape == n) {
    out.emplace_back(acc);
    return;
  }
  for (int p = next_pos; p < x.depth(); ++p) {
    const Block& host = x.blocks[p];
    int L = static_cast<int>(host.leaves.size());
    if (L < shape + 1) continue;
    for_each_combination(L, shape + 1, [&](const std::vector<int>& idx) {
      std::vector<int> leaves(idx.size());
      for (size_t j = 0; j < idx.size(); ++j) leaves[j] = host.leaves[idx[j]];
      acc.emplace_back(host.m, std::move(leaves));
      gen_approx(x, n, p + 1, acc, out);
      acc.pop_back();
      return true;
    });
  }
}
}  // namespace

std::vector<Approximation> enumerate_approx(const Member& x, int n) {
  if (n < 0) throw std::invalid_argument("enumerate_approx: n must be nonnegative");
  std::vector<Approximation> out;
  std::vector<Block> acc;
  gen_approx(x, n, 0, acc, out);
  return out;
}

GlueResult glue(const Approximation& a, const Member& b) {
  int n = a.length();
  int horizon = a.empty() ? -1 : a.blocks.back().m;
  int p0 = 0;
  while (p0 < b.depth() && b.blocks[p0].m <= horizon) ++p0;
  if (p0 == b.depth()) return GlueResult{Member(a.blocks), true};
  if (b.blocks[p0].shape() < n)
    throw std::invalid_argument("glue: first block of b beyond a has shape < |a|");
  std::vector<Block> blocks = a.blocks;
  for (int i = 0; p0 + i < b.depth(); ++i) {
    const Block& host = b.blocks[p0 + i];
    std::vector<int> leaves(host.leaves.begin(), host.leaves.begin() + (n + i + 1));
    blocks.emplace_back(host.m, std::move(leaves));
  }
  return GlueResult{Member(std::move(blocks)), false};
}

}  // namespace r1
