#include "r1space/canon.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace r1 {

CanonicalTree CanonicalTree::leaves(int n, std::vector<int> positions) {
  if (positions.empty()) throw std::invalid_argument("leaf tree needs a nonempty position set");
  int prev = -1;
  for (int p : positions) {
    if (p <= prev) throw std::invalid_argument("leaf positions must be strictly increasing");
    if (p < 0 || p > n) throw std::invalid_argument("leaf position out of range 0..n");
    prev = p;
  }
  return CanonicalTree{n, Kind::Leaves, std::move(positions)};
}

CanonicalTree CanonicalTree::full(int n) {
  std::vector<int> all(n + 1);
  for (int i = 0; i <= n; ++i) all[i] = i;
  return leaves(n, std::move(all));
}

std::string CanonicalTree::to_text() const {
  switch (kind) {
    case Kind::Empty: return "E";
    case Kind::Stem: return "S";
    case Kind::Leaves: {
      std::string out = "L{";
      for (size_t j = 0; j < positions.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(positions[j]);
      }
      out += '}';
      return out;
    }
  }
  return "";
}

CanonicalTree CanonicalTree::from_text(int n, const std::string& text) {
  if (text == "E") return empty(n);
  if (text == "S") return stem(n);
  if (text.size() >= 4 && text[0] == 'L' && text[1] == '{' && text.back() == '}') {
    std::vector<int> positions;
    std::istringstream is(text.substr(2, text.size() - 3));
    std::string item;
    while (std::getline(is, item, ',')) positions.push_back(std::stoi(item));
    return leaves(n, std::move(positions));
  }
  throw std::invalid_argument("tree text must be E, S, or L{...}: " + text);
}

NodeSet ProjectedBlock::nodes() const {
  NodeSet out;
  out.insert(Node::root());
  if (has_stem) out.insert(Node::stem(m));
  for (int l : leaves) out.insert(Node::leaf(m, l));
  return out;
}

std::string ProjectedBlock::to_text() const {
  if (!has_stem) return "<>";
  std::string out = std::to_string(m) + ":";
  for (size_t j = 0; j < leaves.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(leaves[j]);
  }
  return out;
}

ProjectedBlock project(const CanonicalTree& T, const Block& u) {
  if (u.shape() != T.n)
    throw std::invalid_argument("project: block shape " + std::to_string(u.shape()) +
                                " does not match tree family " + std::to_string(T.n));
  ProjectedBlock out;
  if (T.kind == CanonicalTree::Kind::Empty) return out;
  out.has_stem = true;
  out.m = u.m;
  if (T.kind == CanonicalTree::Kind::Stem) return out;
  for (int p : T.positions) out.leaves.push_back(u.leaves[p]);
  return out;
}

bool et_equiv(const CanonicalTree& T, const Block& u, const Block& v) {
  return project(T, u) == project(T, v);
}

std::vector<CanonicalTree> enumerate_trees(int n) {
  std::vector<CanonicalTree> out;
  out.push_back(CanonicalTree::empty(n));
  out.push_back(CanonicalTree::stem(n));
  // nonempty subsets of {0..n} in lexicographic order as sorted lists
  std::vector<int> acc;
  auto rec = [&](auto&& self, int next) -> void {
    for (int p = next; p <= n; ++p) {
      acc.push_back(p);
      out.push_back(CanonicalTree::leaves(n, acc));
      self(self, p + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

TreeSeq::TreeSeq(std::vector<CanonicalTree> ts) : trees(std::move(ts)) {
  for (size_t i = 0; i < trees.size(); ++i) {
    if (trees[i].n != static_cast<int>(i))
      throw std::invalid_argument("tree sequence component " + std::to_string(i) +
                                  " must come from the shape-" + std::to_string(i) + " family");
  }
}

std::string TreeSeq::to_text() const {
  std::string out;
  for (size_t i = 0; i < trees.size(); ++i) {
    if (i) out += ';';
    out += trees[i].to_text();
  }
  return out;
}

TreeSeq TreeSeq::from_text(const std::string& text) {
  std::vector<CanonicalTree> trees;
  if (!text.empty()) {
    std::istringstream is(text);
    std::string item;
    int i = 0;
    while (std::getline(is, item, ';')) trees.push_back(CanonicalTree::from_text(i++, item));
  }
  return TreeSeq(std::move(trees));
}

bool canonical_equiv(const TreeSeq& seq, const Approximation& a, const Approximation& b) {
  if (a.length() != seq.length() || b.length() != seq.length())
    throw std::invalid_argument("canonical_equiv: approximation lengths must match the sequence");
  for (int i = 0; i < seq.length(); ++i) {
    if (!et_equiv(seq.trees[i], a.blocks[i], b.blocks[i])) return false;
  }
  return true;
}

std::vector<TreeSeq> enumerate_treeseqs(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_treeseqs: n must be at least 1");
  std::vector<std::vector<CanonicalTree>> families;
  for (int i = 0; i < n; ++i) families.push_back(enumerate_trees(i));
  std::vector<TreeSeq> out;
  std::vector<CanonicalTree> acc;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(acc);
      return;
    }
    for (const CanonicalTree& t : families[i]) {
      acc.push_back(t);
      self(self, i + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t canonical_census(int n) {
  if (n < 1 || n > 10) throw std::out_of_range("canonical_census: n must be in 1..10");
  std::uint64_t product = 1;
  for (int i = 1; i <= n; ++i) product *= (std::uint64_t{1} << i) + 1;
  return product;
}

std::vector<ProjectedBlock> project_member(const CanonicalTree& T, int n, const Member& x) {
  if (T.n != n) throw std::invalid_argument("project_member: tree family does not match n");
  std::vector<ProjectedBlock> out;
  for (const Block& u : enumerate_subtrees(x, n, Approximation())) {
    out.push_back(project(T, u));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace r1
