#include "r1space/fronts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace r1 {

long FrontRelation::label_of(const Approximation& t) const {
  auto it = labels.find(t.to_text());
  if (it == labels.end())
    throw std::invalid_argument("front relation is not total: missing " + t.to_text());
  return it->second;
}

const CanonicalTree& PhiAssignment::tree_for(const Approximation& s) const {
  auto it = trees.find(s.to_text());
  if (it == trees.end())
    throw std::invalid_argument("assignment is not total: missing prefix " +
                                (s.empty() ? std::string("<>") : s.to_text()));
  return it->second;
}

namespace {

bool is_proper_prefix(const Approximation& a, const Approximation& b) {
  if (a.length() >= b.length()) return false;
  return truncate(b, a.length()) == a;
}

std::vector<Approximation> sorted_elements(const Front& F) {
  std::vector<Approximation> elems = F.elements;
  std::sort(elems.begin(), elems.end(), [](const Approximation& a, const Approximation& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.to_text() < b.to_text();
  });
  return elems;
}

}  // namespace

PairReport is_nash_williams(const Front& F) {
  auto elems = sorted_elements(F);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      if (i == j || elems[i] == elems[j]) continue;
      if (is_proper_prefix(elems[i], elems[j]))
        return PairReport{false, std::make_pair(elems[i], elems[j])};
    }
  }
  return PairReport{};
}

PairReport is_sperner(const Front& F) {
  auto elems = sorted_elements(F);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      if (i == j || elems[i] == elems[j]) continue;
      if (le_fin(elems[i], elems[j]))
        return PairReport{false, std::make_pair(elems[i], elems[j])};
    }
  }
  return PairReport{};
}

CoverReport covers(const Front& F, int d) {
  if (d > F.universe.depth()) throw std::invalid_argument("covers: depth exceeds the universe");
  std::set<std::string> element_texts;
  int max_len = 0;
  for (const Approximation& a : F.elements) {
    element_texts.insert(a.to_text());
    max_len = std::max(max_len, a.length());
  }
  std::vector<Approximation> missed;
  for (const Approximation& y : enumerate_approx(F.universe, d)) {
    bool covered = false;
    for (int n = 1; n <= d && !covered; ++n) {
      covered = element_texts.count(truncate(y, n).to_text()) > 0;
    }
    if (!covered) missed.push_back(y);
  }
  if (missed.empty()) return CoverReport{CoverOutcome::Covered, {}};
  // an element longer than d could still cover these once extended past the
  // truncation, so missing is only a refutation when no element is that long
  CoverOutcome outcome = max_len > d ? CoverOutcome::Indeterminate : CoverOutcome::Uncovered;
  return CoverReport{outcome, std::move(missed)};
}

int shape0_enumeration_index(const Block& b) {
  if (b.shape() != 0) throw std::invalid_argument("enumeration index is for shape-0 blocks");
  return b.m * (b.m + 1) / 2 + b.leaves[0];
}

Front schreier_front(const Member& universe) {
  Front F;
  F.universe = universe;
  for (int n = 1; n <= universe.depth(); ++n) {
    for (const Approximation& t : enumerate_approx(universe, n)) {
      if (shape0_enumeration_index(t.blocks[0]) == n) F.elements.push_back(t);
    }
  }
  return F;
}

Approximation concat(const Approximation& base, const std::vector<Block>& tail) {
  std::vector<Block> blocks = base.blocks;
  blocks.insert(blocks.end(), tail.begin(), tail.end());
  return Approximation(std::move(blocks));
}

ExtensionSet ext(const Member& universe, const Approximation& s,
                 const std::optional<Approximation>& t) {
  auto ds = depth_of(universe, s);
  if (!ds) throw std::invalid_argument("ext: s is not inside the universe");
  int horizon = *ds;
  if (t) {
    auto dt = depth_of(universe, *t);
    if (!dt) throw std::invalid_argument("ext: t is not inside the universe");
    horizon = std::max(horizon, *dt);
  }
  ExtensionSet out;
  out.base = s;
  std::vector<Block> tail;
  auto rec = [&](auto&& self, int from) -> void {
    out.items.push_back(tail);
    int shape = s.length() + static_cast<int>(tail.size());
    for (int p = from; p < universe.depth(); ++p) {
      const Block& host = universe.blocks[p];
      if (static_cast<int>(host.leaves.size()) < shape + 1) continue;
      for_each_combination(static_cast<int>(host.leaves.size()), shape + 1,
                           [&](const std::vector<int>& idx) {
                             std::vector<int> leaves(idx.size());
                             for (size_t j = 0; j < idx.size(); ++j) leaves[j] = host.leaves[idx[j]];
                             tail.emplace_back(host.m, std::move(leaves));
                             self(self, p + 1);
                             tail.pop_back();
                             return true;
                           });
    }
  };
  rec(rec, horizon);
  return out;
}

SepReport separates(const Member& universe, const Approximation& s, const Approximation& t,
                    const Front& F, const FrontRelation& f) {
  auto ds = depth_of(universe, s);
  if (!ds) throw std::invalid_argument("separates: s is not inside the universe");
  auto dt = depth_of(universe, t);
  if (!dt) throw std::invalid_argument("separates: t is not inside the universe");
  int horizon = std::max(*ds, *dt);

  std::map<int, int> position_of;  // stem index -> universe block position
  for (int p = 0; p < universe.depth(); ++p) position_of[universe.blocks[p].m] = p;

  // completions through the common extension pool.  A shared tail must start
  // at both bases' shapes at once, so for bases of different length only the
  // empty tail is common; equal-length bases share all tails legal from the
  // joint horizon, and those are exactly the front elements extending the
  // base by blocks at positions >= horizon.
  bool equal_len = s.length() == t.length();
  auto completions = [&](const Approximation& base) {
    std::vector<const Approximation*> done;
    for (const Approximation& e : F.elements) {
      if (e == base) {
        done.push_back(&e);
        continue;
      }
      if (!equal_len || e.length() <= base.length()) continue;
      if (truncate(e, base.length()) != base) continue;
      bool legal = true;
      for (int i = base.length(); i < e.length() && legal; ++i) {
        auto it = position_of.find(e.blocks[i].m);
        legal = it != position_of.end() && it->second >= horizon &&
                universe.blocks[it->second].contains(e.blocks[i]);
      }
      if (!legal) continue;
      done.push_back(&e);
    }
    return done;
  };
  auto s_done = completions(s);
  auto t_done = completions(t);
  if (s_done.empty() || t_done.empty()) return SepReport{SepOutcome::Vacuous, std::nullopt};

  std::vector<long> s_labels, t_labels;
  for (const Approximation* e : s_done) s_labels.push_back(f.label_of(*e));
  for (const Approximation* e : t_done) t_labels.push_back(f.label_of(*e));
  for (size_t i = 0; i < s_done.size(); ++i) {
    for (size_t j = 0; j < t_done.size(); ++j) {
      if (s_labels[i] == t_labels[j])
        return SepReport{SepOutcome::Collides, std::make_pair(*s_done[i], *t_done[j])};
    }
  }
  return SepReport{SepOutcome::Separates, std::nullopt};
}

bool mixes_within_truncation(const Member& universe, const Approximation& s,
                             const Approximation& t, const Front& F, const FrontRelation& f) {
  if (universe.depth() > 4)
    throw std::invalid_argument("mixing probe is exhaustive over sub-members; depth capped at 4");
  for (int d = 1; d <= universe.depth(); ++d) {
    for (const Approximation& ya : enumerate_approx(universe, d)) {
      Member Y = to_member(ya);
      if (!depth_of(Y, s) || !depth_of(Y, t)) continue;
      if (separates(Y, s, t, F, f).outcome == SepOutcome::Separates) return false;
    }
  }
  return true;
}

NodeSet build_phi(const Front& F, const PhiAssignment& assign, const Approximation& t) {
  (void)F;
  NodeSet out;
  for (int i = 0; i < t.length(); ++i) {
    NodeSet part = project(assign.tree_for(truncate(t, i)), t.blocks[i]).nodes();
    out.insert(part.begin(), part.end());
  }
  return out;
}

bool nodeset_prefix(const NodeSet& P, const NodeSet& Q) {
  if (!P.count(Node::root()) || !Q.count(Node::root())) return false;
  // stems of Q in increasing order; P must equal root + the first j stem groups
  std::vector<int> stems;
  for (const Node& v : Q) {
    if (v.kind != Node::Kind::Root && (stems.empty() || stems.back() != v.m))
      stems.push_back(v.m);
  }
  NodeSet acc;
  acc.insert(Node::root());
  if (P == acc) return true;
  for (int m : stems) {
    for (const Node& v : Q) {
      if (v.kind != Node::Kind::Root && v.m == m) acc.insert(v);
    }
    if (P == acc) return true;
  }
  return false;
}

InnerReport check_inner_ns_sperner(const Front& F, const std::map<std::string, NodeSet>& phi) {
  InnerReport report;
  auto elems = sorted_elements(F);
  auto image = [&](const Approximation& a) -> const NodeSet& {
    auto it = phi.find(a.to_text());
    if (it == phi.end()) throw std::invalid_argument("phi is not total: missing " + a.to_text());
    return it->second;
  };
  for (const Approximation& a : elems) {
    const NodeSet& P = image(a);
    NodeSet own = a.nodes();
    bool ok = P.count(Node::root()) > 0;
    for (const Node& v : P) {
      if (!own.count(v)) ok = false;
      if (v.kind == Node::Kind::Leaf && !P.count(Node::stem(v.m))) ok = false;  // downward closed
    }
    if (!ok) {
      report.inner = false;
      if (!report.inner_witness) report.inner_witness = a;
    }
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      if (i == j || elems[i] == elems[j]) continue;
      const NodeSet& P = image(elems[i]);
      const NodeSet& Q = image(elems[j]);
      if (report.nash_williams && nodeset_prefix(P, Q)) {
        report.nash_williams = false;
        report.nw_witness = std::make_pair(elems[i], elems[j]);
      }
      if (report.sperner && std::includes(Q.begin(), Q.end(), P.begin(), P.end())) {
        report.sperner = false;
        report.sperner_witness = std::make_pair(elems[i], elems[j]);
      }
    }
  }
  return report;
}

RepresentsReport represents(const Front& F, const std::map<std::string, NodeSet>& phi,
                            const FrontRelation& R) {
  auto elems = sorted_elements(F);
  for (size_t i = 0; i < elems.size(); ++i) {
    auto pi = phi.find(elems[i].to_text());
    if (pi == phi.end())
      throw std::invalid_argument("phi is not total: missing " + elems[i].to_text());
    for (size_t j = i + 1; j < elems.size(); ++j) {
      auto pj = phi.find(elems[j].to_text());
      if (pj == phi.end())
        throw std::invalid_argument("phi is not total: missing " + elems[j].to_text());
      bool same_label = R.label_of(elems[i]) == R.label_of(elems[j]);
      if (same_label != (pi->second == pj->second))
        return RepresentsReport{false, std::make_pair(elems[i], elems[j])};
    }
  }
  return RepresentsReport{};
}

std::vector<Approximation> restrict_front(const Front& F, const Member& X) {
  std::vector<Approximation> out;
  for (const Approximation& a : sorted_elements(F)) {
    if (le_fin(a, X)) out.push_back(a);
  }
  return out;
}

std::vector<Approximation> proper_prefixes(const std::vector<Approximation>& elements) {
  std::set<std::string> seen;
  std::vector<Approximation> out;
  for (const Approximation& t : elements) {
    for (int i = 0; i < t.length(); ++i) {
      Approximation p = truncate(t, i);
      if (seen.insert(p.to_text()).second) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const Approximation& a, const Approximation& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.to_text() < b.to_text();
  });
  return out;
}

namespace {

// One elements-of-F|C canonization attempt: depth-first over prefixes ordered
// by (length, text), trees in family order, pruning through an incremental
// image<->label bijection plus pairwise incomparability of distinct images.
struct FrontSearch {
  std::vector<Approximation> elems;            // F|C, sorted (length, text)
  std::vector<long> labels;                    // label per element
  std::vector<Approximation> prefixes;         // assignment domain, sorted
  std::vector<std::vector<CanonicalTree>> choices;  // per prefix
  // elements completed by each prefix: those whose longest proper prefix it is
  std::vector<std::vector<int>> triggered;
  std::vector<std::vector<int>> elem_prefix;   // per element: prefix slot of r_i

  std::vector<int> pick;                            // chosen tree per prefix slot
  std::vector<std::pair<NodeSet, int>> done;        // (image, element) so far
  std::map<NodeSet, long> image_label;
  std::map<long, NodeSet> label_image;

  bool admit(int e) {
    NodeSet img;
    const Approximation& t = elems[e];
    for (int i = 0; i < t.length(); ++i) {
      int slot = elem_prefix[e][i];
      NodeSet part = project(choices[slot][pick[slot]], t.blocks[i]).nodes();
      img.insert(part.begin(), part.end());
    }
    long lab = labels[e];
    auto li = label_image.find(lab);
    if (li != label_image.end()) {
      if (li->second != img) return false;
      done.emplace_back(std::move(img), e);
      return true;
    }
    if (image_label.count(img)) return false;  // image already owned by another label
    // fresh image: must be strictly incomparable with every other class image
    for (const auto& [other, lab2] : image_label) {
      if (std::includes(other.begin(), other.end(), img.begin(), img.end()) ||
          std::includes(img.begin(), img.end(), other.begin(), other.end()) ||
          nodeset_prefix(img, other) || nodeset_prefix(other, img))
        return false;
    }
    image_label[img] = lab;
    label_image[lab] = img;
    done.emplace_back(std::move(img), e);
    return true;
  }

  void retract(size_t done_mark, size_t fresh_mark, std::vector<long>& fresh_labels) {
    while (fresh_labels.size() > fresh_mark) {
      long lab = fresh_labels.back();
      fresh_labels.pop_back();
      image_label.erase(label_image[lab]);
      label_image.erase(lab);
    }
    done.resize(done_mark);
  }

  bool dfs(size_t slot, std::vector<long>& fresh_labels) {
    if (slot == prefixes.size()) return true;
    for (size_t c = 0; c < choices[slot].size(); ++c) {
      pick[slot] = static_cast<int>(c);
      size_t done_mark = done.size();
      size_t fresh_mark = fresh_labels.size();
      bool ok = true;
      for (int e : triggered[slot]) {
        size_t before = label_image.size();
        if (!admit(e)) {
          ok = false;
          break;
        }
        if (label_image.size() > before) fresh_labels.push_back(labels[e]);
      }
      if (ok && dfs(slot + 1, fresh_labels)) return true;
      retract(done_mark, fresh_mark, fresh_labels);
    }
    return false;
  }
};

std::optional<PhiAssignment> canonize_on(const std::vector<Approximation>& elems,
                                         const FrontRelation& R) {
  FrontSearch S;
  S.elems = elems;
  for (const Approximation& t : elems) S.labels.push_back(R.label_of(t));
  S.prefixes = proper_prefixes(elems);
  std::map<std::string, int> slot_of;
  for (size_t p = 0; p < S.prefixes.size(); ++p) {
    slot_of[S.prefixes[p].to_text()] = static_cast<int>(p);
    S.choices.push_back(enumerate_trees(S.prefixes[p].length()));
  }
  S.triggered.resize(S.prefixes.size());
  S.elem_prefix.resize(elems.size());
  for (size_t e = 0; e < elems.size(); ++e) {
    for (int i = 0; i < elems[e].length(); ++i)
      S.elem_prefix[e].push_back(slot_of.at(truncate(elems[e], i).to_text()));
    if (!S.elem_prefix[e].empty())
      S.triggered[*std::max_element(S.elem_prefix[e].begin(), S.elem_prefix[e].end())].push_back(
          static_cast<int>(e));
  }
  S.pick.assign(S.prefixes.size(), 0);
  std::vector<long> fresh_labels;
  if (!S.dfs(0, fresh_labels)) return std::nullopt;
  PhiAssignment assign;
  for (size_t p = 0; p < S.prefixes.size(); ++p)
    assign.trees[S.prefixes[p].to_text()] = S.choices[p][S.pick[p]];
  return assign;
}

}  // namespace

std::optional<FrontCertificate> canonize_front(const Front& F, const FrontRelation& R,
                                               int min_blocks) {
  auto nw = is_nash_williams(F);
  if (!nw.ok)
    throw std::invalid_argument("canonize_front: front is not Nash-Williams (" +
                                nw.witness->first.to_text() + " below " +
                                nw.witness->second.to_text() + ")");
  for (const Approximation& t : F.elements) R.label_of(t);  // totality up front

  for (int d = F.universe.depth(); d >= min_blocks; --d) {
    for (const Approximation& ca : enumerate_approx(F.universe, d)) {
      Member C = to_member(ca);
      std::vector<Approximation> elems = restrict_front(F, C);
      auto assign = canonize_on(elems, R);
      if (!assign) continue;
      long n = static_cast<long>(elems.size());
      FrontCertificate cert{C, std::move(*assign), n * (n - 1) / 2};
      if (!verify_front_certificate(F, R, cert))
        throw std::logic_error("canonize_front: certificate failed re-verification");
      return cert;
    }
  }
  return std::nullopt;
}

bool verify_front_certificate(const Front& F, const FrontRelation& R,
                              const FrontCertificate& cert) {
  if (!le_member(cert.C, F.universe)) return false;
  std::vector<Approximation> elems = restrict_front(F, cert.C);
  std::vector<NodeSet> images;
  for (const Approximation& t : elems) {
    NodeSet img = build_phi(F, cert.assign, t);
    // inner: a downward-closed subset of the element's own nodes
    NodeSet own = t.nodes();
    for (const Node& v : img) {
      if (!own.count(v)) return false;
      if (v.kind == Node::Kind::Leaf && !img.count(Node::stem(v.m))) return false;
    }
    images.push_back(std::move(img));
  }
  long pairs = 0;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = i + 1; j < elems.size(); ++j) {
      ++pairs;
      bool same_label = R.label_of(elems[i]) == R.label_of(elems[j]);
      if (same_label != (images[i] == images[j])) return false;
      if (!same_label) {
        // distinct classes must have strictly incomparable images
        if (std::includes(images[i].begin(), images[i].end(), images[j].begin(),
                          images[j].end()) ||
            std::includes(images[j].begin(), images[j].end(), images[i].begin(),
                          images[i].end()) ||
            nodeset_prefix(images[i], images[j]) || nodeset_prefix(images[j], images[i]))
          return false;
      }
    }
  }
  return pairs == cert.verified_pairs;
}

}  // namespace r1
