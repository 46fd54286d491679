#include "r1space/serial.hpp"

#include <algorithm>

namespace r1 {

json to_json(const Block& u) { return json{{"m", u.m}, {"leaves", u.leaves}}; }

Block block_from_json(const json& j) {
  return Block(j.at("m").get<int>(), j.at("leaves").get<std::vector<int>>());
}

namespace {
json blocks_to_json(const std::vector<Block>& blocks) {
  json arr = json::array();
  for (const Block& u : blocks) arr.push_back(to_json(u));
  return json{{"blocks", std::move(arr)}};
}

std::vector<Block> blocks_from_json(const json& j) {
  std::vector<Block> blocks;
  for (const json& b : j.at("blocks")) blocks.push_back(block_from_json(b));
  return blocks;
}

// the serialized prefix text determines its own length
int prefix_length(const std::string& text) {
  if (text.empty()) return 0;
  return static_cast<int>(std::count(text.begin(), text.end(), '|')) + 1;
}
}  // namespace

json to_json(const Approximation& a) { return blocks_to_json(a.blocks); }
Approximation approximation_from_json(const json& j) { return Approximation(blocks_from_json(j)); }

json to_json(const Member& x) { return blocks_to_json(x.blocks); }
Member member_from_json(const json& j) { return Member(blocks_from_json(j)); }

json to_json(const RelationTable& t) {
  json labels = json::object();
  for (const auto& [x, l] : t.labels) labels[kset_text(x)] = l;
  return json{{"k", t.k}, {"N", t.N}, {"labels", std::move(labels)}};
}

RelationTable relation_table_from_json(const json& j) {
  RelationTable t;
  t.k = j.at("k").get<int>();
  t.N = j.at("N").get<int>();
  for (const auto& [key, val] : j.at("labels").items()) {
    KSet x;
    size_t pos = 0;
    while (pos < key.size()) {
      size_t comma = key.find(',', pos);
      if (comma == std::string::npos) comma = key.size();
      x.push_back(std::stoi(key.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    t.labels[std::move(x)] = val.get<long>();
  }
  return t;
}

json to_json(const ColoringFile& c) {
  json colors = json::object();
  for (const auto& [key, val] : c.coloring.colors) colors[key] = val;
  return json{{"a", to_json(c.coloring.a)},
              {"universe_depth", c.universe_depth},
              {"colors", std::move(colors)}};
}

ColoringFile coloring_from_json(const json& j) {
  ColoringFile c;
  c.coloring.a = approximation_from_json(j.at("a"));
  c.universe_depth = j.at("universe_depth").get<int>();
  for (const auto& [key, val] : j.at("colors").items()) c.coloring.colors[key] = val.get<int>();
  return c;
}

json to_json(const Front& F) {
  json elems = json::array();
  for (const Approximation& a : F.elements) elems.push_back(to_json(a));
  return json{{"universe", to_json(F.universe)}, {"elements", std::move(elems)}};
}

Front front_from_json(const json& j) {
  Front F;
  F.universe = member_from_json(j.at("universe"));
  for (const json& e : j.at("elements")) F.elements.push_back(approximation_from_json(e));
  return F;
}

json to_json(const FrontRelation& R) {
  json labels = json::object();
  for (const auto& [key, val] : R.labels) labels[key] = val;
  return json{{"labels", std::move(labels)}};
}

FrontRelation front_relation_from_json(const json& j) {
  FrontRelation R;
  for (const auto& [key, val] : j.at("labels").items()) R.labels[key] = val.get<long>();
  return R;
}

json to_json(const PhiAssignment& a) {
  json trees = json::object();
  for (const auto& [key, val] : a.trees) trees[key] = val.to_text();
  return json{{"trees", std::move(trees)}};
}

PhiAssignment phi_assignment_from_json(const json& j) {
  PhiAssignment a;
  for (const auto& [key, val] : j.at("trees").items())
    a.trees.emplace(key, CanonicalTree::from_text(prefix_length(key), val.get<std::string>()));
  return a;
}

namespace {
json string_labels_to_json(const std::map<std::string, long>& labels) {
  json out = json::object();
  for (const auto& [key, val] : labels) out[key] = val;
  return out;
}

std::map<std::string, long> string_labels_from_json(const json& j) {
  std::map<std::string, long> out;
  for (const auto& [key, val] : j.items()) out[key] = val.get<long>();
  return out;
}
}  // namespace

json to_json(const ARnRelation& R) {
  return json{{"n", R.n}, {"universe", to_json(R.universe)}, {"labels", string_labels_to_json(R.labels)}};
}

ARnRelation arn_relation_from_json(const json& j) {
  ARnRelation R;
  R.n = j.at("n").get<int>();
  R.universe = member_from_json(j.at("universe"));
  R.labels = string_labels_from_json(j.at("labels"));
  return R;
}

json to_json(const R1nRelation& E) {
  return json{{"n", E.n}, {"universe", to_json(E.universe)}, {"labels", string_labels_to_json(E.labels)}};
}

R1nRelation r1n_relation_from_json(const json& j) {
  R1nRelation E;
  E.n = j.at("n").get<int>();
  E.universe = member_from_json(j.at("universe"));
  E.labels = string_labels_from_json(j.at("labels"));
  return E;
}

json to_json(const ErCertificate& c) {
  return json{{"M", c.M}, {"I", c.I}, {"verified_pairs", c.verified_pairs}, {"outcome", "ok"}};
}

ErCertificate er_certificate_from_json(const json& j) {
  ErCertificate c;
  c.M = j.at("M").get<std::vector<int>>();
  c.I = j.at("I").get<std::vector<int>>();
  c.verified_pairs = j.at("verified_pairs").get<long>();
  return c;
}

json to_json(const CanonCertificate& c) {
  return json{{"D", to_json(c.D)},
              {"seq", c.seq.to_text()},
              {"verified_pairs", c.verified_pairs},
              {"outcome", "ok"}};
}

CanonCertificate canon_certificate_from_json(const json& j) {
  CanonCertificate c;
  c.D = member_from_json(j.at("D"));
  c.seq = TreeSeq::from_text(j.at("seq").get<std::string>());
  c.verified_pairs = j.at("verified_pairs").get<long>();
  return c;
}

json to_json(const R1nCertificate& c) {
  return json{{"C", to_json(c.C)},
              {"T", c.T.to_text()},
              {"n", c.T.n},
              {"verified_pairs", c.verified_pairs},
              {"outcome", "ok"}};
}

R1nCertificate r1n_certificate_from_json(const json& j) {
  R1nCertificate c;
  c.C = member_from_json(j.at("C"));
  c.T = CanonicalTree::from_text(j.at("n").get<int>(), j.at("T").get<std::string>());
  c.verified_pairs = j.at("verified_pairs").get<long>();
  return c;
}

json to_json(const FrontCertificate& c) {
  return json{{"C", to_json(c.C)},
              {"assign", to_json(c.assign)},
              {"verified_pairs", c.verified_pairs},
              {"outcome", "ok"}};
}

FrontCertificate front_certificate_from_json(const json& j) {
  FrontCertificate c;
  c.C = member_from_json(j.at("C"));
  c.assign = phi_assignment_from_json(j.at("assign"));
  c.verified_pairs = j.at("verified_pairs").get<long>();
  return c;
}

json to_json(const HomogeneityCertificate& c) {
  json transcript = json::array();
  for (const auto& e : c.transcript) {
    transcript.push_back(json{{"source_index", e.source_index},
                              {"witness", to_json(e.witness)},
                              {"witness_color", e.witness_color},
                              {"note", e.note}});
  }
  return json{{"A", to_json(c.A)}, {"color", c.color}, {"transcript", std::move(transcript)},
              {"outcome", "ok"}};
}

HomogeneityCertificate homogeneity_certificate_from_json(const json& j) {
  HomogeneityCertificate c;
  c.A = member_from_json(j.at("A"));
  c.color = j.at("color").get<int>();
  for (const json& e : j.at("transcript")) {
    c.transcript.push_back(HomogeneityCertificate::Entry{
        e.at("source_index").get<int>(), block_from_json(e.at("witness")),
        e.at("witness_color").get<int>(), e.at("note").get<std::string>()});
  }
  return c;
}

}  // namespace r1
