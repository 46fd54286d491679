#include "r1space/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "r1space/canon.hpp"
#include "r1space/canonize.hpp"
#include "r1space/core.hpp"
#include "r1space/ellentuck.hpp"
#include "r1space/features.hpp"
#include "r1space/fronts.hpp"
#include "r1space/pigeonhole.hpp"
#include "r1space/serial.hpp"

namespace r1 {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kExhausted = 3;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

// Everything a canonize/verify run may need, gathered from the flags.
struct Inputs {
  std::string kind;
  std::string relation_file, coloring_file, front_file, certificate_file, out_file;
  std::string feature;
  int n = 1;
  int k = 1;
  int depth = 0;
  int min_size = -1;
  int seed = 0;
  bool verify_flag = false;

  FeatureSpec feature_spec() const {
    FeatureSpec spec = FeatureSpec::parse(feature);
    if (spec.name == "seeded_random" && !spec.has_arg) {
      spec.arg = seed;
      spec.has_arg = true;
    }
    return spec;
  }
};

RelationTable build_er_input(const Inputs& in) {
  if (!in.relation_file.empty()) return relation_table_from_json(read_json_file(in.relation_file));
  if (in.feature.empty()) throw std::invalid_argument("er needs --relation or --feature");
  FeatureSpec spec = in.feature_spec();
  return RelationTable::from_function(in.k, in.n,
                                      [&](const KSet& x) { return feature_label_kset(spec, x); });
}

ARnRelation build_arn_input(const Inputs& in) {
  if (!in.relation_file.empty()) return arn_relation_from_json(read_json_file(in.relation_file));
  if (in.feature.empty()) throw std::invalid_argument("arn needs --relation or --feature");
  FeatureSpec spec = in.feature_spec();
  ARnRelation R;
  R.n = in.n;
  R.universe = initial_tree(in.depth);
  for (const Approximation& a : enumerate_approx(R.universe, R.n))
    R.labels[a.to_text()] = feature_label_approx(spec, a);
  return R;
}

R1nRelation build_r1n_input(const Inputs& in) {
  if (!in.relation_file.empty()) return r1n_relation_from_json(read_json_file(in.relation_file));
  if (in.feature.empty()) throw std::invalid_argument("r1n needs --relation or --feature");
  FeatureSpec spec = in.feature_spec();
  R1nRelation E;
  E.n = in.n;
  E.universe = initial_tree(in.depth);
  for (const Block& u : enumerate_subtrees(E.universe, E.n, Approximation()))
    E.labels[u.to_text()] = feature_label_block(spec, u);
  return E;
}

std::pair<Front, FrontRelation> build_front_input(const Inputs& in) {
  Front F = in.front_file.empty() ? schreier_front(initial_tree(in.depth))
                                  : front_from_json(read_json_file(in.front_file));
  FrontRelation R;
  if (!in.relation_file.empty()) {
    R = front_relation_from_json(read_json_file(in.relation_file));
  } else if (!in.feature.empty()) {
    FeatureSpec spec = in.feature_spec();
    for (const Approximation& t : F.elements)
      R.labels[t.to_text()] = feature_label_approx(spec, t);
  } else {
    throw std::invalid_argument("front needs --relation or --feature");
  }
  return {std::move(F), std::move(R)};
}

std::pair<Member, ExtensionColoring> build_pigeonhole_input(const Inputs& in) {
  if (!in.coloring_file.empty()) {
    ColoringFile c = coloring_from_json(read_json_file(in.coloring_file));
    return {initial_tree(c.universe_depth), std::move(c.coloring)};
  }
  if (in.feature.empty()) throw std::invalid_argument("pigeonhole needs --coloring or --feature");
  FeatureSpec spec = in.feature_spec();
  Member B = initial_tree(in.depth);
  ExtensionColoring coloring;
  coloring.a = truncate(B, 1);
  for (const Block& u : enumerate_subtrees(B, coloring.a.length(), coloring.a))
    coloring.colors[u.to_text()] = static_cast<int>(feature_label_block(spec, u) % 2);
  return {std::move(B), std::move(coloring)};
}

int emit_report(const Inputs& in, const std::optional<json>& certificate) {
  json report;
  report["command"] = "canonize:" + in.kind;
  report["outcome"] = certificate ? "ok" : "exhausted";
  if (certificate) {
    report["certificate"] = *certificate;
    if (!in.out_file.empty()) {
      std::ofstream out(in.out_file);
      out << certificate->dump(2) << "\n";
      report["certificate_path"] = in.out_file;
    }
  }
  std::cout << report.dump(2) << "\n";
  return certificate ? kOk : kExhausted;
}

int cmd_enumerate(const Inputs& in, const std::string& what, const std::string& within) {
  Member x = within.empty() ? initial_tree(in.depth) : member_from_json(read_json_file(within));
  std::vector<std::string> lines;
  if (what == "blocks") {
    std::vector<Block> all;
    for (int k = 0; k < x.depth(); ++k) {
      auto more = enumerate_subtrees(x, k, Approximation());
      all.insert(all.end(), more.begin(), more.end());
    }
    std::sort(all.begin(), all.end());
    for (const Block& u : all) lines.push_back(u.to_text());
  } else if (what.rfind("approx:", 0) == 0) {
    for (const Approximation& a : enumerate_approx(x, std::stoi(what.substr(7))))
      lines.push_back(a.to_text());
  } else if (what.rfind("subtrees:", 0) == 0) {
    for (const Block& u : enumerate_subtrees(x, std::stoi(what.substr(9)), Approximation()))
      lines.push_back(u.to_text());
  } else {
    throw std::invalid_argument("--what must be blocks, approx:N, or subtrees:K");
  }
  for (const std::string& line : lines) std::cout << line << "\n";
  std::cout << "count: " << lines.size() << "\n";
  return kOk;
}

int cmd_count_canonical(int n, bool verify) {
  std::cout << canonical_census(n) << "\n";
  if (!verify) return kOk;
  if (n > 3) throw std::invalid_argument("--verify supports n <= 3");
  // pairwise-distinct check: each tree sequence must induce its own partition
  // of the length-n approximations of the first n+2 blocks
  Member universe = initial_tree(n + 2);
  auto elems = enumerate_approx(universe, n);
  std::set<std::vector<int>> partitions;
  for (const TreeSeq& seq : enumerate_treeseqs(n)) {
    std::map<std::string, int> classes;
    std::vector<int> signature;
    for (const Approximation& a : elems) {
      std::string key;
      for (int i = 0; i < n; ++i) key += project(seq.trees[i], a.blocks[i]).to_text() + "|";
      signature.push_back(
          static_cast<int>(classes.try_emplace(key, static_cast<int>(classes.size())).first->second));
    }
    if (!partitions.insert(std::move(signature)).second) {
      std::cout << "duplicate relation found for " << seq.to_text() << "\n";
      return kVerifyFailed;
    }
  }
  std::cout << "all " << partitions.size() << " relations distinct on the first " << (n + 2)
            << " blocks\n";
  return kOk;
}

int cmd_canonize(const Inputs& in) {
  if (in.kind == "er") {
    RelationTable table = build_er_input(in);
    int target = in.min_size > 0 ? in.min_size : table.k + 1;
    auto cert = er_canonize(table, target);
    return emit_report(in, cert ? std::optional<json>(to_json(*cert)) : std::nullopt);
  }
  if (in.kind == "arn") {
    ARnRelation R = build_arn_input(in);
    int min_blocks = in.min_size > 0 ? in.min_size : R.n;
    auto cert = canonize_arn(R, min_blocks);
    return emit_report(in, cert ? std::optional<json>(to_json(*cert)) : std::nullopt);
  }
  if (in.kind == "r1n") {
    R1nRelation E = build_r1n_input(in);
    int min_blocks = in.min_size > 0 ? in.min_size : E.n + 1;
    auto cert = canonize_r1n(E, min_blocks);
    return emit_report(in, cert ? std::optional<json>(to_json(*cert)) : std::nullopt);
  }
  if (in.kind == "front") {
    auto [F, R] = build_front_input(in);
    int min_blocks = in.min_size > 0 ? in.min_size : 1;
    auto cert = canonize_front(F, R, min_blocks);
    return emit_report(in, cert ? std::optional<json>(to_json(*cert)) : std::nullopt);
  }
  if (in.kind == "pigeonhole") {
    auto [B, coloring] = build_pigeonhole_input(in);
    int new_blocks = in.min_size > 0 ? in.min_size : 2;
    auto cert = homogenize(B, coloring, new_blocks);
    return emit_report(in, cert ? std::optional<json>(to_json(*cert)) : std::nullopt);
  }
  throw std::invalid_argument("--kind must be er, arn, r1n, front, or pigeonhole");
}

int cmd_verify(const Inputs& in) {
  json cj = read_json_file(in.certificate_file);
  bool ok = false;
  if (in.kind == "er") {
    ok = verify_er_certificate(build_er_input(in), er_certificate_from_json(cj));
  } else if (in.kind == "arn") {
    ok = verify_arn_certificate(build_arn_input(in), canon_certificate_from_json(cj));
  } else if (in.kind == "r1n") {
    ok = verify_r1n_certificate(build_r1n_input(in), r1n_certificate_from_json(cj));
  } else if (in.kind == "front") {
    auto [F, R] = build_front_input(in);
    ok = verify_front_certificate(F, R, front_certificate_from_json(cj));
  } else if (in.kind == "pigeonhole") {
    auto [B, coloring] = build_pigeonhole_input(in);
    ok = verify_homogeneity(B, coloring, homogeneity_certificate_from_json(cj));
  } else {
    throw std::invalid_argument("--kind must be er, arn, r1n, front, or pigeonhole");
  }
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"combinatorics engine for a height-2 tree Ramsey space"};
  app.require_subcommand(1);

  Inputs in;
  std::string what, within;

  CLI::App* enumerate = app.add_subcommand("enumerate", "list blocks/approximations");
  enumerate->add_option("--depth", in.depth, "universe = first DEPTH blocks of the ambient tree");
  enumerate->add_option("--what", what, "blocks | approx:N | subtrees:K")->required();
  enumerate->add_option("--within", within, "member JSON file to use as the universe");

  CLI::App* count = app.add_subcommand("count-canonical", "canonical relation census");
  count->add_option("--n", in.n, "approximation length")->required();
  count->add_flag("--verify", in.verify_flag, "check pairwise distinctness (n <= 3)");

  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--kind", in.kind, "er | arn | r1n | front | pigeonhole")->required();
    cmd->add_option("--relation", in.relation_file, "relation JSON file");
    cmd->add_option("--coloring", in.coloring_file, "coloring JSON file");
    cmd->add_option("--front", in.front_file, "front JSON file");
    cmd->add_option("--feature", in.feature, "builtin feature spec");
    cmd->add_option("--n", in.n, "length / shape / ground-set size");
    cmd->add_option("--k", in.k, "subset arity (er)");
    cmd->add_option("--depth", in.depth, "universe = first DEPTH blocks");
    cmd->add_option("--min-size", in.min_size, "target / minimum blocks / new blocks");
    cmd->add_option("--seed", in.seed, "seed for seeded_random");
  };

  CLI::App* canonize = app.add_subcommand("canonize", "search for a canonical certificate");
  add_inputs(canonize);
  canonize->add_option("--out", in.out_file, "write the certificate JSON here");

  CLI::App* verify = app.add_subcommand("verify", "re-verify a certificate");
  add_inputs(verify);
  verify->add_option("--certificate", in.certificate_file, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(in, what, within);
    if (count->parsed()) return cmd_count_canonical(in.n, in.verify_flag);
    if (canonize->parsed()) return cmd_canonize(in);
    return cmd_verify(in);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    // a certificate that fails its own re-verification is an implementation bug
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace r1
