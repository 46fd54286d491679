#include "r1space/features.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace r1 {

namespace {
const std::set<std::string> kKnown = {"const",           "stem_parity", "min_leaf",
                                      "max_leaf",        "leaf_sum_parity", "length",
                                      "last_block",      "seeded_random"};
}

FeatureSpec FeatureSpec::parse(const std::string& text) {
  FeatureSpec spec;
  auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    spec.arg = std::stoi(text.substr(colon + 1));
    spec.has_arg = true;
  }
  if (!kKnown.count(spec.name))
    throw std::invalid_argument("unknown feature: " + spec.name);
  return spec;
}

std::string FeatureSpec::to_text() const {
  return has_arg ? name + ":" + std::to_string(arg) : name;
}

std::uint64_t fnv1a(const std::string& text, std::uint64_t seed) {
  std::uint64_t h = 14695981039346656037ull ^ (seed * 0x9e3779b97f4a7c15ull);
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {
long leaf_sum(const Block& u) { return std::accumulate(u.leaves.begin(), u.leaves.end(), 0L); }

[[noreturn]] void bad_index(const FeatureSpec& spec) {
  throw std::invalid_argument("feature " + spec.to_text() + ": component index out of range");
}
}  // namespace

long feature_label_approx(const FeatureSpec& spec, const Approximation& a) {
  if (spec.name == "const") return 0;
  if (spec.name == "length") return a.length();
  if (spec.name == "last_block") {
    if (a.empty()) return 0;
    return static_cast<long>(fnv1a(a.blocks.back().to_text(), 0) & 0x7fffffff);
  }
  if (spec.name == "seeded_random")
    return static_cast<long>(fnv1a(a.to_text(), static_cast<std::uint64_t>(spec.arg)) % 6);
  if (spec.arg < 0 || spec.arg >= a.length()) bad_index(spec);
  const Block& u = a.blocks[spec.arg];
  if (spec.name == "stem_parity") return u.m % 2;
  if (spec.name == "min_leaf") return u.leaves.front();
  if (spec.name == "max_leaf") return u.leaves.back();
  if (spec.name == "leaf_sum_parity") return leaf_sum(u) % 2;
  throw std::invalid_argument("feature " + spec.name + " does not apply to approximations");
}

long feature_label_block(const FeatureSpec& spec, const Block& u) {
  if (spec.name == "const") return 0;
  if (spec.name == "length") return u.shape();
  if (spec.name == "last_block") return static_cast<long>(fnv1a(u.to_text(), 0) & 0x7fffffff);
  if (spec.name == "seeded_random")
    return static_cast<long>(fnv1a(u.to_text(), static_cast<std::uint64_t>(spec.arg)) % 2);
  if (spec.name == "stem_parity") return u.m % 2;
  if (spec.name == "min_leaf") return u.leaves.front();
  if (spec.name == "max_leaf") return u.leaves.back();
  if (spec.name == "leaf_sum_parity") return leaf_sum(u) % 2;
  throw std::invalid_argument("feature " + spec.name + " does not apply to blocks");
}

long feature_label_kset(const FeatureSpec& spec, const KSet& x) {
  int k = static_cast<int>(x.size());
  if (spec.name == "const") return 0;
  if (spec.name == "length") return k;
  if (spec.name == "last_block") return x.back();
  if (spec.name == "seeded_random")
    return static_cast<long>(fnv1a(kset_text(x), static_cast<std::uint64_t>(spec.arg)) % 6);
  if (spec.name == "leaf_sum_parity") return std::accumulate(x.begin(), x.end(), 0L) % 2;
  if (spec.arg < 0 || spec.arg >= k) bad_index(spec);
  if (spec.name == "stem_parity") return x[spec.arg] % 2;
  if (spec.name == "min_leaf") return x[spec.arg];
  if (spec.name == "max_leaf") return x[k - 1 - spec.arg];
  throw std::invalid_argument("feature " + spec.name + " does not apply to k-sets");
}

}  // namespace r1
