#include "r1space/ellentuck.hpp"

#include <algorithm>
#include <stdexcept>

#include "r1space/core.hpp"

namespace r1 {

std::string kset_text(const KSet& x) {
  std::string out;
  for (size_t j = 0; j < x.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(x[j]);
  }
  return out;
}

std::vector<KSet> ksubsets_of(const std::vector<int>& M, int k) {
  std::vector<KSet> out;
  for_each_combination(static_cast<int>(M.size()), k, [&](const std::vector<int>& idx) {
    KSet x(idx.size());
    for (size_t j = 0; j < idx.size(); ++j) x[j] = M[idx[j]];
    out.push_back(std::move(x));
    return true;
  });
  return out;
}

RelationTable RelationTable::from_function(int k, int N,
                                           const std::function<long(const KSet&)>& f) {
  RelationTable table;
  table.k = k;
  table.N = N;
  std::vector<int> ground(N);
  for (int i = 0; i < N; ++i) ground[i] = i;
  for (const KSet& x : ksubsets_of(ground, k)) table.labels[x] = f(x);
  return table;
}

long RelationTable::label_of(const KSet& x) const {
  auto it = labels.find(x);
  if (it == labels.end())
    throw std::invalid_argument("relation table is not total: missing {" + kset_text(x) + "}");
  return it->second;
}

void RelationTable::validate_total() const {
  std::vector<int> ground(N);
  for (int i = 0; i < N; ++i) ground[i] = i;
  for (const KSet& x : ksubsets_of(ground, k)) label_of(x);
}

bool e_I_equiv(const IndexSet& I, const KSet& x, const KSet& y) {
  if (x.size() != y.size()) throw std::invalid_argument("e_I_equiv: arity mismatch");
  for (int i : I) {
    if (i < 0 || i >= static_cast<int>(x.size()))
      throw std::invalid_argument("e_I_equiv: index outside 0..k-1");
    if (x[i] != y[i]) return false;
  }
  return true;
}

bool verify_monochromatic(const RelationTable& coloring, const std::vector<int>& M) {
  auto sets = ksubsets_of(M, coloring.k);
  for (size_t j = 1; j < sets.size(); ++j) {
    if (coloring.label_of(sets[j]) != coloring.label_of(sets[0])) return false;
  }
  return true;
}

std::optional<std::vector<int>> finite_ramsey(const RelationTable& coloring, int target) {
  if (coloring.k < 1) throw std::invalid_argument("finite_ramsey: k must be at least 1");
  if (target < coloring.k) throw std::invalid_argument("finite_ramsey: target must be >= k");
  for (int size = coloring.N; size >= target; --size) {
    std::optional<std::vector<int>> found;
    for_each_combination(coloring.N, size, [&](const std::vector<int>& M) {
      bool mono = true;
      long first = 0;
      bool have_first = false;
      for_each_combination(size, coloring.k, [&](const std::vector<int>& idx) {
        KSet x(idx.size());
        for (size_t j = 0; j < idx.size(); ++j) x[j] = M[idx[j]];
        long label = coloring.label_of(x);
        if (!have_first) {
          first = label;
          have_first = true;
        } else if (label != first) {
          mono = false;
          return false;
        }
        return true;
      });
      if (mono) {
        found = M;
        return false;
      }
      return true;
    });
    if (found) {
      if (!verify_monochromatic(coloring, *found))
        throw std::logic_error("finite_ramsey: candidate failed re-verification");
      return found;
    }
  }
  return std::nullopt;
}

std::vector<IndexSet> enumerate_index_sets(int k) {
  std::vector<IndexSet> out;
  out.push_back({});
  std::vector<int> acc;
  auto rec = [&](auto&& self, int next) -> void {
    for (int i = next; i < k; ++i) {
      acc.push_back(i);
      out.push_back(acc);
      self(self, i + 1);
      acc.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {
bool agrees_with_index_relation(const RelationTable& table, const std::vector<int>& M,
                                const IndexSet& I) {
  auto sets = ksubsets_of(M, table.k);
  for (size_t a = 0; a < sets.size(); ++a) {
    long la = table.label_of(sets[a]);
    for (size_t b = a + 1; b < sets.size(); ++b) {
      bool same_label = la == table.label_of(sets[b]);
      if (same_label != e_I_equiv(I, sets[a], sets[b])) return false;
    }
  }
  return true;
}
}  // namespace

std::optional<ErCertificate> er_canonize(const RelationTable& table, int target) {
  if (target < table.k + 1)
    throw std::invalid_argument("er_canonize: target must be >= k+1 for non-vacuous agreement");
  auto index_sets = enumerate_index_sets(table.k);
  for (int size = table.N; size >= target; --size) {
    std::optional<ErCertificate> found;
    for_each_combination(table.N, size, [&](const std::vector<int>& M) {
      for (const IndexSet& I : index_sets) {
        if (agrees_with_index_relation(table, M, I)) {
          long n = static_cast<long>(ksubsets_of(M, table.k).size());
          found = ErCertificate{M, I, n * (n - 1) / 2};
          return false;
        }
      }
      return true;
    });
    if (found) {
      if (!verify_er_certificate(table, *found))
        throw std::logic_error("er_canonize: candidate failed re-verification");
      return found;
    }
  }
  return std::nullopt;
}

bool verify_er_certificate(const RelationTable& table, const ErCertificate& cert) {
  int prev = -1;
  for (int v : cert.M) {
    if (v <= prev || v < 0 || v >= table.N) return false;
    prev = v;
  }
  auto sets = ksubsets_of(cert.M, table.k);
  long pairs = 0;
  for (size_t a = 0; a < sets.size(); ++a) {
    for (size_t b = a + 1; b < sets.size(); ++b) {
      bool same_label = table.label_of(sets[a]) == table.label_of(sets[b]);
      if (same_label != e_I_equiv(cert.I, sets[a], sets[b])) return false;
      ++pairs;
    }
  }
  return pairs == cert.verified_pairs;
}

}  // namespace r1
