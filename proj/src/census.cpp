// Copyright 2026 The cliffgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cliffgraph/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

#include "cliffgraph/error.hpp"
#include "cliffgraph/gf2.hpp"

namespace cliffgraph::census {

namespace {

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

void require_census_order(int n) {
  if (n > kMaxCensusVertices) {
    throw Error(ErrorKind::kCapacity, "census is limited to n <= 8, got " + std::to_string(n));
  }
  if (n < 1) throw Error(ErrorKind::kParameter, "census requires n >= 1, got " + std::to_string(n));
}

// Branch and bound over relabelings. Placing the vertex at position p
// appends column p of the code, so a prefix already larger than the best
// code's prefix can be cut.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_bits_(pair_count(n_)) {
    best_ = total_bits_ == 0 ? 0 : (std::uint64_t{1} << total_bits_) - 1;
  }

  std::uint64_t run() {
    if (n_ > 1) descend(0, 0, 0);
    return best_;
  }

 private:
  void descend(int pos, std::uint64_t code, std::uint64_t used) {
    if (pos == n_) {
      best_ = std::min(best_, code);
      return;
    }
    const int shift = total_bits_ - pair_count(pos + 1);
    for (int v = 0; v < n_; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = code;
      const std::uint64_t row = g_.row(v);
      for (int i = 0; i < pos; ++i) next = (next << 1) | ((row >> perm_[i]) & 1U);
      if (next > (best_ >> shift)) continue;
      perm_[pos] = v;
      descend(pos + 1, next, used | (std::uint64_t{1} << v));
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::uint64_t best_;
  std::array<int, Graph::kMaxVertices> perm_{};
};

std::vector<Graph> extend_classes(const std::vector<Graph>& parents, int n, int threads) {
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  const std::size_t total = parents.size() * subsets;
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads), total));

  std::vector<std::vector<std::uint64_t>> found(workers);
  auto scan = [&](std::size_t worker) {
    const std::size_t begin = total * worker / workers;
    const std::size_t end = total * (worker + 1) / workers;
    auto& out = found[worker];
    std::array<std::uint64_t, kMaxCensusVertices> rows{};
    for (std::size_t idx = begin; idx < end; ++idx) {
      const Graph& parent = parents[idx / subsets];
      const std::uint64_t nb = idx % subsets;
      for (int i = 0; i + 1 < n; ++i) rows[i] = parent.row(i) | (((nb >> i) & 1U) << (n - 1));
      rows[n - 1] = nb;
      out.push_back(canonical_form(Graph::from_rows(std::span(rows.data(), n))).code);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint64_t> codes;
  for (const auto& part : found) codes.insert(codes.end(), part.begin(), part.end());
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const std::uint64_t code : codes) out.push_back(from_canonical({n, code}));
  return out;
}

std::vector<std::vector<Graph>> class_chain(int max_vertices, int threads) {
  require_census_order(max_vertices);
  if (threads <= 0) threads = default_threads();
  std::vector<std::vector<Graph>> chain;
  chain.push_back({Graph(1)});
  for (int n = 2; n <= max_vertices; ++n) chain.push_back(extend_classes(chain.back(), n, threads));
  return chain;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  require_census_order(g.order());
  return {g.order(), CanonicalSearch(g).run()};
}

Graph from_canonical(const CanonicalForm& form) {
  require_census_order(form.n);
  const int n = form.n;
  const int total = pair_count(n);
  std::vector<std::pair<int, int>> edges;
  int bit = total - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --bit) {
      if ((form.code >> bit) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

int default_threads() {
  if (const char* env = std::getenv("CLIFFGRAPH_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Graph> enumerate_classes(int n, int threads) {
  if (n < 1 || n > kMaxCensusVertices) {
    throw Error(ErrorKind::kParameter, "enumeration requires 1 <= n <= 8, got " + std::to_string(n));
  }
  return class_chain(n, threads).back();
}

Profile profile_of(const Graph& g) {
  Profile p;
  const auto adj = gf2::adjacency(g);
  p.rank = gf2::rank(adj);
  p.det_odd = gf2::det_parity(adj) == gf2::Parity::kOdd;
  p.det_nonzero = gf2::det_integer(g) != 0;
  p.mating = is_mating(g);
  p.isolated = g.isolated_count();
  return p;
}

std::int64_t CensusTable::total() const {
  std::int64_t sum = 0;
  for (const auto& [profile, count] : rows) sum += count;
  return sum;
}

CensusTable census_table(int n, const std::vector<Graph>& classes) {
  CensusTable t;
  t.n = n;
  for (const Graph& g : classes) ++t.rows[profile_of(g)];
  return t;
}

CensusTable census_table(int n, int threads) { return census_table(n, enumerate_classes(n, threads)); }

std::vector<CensusTable> census_tables(int max_vertices, int threads) {
  const auto chain = class_chain(max_vertices, threads);
  std::vector<CensusTable> out;
  for (std::size_t i = 0; i < chain.size(); ++i) out.push_back(census_table(static_cast<int>(i) + 1, chain[i]));
  return out;
}

std::map<std::uint64_t, std::int64_t> cliff_counts(const CensusTable& table) {
  std::map<std::uint64_t, std::int64_t> out;
  for (const auto& [p, count] : table.rows) out[std::uint64_t{1} << (table.n - p.rank)] += count;
  return out;
}

std::map<std::uint64_t, std::int64_t> cliff_counts(int n, int threads) {
  return cliff_counts(census_table(n, threads));
}

namespace {

struct SequenceInfo {
  SequenceId id;
  const char* name;
  const char* description;
  std::vector<std::int64_t> cited;  // published values, starting at the first indexed vertex count
};

const std::vector<SequenceInfo>& sequence_table() {
  static const std::vector<SequenceInfo> table = {
      {SequenceId::kA000088, "A000088", "graphs on n unlabeled vertices", {1, 2, 4, 11, 34, 156, 1044, 12346}},
      {SequenceId::kA141040, "A141040", "odd-determinant graphs on 2n vertices", {1, 4, 47}},
      {SequenceId::kA140981, "A140981", "even-determinant graphs on n vertices", {1, 1, 4, 7, 34, 109, 1044}},
      {SequenceId::kA004110, "A004110", "mating graphs on n vertices", {1, 1, 2, 5, 16, 78, 588}},
      {SequenceId::kA141580, "A141580", "non-mating graphs on n vertices", {0, 1, 2, 6, 18, 78, 456}},
      {SequenceId::kA109717, "A109717", "graphs on n vertices with invertible adjacency matrix",
       {0, 1, 1, 4, 9, 57, 354}},
      {SequenceId::kA133206, "A133206", "graphs on n vertices with degenerate adjacency matrix",
       {1, 1, 3, 7, 25, 99, 690}},
      {SequenceId::kA133279, "A133279", "mating graphs on n vertices with degenerate adjacency matrix",
       {1, 0, 1, 1, 7, 21, 234}},
      {SequenceId::kA103869, "A103869", "even-determinant graphs on n vertices with invertible adjacency matrix",
       {0, 0, 1, 0, 9, 10, 354}},
  };
  return table;
}

const SequenceInfo& info(SequenceId id) {
  for (const auto& s : sequence_table()) {
    if (s.id == id) return s;
  }
  throw Error(ErrorKind::kParameter, "unsupported sequence");
}

std::int64_t count_if(const CensusTable& t, bool (*pred)(const Profile&)) {
  std::int64_t sum = 0;
  for (const auto& [p, count] : t.rows) {
    if (pred(p)) sum += count;
  }
  return sum;
}

}  // namespace

std::string to_string(SequenceId id) { return info(id).name; }

std::string describe(SequenceId id) { return info(id).description; }

std::optional<SequenceId> parse_sequence_id(const std::string& id) {
  for (const auto& s : sequence_table()) {
    if (id == s.name) return s.id;
  }
  return std::nullopt;
}

std::vector<SequenceId> all_sequences() {
  std::vector<SequenceId> out;
  for (const auto& s : sequence_table()) out.push_back(s.id);
  return out;
}

std::vector<int> term_vertices(SequenceId id, int max_vertices) {
  std::vector<int> out;
  const int step = id == SequenceId::kA141040 ? 2 : 1;
  for (int v = step; v <= max_vertices; v += step) out.push_back(v);
  return out;
}

std::int64_t term_value(SequenceId id, const CensusTable& t) {
  switch (id) {
    case SequenceId::kA000088: return t.total();
    case SequenceId::kA141040: return count_if(t, [](const Profile& p) { return p.det_odd; });
    case SequenceId::kA140981: return count_if(t, [](const Profile& p) { return !p.det_odd; });
    case SequenceId::kA004110: return count_if(t, [](const Profile& p) { return p.mating; });
    case SequenceId::kA141580: return count_if(t, [](const Profile& p) { return !p.mating; });
    case SequenceId::kA109717: return count_if(t, [](const Profile& p) { return p.det_nonzero; });
    case SequenceId::kA133206: return count_if(t, [](const Profile& p) { return !p.det_nonzero; });
    case SequenceId::kA133279: return count_if(t, [](const Profile& p) { return p.mating && !p.det_nonzero; });
    case SequenceId::kA103869: return count_if(t, [](const Profile& p) { return !p.det_odd && p.det_nonzero; });
  }
  throw Error(ErrorKind::kParameter, "unsupported sequence");
}

std::map<int, std::int64_t> cited_terms(SequenceId id) {
  std::map<int, std::int64_t> out;
  const auto& s = info(id);
  const int step = id == SequenceId::kA141040 ? 2 : 1;
  for (std::size_t i = 0; i < s.cited.size(); ++i) out[step * (static_cast<int>(i) + 1)] = s.cited[i];
  return out;
}

std::vector<SequenceTerm> sequence(SequenceId id, const std::vector<CensusTable>& tables) {
  const auto cited = cited_terms(id);
  std::vector<SequenceTerm> out;
  int index = 0;
  for (const int v : term_vertices(id, static_cast<int>(tables.size()))) {
    SequenceTerm t;
    t.index = ++index;
    t.vertices = v;
    t.value = term_value(id, tables[static_cast<std::size_t>(v - 1)]);
    if (auto it = cited.find(v); it != cited.end()) t.cited = it->second;
    out.push_back(t);
  }
  return out;
}

std::vector<std::int64_t> sequence(SequenceId id, int max_vertices, int threads) {
  std::vector<std::int64_t> out;
  for (const auto& t : sequence(id, census_tables(max_vertices, threads))) out.push_back(t.value);
  return out;
}

std::vector<IdentityCheck> check_identities(const std::vector<CensusTable>& tables) {
  std::vector<IdentityCheck> out;
  for (const auto& t : tables) {
    const std::string at = "(" + std::to_string(t.n) + ")";
    auto v = [&](SequenceId id) { return term_value(id, t); };
    // Odd-determinant count on n vertices; zero when n is odd.
    const std::int64_t odd = t.n % 2 == 0 ? v(SequenceId::kA141040) : 0;
    out.push_back({"A140981" + at + " = A000088" + at + " - odd-determinant" + at,
                   v(SequenceId::kA140981) == v(SequenceId::kA000088) - odd});
    out.push_back({"A141580" + at + " = A000088" + at + " - A004110" + at,
                   v(SequenceId::kA141580) == v(SequenceId::kA000088) - v(SequenceId::kA004110)});
    out.push_back({"A133206" + at + " = A000088" + at + " - A109717" + at,
                   v(SequenceId::kA133206) == v(SequenceId::kA000088) - v(SequenceId::kA109717)});
    out.push_back({"A133279" + at + " = A004110" + at + " - A109717" + at,
                   v(SequenceId::kA133279) == v(SequenceId::kA004110) - v(SequenceId::kA109717)});
    out.push_back({"A103869" + at + " = A109717" + at + " - odd-determinant" + at,
                   v(SequenceId::kA103869) == v(SequenceId::kA109717) - odd});
    out.push_back({"A103869" + at + " = A140981" + at + " - A133206" + at,
                   v(SequenceId::kA103869) == v(SequenceId::kA140981) - v(SequenceId::kA133206)});
  }
  return out;
}

HierarchyReport hierarchy_check(int n, int threads) {
  HierarchyReport r;
  r.n = n;
  for (const Graph& g : enumerate_classes(n, threads)) {
    const Profile p = profile_of(g);
    ++r.classes;
    r.odd_determinant += p.det_odd ? 1 : 0;
    r.invertible += p.det_nonzero ? 1 : 0;
    r.mating += p.mating ? 1 : 0;
    if (p.det_odd && !p.det_nonzero) r.odd_subset_invertible = false;
    if (p.det_nonzero && !p.mating) r.invertible_subset_mating = false;
    if (p.det_nonzero && !p.det_odd) r.invertible_even.push_back(g);
    if (p.mating && !p.det_odd) r.mating_not_odd.push_back(g);
  }
  return r;
}

}  // namespace cliffgraph::census
