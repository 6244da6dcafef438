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

#include "cliffgraph/graph.hpp"

#include <string>

#include "cliffgraph/error.hpp"

namespace cliffgraph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter: return "parameter error";
    case ErrorKind::kCapacity: return "capacity error";
    case ErrorKind::kParse: return "parse error";
    case ErrorKind::kAmbient: return "ambient mismatch";
    case ErrorKind::kPrecondition: return "precondition violated";
  }
  return "error";
}

ParseError::ParseError(std::size_t offset, const std::string& what)
    : Error(ErrorKind::kParse, what + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

void check_order(int n) {
  if (n < 1) throw Error(ErrorKind::kParameter, "graph needs at least one vertex, got " + std::to_string(n));
  if (n > Graph::kMaxVertices) {
    throw Error(ErrorKind::kCapacity, "graph has " + std::to_string(n) + " vertices; the bound is 64");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  const std::uint64_t all = g.vertex_mask();
  for (int i = 0; i < n; ++i) {
    const std::uint64_t r = rows[i];
    if (r & ~all) throw Error(ErrorKind::kParameter, "row " + std::to_string(i + 1) + " has bits past vertex n");
    if ((r >> i) & 1U) throw Error(ErrorKind::kParameter, "loop at vertex " + std::to_string(i + 1));
    g.rows_[i] = r;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j) != g.has_edge(j, i)) {
        throw Error(ErrorKind::kParameter,
                    "adjacency not symmetric at {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
      }
    }
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorKind::kParameter, "edge endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) throw Error(ErrorKind::kParameter, "loop at vertex " + std::to_string(a + 1));
    g.rows_[a] |= std::uint64_t{1} << b;
    g.rows_[b] |= std::uint64_t{1} << a;
  }
  return g;
}

int Graph::edge_count() const noexcept {
  int total = 0;
  for (int i = 0; i < n_; ++i) total += degree(i);
  return total / 2;
}

std::uint64_t Graph::vertex_mask() const noexcept {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (has_edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

int Graph::isolated_count() const noexcept {
  int count = 0;
  for (int i = 0; i < n_; ++i) count += row(i) == 0 ? 1 : 0;
  return count;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw Error(ErrorKind::kParameter, "permutation length differs from vertex count");
  }
  Graph g(n_);
  std::uint64_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    const int p = perm[i];
    if (p < 0 || p >= n_ || ((seen >> p) & 1U)) throw Error(ErrorKind::kParameter, "not a permutation");
    seen |= std::uint64_t{1} << p;
  }
  for (int i = 0; i < n_; ++i) {
    std::uint64_t r = row(i);
    std::uint64_t out = 0;
    while (r) {
      const int j = std::countr_zero(r);
      r &= r - 1;
      out |= std::uint64_t{1} << perm[j];
    }
    g.rows_[static_cast<std::size_t>(perm[i])] = out;
  }
  return g;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (int i = 0; i < a.n_; ++i) {
    if (a.row(i) != b.row(i)) return false;
  }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  if (n > Graph::kMaxVertices) {
    throw Error(ErrorKind::kCapacity,
                "union has " + std::to_string(n) + " vertices; the bound is 64");
  }
  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  const int shift = a.order();
  for (int i = 0; i < a.order(); ++i) rows[i] = a.row(i);
  for (int i = 0; i < b.order(); ++i) rows[shift + i] = b.row(i) << shift;
  return Graph::from_rows(std::span(rows.data(), n));
}

bool is_mating(const Graph& g) noexcept {
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (g.row(i) == g.row(j)) return false;
    }
  }
  return true;
}

namespace {

void require(bool ok, const std::string& constraint) {
  if (!ok) throw Error(ErrorKind::kParameter, "constraint violated: " + constraint);
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path requires n >= 1");
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  require(n >= 1, "star requires n >= 1");
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete requires n >= 1");
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph edgeless_graph(int n) {
  require(n >= 1, "edgeless requires n >= 1");
  return Graph(n);
}

Graph gkm_graph(int k, int m) {
  require(k >= 0 && m >= 0, "gkm requires k >= 0 and m >= 0");
  require(k + m >= 1, "gkm requires k + m >= 1");
  check_order(2 * k + m);
  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < k; ++t) edges.emplace_back(2 * t, 2 * t + 1);
  return Graph::from_edges(2 * k + m, edges);
}

Graph dynkin_graph(DynkinType type, int rank) {
  switch (type) {
    case DynkinType::kA:
      require(rank >= 1, "dynkin A_n requires n >= 1");
      return path_graph(rank);
    case DynkinType::kD: {
      require(rank >= 4, "dynkin D_n requires n >= 4");
      check_order(rank);
      // Path 1..n-1, vertex n attached to path vertex n-2.
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      return Graph::from_edges(rank, edges);
    }
    case DynkinType::kE: {
      require(rank >= 6 && rank <= 8, "dynkin E_n requires n in {6,7,8}");
      // Path 1..n-1, vertex n attached to path vertex 3.
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(2, rank - 1);
      return Graph::from_edges(rank, edges);
    }
  }
  throw Error(ErrorKind::kParameter, "unknown Dynkin type");
}

}  // namespace cliffgraph
