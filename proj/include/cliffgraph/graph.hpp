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

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cliffgraph {

/// Simple loop-free undirected graph on at most 64 vertices.
///
/// Row i is a 64-bit word whose bit j is set iff {i, j} is an edge.
/// Vertices are 0-based here; every human-readable rendering uses 1-based
/// numbering. Values are immutable once constructed.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Edgeless graph on n vertices, 1 <= n <= 64.
  explicit Graph(int n);

  /// Throws kParameter unless the rows form a symmetric zero-diagonal matrix.
  static Graph from_rows(std::span<const std::uint64_t> rows);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  std::uint64_t row(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint64_t> rows() const noexcept {
    return {rows_.data(), static_cast<std::size_t>(n_)};
  }
  bool has_edge(int i, int j) const noexcept { return (row(i) >> j) & 1U; }
  int degree(int i) const noexcept { return std::popcount(row(i)); }
  int edge_count() const noexcept;
  /// All-ones word over the n vertex bits.
  std::uint64_t vertex_mask() const noexcept;

  std::vector<std::pair<int, int>> edges() const;
  int isolated_count() const noexcept;

  /// Graph with vertices relabelled: new vertex perm[i] is old vertex i.
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  Graph() = default;

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Block-diagonal union; vertices of b follow those of a. Throws kCapacity
/// when the result would exceed 64 vertices.
Graph disjoint_union(const Graph& a, const Graph& b);

/// No two distinct vertices share the same open neighbourhood.
bool is_mating(const Graph& g) noexcept;

// Named families, with 1-based descriptions matching the rendered output.
Graph path_graph(int n);       // edges {i, i+1}
Graph star_graph(int n);       // vertex 1 joined to all others
Graph complete_graph(int n);
Graph cycle_graph(int n);      // n >= 3
Graph edgeless_graph(int n);
Graph gkm_graph(int k, int m);  // k disjoint edges {1,2},{3,4},... then m isolated vertices

enum class DynkinType { kA, kD, kE };
Graph dynkin_graph(DynkinType type, int rank);

}  // namespace cliffgraph
