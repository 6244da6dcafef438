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
#include <cstdint>
#include <span>
#include <vector>

#include "cliffgraph/graph.hpp"

namespace cliffgraph::gf2 {

/// Square matrix over GF(2), one 64-bit word per row (bit j = column j).
class BitMatrix {
 public:
  explicit BitMatrix(int n);
  static BitMatrix from_rows(std::span<const std::uint64_t> rows);

  int size() const noexcept { return n_; }
  std::uint64_t row(int i) const noexcept { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint64_t> rows() const noexcept {
    return {rows_.data(), static_cast<std::size_t>(n_)};
  }
  bool get(int i, int j) const noexcept { return (row(i) >> j) & 1U; }
  void set(int i, int j, bool value) noexcept;

  /// m * v over GF(2), v given as a column bit vector.
  std::uint64_t apply(std::uint64_t v) const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int n_ = 0;
  std::array<std::uint64_t, Graph::kMaxVertices> rows_{};
};

BitMatrix adjacency(const Graph& g);

struct Kernel {
  std::vector<std::uint64_t> basis;
  int dimension() const noexcept { return static_cast<int>(basis.size()); }
};

enum class Parity { kEven, kOdd };

int rank(const BitMatrix& m);

/// Kernel basis from the reduced row echelon form; one vector per free
/// column, free columns in increasing order.
Kernel nullspace(const BitMatrix& m);

/// Odd iff the matrix is invertible over GF(2).
Parity det_parity(const BitMatrix& m);

/// Row dst ^= row src, then column dst ^= column src, diagonal cleared.
/// Throws kParameter when src == dst.
BitMatrix basic_replacement(const BitMatrix& m, int src, int dst);

/// Every element of the span of `basis`, sorted ascending. 2^d entries.
std::vector<std::uint64_t> span_of(std::span<const std::uint64_t> basis);

/// Exact integer determinant of the 0/1 adjacency matrix (fraction-free
/// Bareiss elimination). Throws kCapacity for n > 16.
std::int64_t det_integer(const Graph& g);

}  // namespace cliffgraph::gf2
