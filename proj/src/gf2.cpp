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

#include "cliffgraph/gf2.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cliffgraph/error.hpp"

namespace cliffgraph::gf2 {

BitMatrix::BitMatrix(int n) : n_(n) {
  if (n < 0 || n > Graph::kMaxVertices) {
    throw Error(ErrorKind::kCapacity, "matrix dimension " + std::to_string(n) + " outside 0..64");
  }
}

BitMatrix BitMatrix::from_rows(std::span<const std::uint64_t> rows) {
  BitMatrix m(static_cast<int>(rows.size()));
  const std::uint64_t all = m.n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n_) - 1;
  for (int i = 0; i < m.n_; ++i) {
    if (rows[i] & ~all) {
      throw Error(ErrorKind::kParameter, "row " + std::to_string(i + 1) + " wider than the matrix");
    }
    m.rows_[i] = rows[i];
  }
  return m;
}

void BitMatrix::set(int i, int j, bool value) noexcept {
  auto& r = rows_[i];
  const std::uint64_t bit = std::uint64_t{1} << j;
  r = value ? (r | bit) : (r & ~bit);
}

std::uint64_t BitMatrix::apply(std::uint64_t v) const noexcept {
  std::uint64_t out = 0;
  for (int i = 0; i < n_; ++i) {
    out |= static_cast<std::uint64_t>(std::popcount(row(i) & v) & 1) << i;
  }
  return out;
}

BitMatrix adjacency(const Graph& g) { return BitMatrix::from_rows(g.rows()); }

namespace {

struct Echelon {
  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  std::array<int, Graph::kMaxVertices> pivot_col{};
  int rank = 0;
};

// Fully reduced row echelon form, pivots chosen at the lowest column first.
Echelon reduce(const BitMatrix& m) {
  Echelon e;
  const int n = m.size();
  std::copy(m.rows().begin(), m.rows().end(), e.rows.begin());
  for (int col = 0; col < n && e.rank < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    int pivot = -1;
    for (int r = e.rank; r < n; ++r) {
      if (e.rows[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(e.rows[pivot], e.rows[e.rank]);
    const std::uint64_t prow = e.rows[e.rank];
    for (int r = 0; r < n; ++r) {
      if (r != e.rank && (e.rows[r] & bit)) e.rows[r] ^= prow;
    }
    e.pivot_col[e.rank] = col;
    ++e.rank;
  }
  return e;
}

}  // namespace

int rank(const BitMatrix& m) {
  // Forward elimination only; cheaper than the full reduction.
  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  const int n = m.size();
  std::copy(m.rows().begin(), m.rows().end(), rows.begin());
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    int pivot = r;
    while (pivot < n && !(rows[pivot] & bit)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[r]);
    for (int i = r + 1; i < n; ++i) {
      if (rows[i] & bit) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

Kernel nullspace(const BitMatrix& m) {
  const Echelon e = reduce(m);
  const int n = m.size();
  std::uint64_t pivots = 0;
  for (int r = 0; r < e.rank; ++r) pivots |= std::uint64_t{1} << e.pivot_col[r];
  Kernel k;
  for (int f = 0; f < n; ++f) {
    if ((pivots >> f) & 1U) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (int r = 0; r < e.rank; ++r) {
      if ((e.rows[r] >> f) & 1U) v |= std::uint64_t{1} << e.pivot_col[r];
    }
    k.basis.push_back(v);
  }
  return k;
}

Parity det_parity(const BitMatrix& m) { return rank(m) == m.size() ? Parity::kOdd : Parity::kEven; }

BitMatrix basic_replacement(const BitMatrix& m, int src, int dst) {
  const int n = m.size();
  if (src < 0 || dst < 0 || src >= n || dst >= n) {
    throw Error(ErrorKind::kParameter, "basic replacement vertex outside 1.." + std::to_string(n));
  }
  if (src == dst) throw Error(ErrorKind::kParameter, "basic replacement requires src != dst");
  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  std::copy(m.rows().begin(), m.rows().end(), rows.begin());
  rows[dst] ^= rows[src];
  const std::uint64_t dst_bit = std::uint64_t{1} << dst;
  for (int i = 0; i < n; ++i) {
    auto& r = rows[i];
    if ((r >> src) & 1U) r ^= dst_bit;
    r &= ~(std::uint64_t{1} << i);
  }
  return BitMatrix::from_rows(std::span(rows.data(), n));
}

std::vector<std::uint64_t> span_of(std::span<const std::uint64_t> basis) {
  std::vector<std::uint64_t> out{0};
  out.reserve(std::size_t{1} << basis.size());
  for (const std::uint64_t v : basis) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] ^ v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t det_integer(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw Error(ErrorKind::kCapacity, "integer determinant limited to n <= 16");
  std::array<std::array<std::int64_t, 16>, 16> a{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;
  }
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    auto& rk = a[k];
    if (rk[k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    const __int128 pivot = rk[k];
    for (int i = k + 1; i < n; ++i) {
      auto& ri = a[i];
      for (int j = k + 1; j < n; ++j) {
        const __int128 num = pivot * ri[j] -
                             static_cast<__int128>(ri[k]) * rk[j];
        ri[j] = static_cast<std::int64_t>(num / prev);
      }
      ri[k] = 0;
    }
    prev = rk[k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace cliffgraph::gf2
