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

#include "cliffgraph/graph6.hpp"

#include <array>

#include "cliffgraph/error.hpp"

namespace cliffgraph {

namespace {

constexpr int kBias = 63;

std::size_t body_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kBias));
    out.push_back(static_cast<char>((n & 0x3F) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError(i, "byte outside the graph6 range 63..126");
  }
  if (text.empty()) throw ParseError(0, "empty graph6 record");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4) throw ParseError(text.size(), "truncated graph6 size header");
    if (text[1] == '~') throw ParseError(1, "graph6 with more than 258047 vertices");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    if (n < 63) throw ParseError(1, "non-canonical graph6 size header");
    pos = 4;
  }
  if (n < 1) throw ParseError(0, "graph6 record with zero vertices");
  if (n > Graph::kMaxVertices) {
    throw Error(ErrorKind::kCapacity, "graph6 record has " + std::to_string(n) + " vertices; the bound is 64");
  }
  const std::size_t need = body_bytes(n);
  const std::size_t have = text.size() - pos;
  if (have < need) throw ParseError(text.size(), "truncated graph6 body");
  if (have > need) throw ParseError(pos + need, "trailing bytes after graph6 body");

  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) {
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(std::span(rows.data(), static_cast<std::size_t>(n)));
}

}  // namespace cliffgraph
