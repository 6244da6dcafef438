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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliffgraph/clifford.hpp"
#include "cliffgraph/graph.hpp"

namespace cliffgraph {

/// A_G is the direct sum of 2^m copies of Mat(2^k), n = 2k + m, and the
/// adjacency matrix has GF(2) rank 2k.
struct StructureReport {
  int n = 0;
  int rank = 0;
  int k = 0;
  int m = 0;

  /// 2^m in decimal (m may be 64).
  std::string center_dim() const;
  /// "⊕_{2^m} Mat(2^k)" with both powers evaluated, e.g. "⊕_2 Mat(8)".
  std::string summary() const;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

StructureReport classify(const Graph& g);

/// Equal GF(2) adjacency rank. Throws kParameter when vertex counts differ.
bool same_class(const Graph& a, const Graph& b);

/// Maps each target generator to a signed monomial in the source algebra.
struct IsomorphismWitness {
  Graph source;
  Graph target;
  std::vector<SignedMonomial> images;  // images[i] is the image of target generator i
};

struct ValidationResult {
  bool ok = false;
  std::string diagnostic;  // first violated relation, 1-based; empty when ok
  explicit operator bool() const noexcept { return ok; }
};

/// Checks every image squares to -1, that images i, j anticommute exactly
/// when {i, j} is a target edge, and that the image masks are linearly
/// independent over GF(2).
ValidationResult validate_witness(const IsomorphismWitness& w);

struct Reduction {
  Graph target;
  IsomorphismWitness witness;
};

/// Repeatedly detaches the lowest edge {u, v} as a K2 component by
/// rewriting every other generator according to its adjacency to u and v,
/// ending at G(k, m) with pairs first. The witness is composed eagerly.
Reduction reduce_to_canonical(const Graph& g);

/// Rewritten generator for a vertex adjacent to neither / only the first /
/// only the second / both endpoints of the detached edge.
enum class AttachmentCase { kNeither, kFirstOnly, kSecondOnly, kBoth };
/// Coefficient used for each case; kBoth carries i so the square is -1.
Phase attachment_phase(AttachmentCase c);

/// Expresses x, an element of w.target's algebra given as a signed
/// monomial, in the source algebra by substituting the images.
SignedMonomial pull_back(const IsomorphismWitness& w, const SignedMonomial& x);

enum class NamedIsomorphism { kPathComplete, kStarOneEdge };
enum class Direction { kForward, kInverse };

/// kPathComplete forward: source K_n, target path, e'_1 = e_1,
/// e'_i = e_{i-1} e_i. Inverse: source path, target K_n,
/// e_i = e'_i e'_{i-1} ... e'_1.
/// kStarOneEdge forward: source star, target G(1, n-2), e'_1 = e_1,
/// e'_2 = e_1 e_2, e'_i = i e_2 e_i. Inverse: e_1 = e'_1, e_2 = e'_1 e'_2,
/// e_i = i e'_i e'_1 e'_2. Throws kParameter for n < 2.
IsomorphismWitness named_isomorphism(NamedIsomorphism kind, int n,
                                     Direction direction = Direction::kForward);

std::optional<NamedIsomorphism> parse_named_isomorphism(const std::string& name);

}  // namespace cliffgraph
