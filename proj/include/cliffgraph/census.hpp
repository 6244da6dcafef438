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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffgraph/graph.hpp"

namespace cliffgraph::census {

inline constexpr int kMaxCensusVertices = 8;

/// Minimum graph6-order upper-triangle code over all n! relabelings; the
/// first pair (0,1) is the most significant bit.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws kCapacity for n > 8.
CanonicalForm canonical_form(const Graph& g);
Graph from_canonical(const CanonicalForm& form);

/// Worker count from CLIFFGRAPH_THREADS, else hardware concurrency.
int default_threads();

/// One canonical representative per isomorphism class, ascending code.
/// Throws kParameter outside 1 <= n <= 8. threads <= 0 selects the default.
std::vector<Graph> enumerate_classes(int n, int threads = 0);

struct Profile {
  int rank = 0;
  bool det_odd = false;
  bool det_nonzero = false;
  bool mating = false;
  int isolated = 0;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

Profile profile_of(const Graph& g);

struct CensusTable {
  int n = 0;
  std::map<Profile, std::int64_t> rows;
  std::int64_t total() const;
};

CensusTable census_table(int n, int threads = 0);
CensusTable census_table(int n, const std::vector<Graph>& classes);

/// Center dimension 2^m -> number of isomorphism classes with that center.
std::map<std::uint64_t, std::int64_t> cliff_counts(int n, int threads = 0);
std::map<std::uint64_t, std::int64_t> cliff_counts(const CensusTable& table);

enum class SequenceId {
  kA000088,
  kA141040,
  kA140981,
  kA004110,
  kA141580,
  kA109717,
  kA133206,
  kA133279,
  kA103869,
};

std::string to_string(SequenceId id);
std::optional<SequenceId> parse_sequence_id(const std::string& id);
std::vector<SequenceId> all_sequences();
std::string describe(SequenceId id);

/// Vertex counts the terms of a sequence are indexed by, up to max_vertices.
/// A141040 is indexed by 2n; every other sequence by n.
std::vector<int> term_vertices(SequenceId id, int max_vertices);

/// Value of the term for graphs on `vertices` vertices from that table.
std::int64_t term_value(SequenceId id, const CensusTable& table);

/// Published OEIS terms, keyed by vertex count.
std::map<int, std::int64_t> cited_terms(SequenceId id);

struct SequenceTerm {
  int index = 0;     // 1-based OEIS index
  int vertices = 0;
  std::int64_t value = 0;
  std::optional<std::int64_t> cited;
  bool matches() const { return !cited || *cited == value; }
};

/// Terms computed from the census tables for 1..max_vertices vertices.
std::vector<SequenceTerm> sequence(SequenceId id, const std::vector<CensusTable>& tables);
std::vector<std::int64_t> sequence(SequenceId id, int max_vertices, int threads = 0);

struct IdentityCheck {
  std::string statement;
  bool holds = false;
};

/// The difference relations between the sequences, evaluated per n.
std::vector<IdentityCheck> check_identities(const std::vector<CensusTable>& tables);

/// Tables for n = 1..max_vertices, sharing one augmentation chain.
std::vector<CensusTable> census_tables(int max_vertices, int threads = 0);

struct HierarchyReport {
  int n = 0;
  std::int64_t classes = 0;
  std::int64_t odd_determinant = 0;
  std::int64_t invertible = 0;
  std::int64_t mating = 0;
  bool odd_subset_invertible = true;
  bool invertible_subset_mating = true;
  std::vector<Graph> invertible_even;   // invertible but even determinant
  std::vector<Graph> mating_not_odd;    // mating but not odd-determinant
  bool ok() const { return odd_subset_invertible && invertible_subset_mating; }
};

HierarchyReport hierarchy_check(int n, int threads = 0);

}  // namespace cliffgraph::census
