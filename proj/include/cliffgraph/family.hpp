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

#include <string>
#include <string_view>
#include <vector>

#include "cliffgraph/graph.hpp"

namespace cliffgraph {

enum class FamilyKind {
  kPath,
  kStar,
  kComplete,
  kCycle,
  kEdgeless,
  kGkm,
  kDynkinA,
  kDynkinD,
  kDynkinE,
  kUnion,
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kEdgeless;
  std::vector<int> parameters;
  std::vector<FamilySpec> operands;  // kUnion only
};

/// Parses the mini-language: `path:7`, `gkm:3,2`, `dynkin:E8`,
/// `union:(complete:3,complete:3)`. Errors are ParseError with the byte
/// offset of the offending character.
FamilySpec parse_family(std::string_view text);

std::string to_string(const FamilySpec& spec);

/// Throws kParameter naming the violated constraint, kCapacity past 64
/// vertices.
Graph build_family(const FamilySpec& spec);

inline Graph build_family(std::string_view text) { return build_family(parse_family(text)); }

}  // namespace cliffgraph
