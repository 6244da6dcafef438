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
#include <string>
#include <vector>

namespace cliffgraph {

struct DynkinRow {
  std::string name;  // "A5", "D4", "E8"
  std::uint64_t center_dim = 0;
  std::uint64_t expected = 0;  // A_{2k}:1, A_{2k-1}:2, D_{2k}:4, D_{2k-1}:2, E6:1, E7:2, E8:1
  bool matches() const { return center_dim == expected; }
};

/// Center dimensions of A_1..A_bound, D_4..D_bound and E_6..E_8 computed
/// from the diagrams, next to the parity pattern they should follow.
std::vector<DynkinRow> dynkin_table(int bound = 12);

}  // namespace cliffgraph
