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

#include "cliffgraph/dynkin.hpp"

#include "cliffgraph/error.hpp"
#include "cliffgraph/graph.hpp"
#include "cliffgraph/structure.hpp"

namespace cliffgraph {

std::vector<DynkinRow> dynkin_table(int bound) {
  if (bound < 4 || bound > Graph::kMaxVertices) {
    throw Error(ErrorKind::kParameter, "Dynkin bound must lie in 4..64");
  }
  std::vector<DynkinRow> rows;
  auto add = [&](std::string name, const Graph& g, std::uint64_t expected) {
    rows.push_back({std::move(name), std::uint64_t{1} << classify(g).m, expected});
  };
  for (int n = 1; n <= bound; ++n) add("A" + std::to_string(n), dynkin_graph(DynkinType::kA, n), n % 2 == 0 ? 1 : 2);
  for (int n = 4; n <= bound; ++n) add("D" + std::to_string(n), dynkin_graph(DynkinType::kD, n), n % 2 == 0 ? 4 : 2);
  add("E6", dynkin_graph(DynkinType::kE, 6), 1);
  add("E7", dynkin_graph(DynkinType::kE, 7), 2);
  add("E8", dynkin_graph(DynkinType::kE, 8), 1);
  return rows;
}

}  // namespace cliffgraph
