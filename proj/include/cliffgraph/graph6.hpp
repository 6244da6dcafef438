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

#include "cliffgraph/graph.hpp"

namespace cliffgraph {

// Headerless graph6: N(n) followed by the upper triangle in column-major
// order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte, each byte
// offset by 63. A single trailing newline is accepted on input.

std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

}  // namespace cliffgraph
