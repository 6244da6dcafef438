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
#include <vector>

#include "json.hpp"

#include "cliffgraph/census.hpp"
#include "cliffgraph/clifford.hpp"
#include "cliffgraph/dynkin.hpp"
#include "cliffgraph/structure.hpp"

// Stable text / JSON / TSV renderings behind the CLI. Every ordering is
// deterministic so identical inputs give byte-identical output; vertices
// are 1-based throughout.
namespace cliffgraph::render {

enum class Format { kText, kJson, kTsv };

nlohmann::json witness_to_json(const IsomorphismWitness& w);
/// Throws ParseError / Error on a malformed document.
IsomorphismWitness witness_from_json(const nlohmann::json& doc);
IsomorphismWitness witness_from_text(const std::string& text);

std::string analysis(const Graph& g, Format f);
std::string center(const Graph& g, CenterMode mode, Format f);
std::string idempotent(const Graph& g, Monomial a, Format f);
std::string reduction(const Reduction& r, Format f);
std::string validation(const IsomorphismWitness& w, const ValidationResult& v, Format f);
std::string census(const std::vector<census::CensusTable>& tables, Format f);
std::string sequences(const std::vector<census::SequenceId>& ids, const std::vector<census::CensusTable>& tables,
                      Format f, bool* all_match);
std::string dynkin(const std::vector<DynkinRow>& rows, Format f);
std::string hierarchy(const census::HierarchyReport& r, Format f);

/// "1,3,5,7" (1-based) -> mask. Throws ParseError.
Monomial parse_monomial(const std::string& text, int n);

}  // namespace cliffgraph::render
