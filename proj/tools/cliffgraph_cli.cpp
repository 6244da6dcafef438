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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffgraph/cliffgraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

// Text the last C API call was fed, for turning byte offsets into line/column.
std::string g_input_text;
std::string g_input_name;

struct Failure {
  int code;
};

std::string line_column(const std::string& text, long offset) {
  long line = 1;
  long column = 1;
  for (long i = 0; i < offset && i < static_cast<long>(text.size()); ++i) {
    if (text[static_cast<std::size_t>(i)] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

void check(cg_status s) {
  if (s == CG_OK) return;
  std::string where;
  if (s == CG_ERR_PARSE && cg_last_error_offset() >= 0) {
    where = " [" + (g_input_name.empty() ? std::string("input") : g_input_name) + " " +
            line_column(g_input_text, cg_last_error_offset()) + "]";
  }
  std::cerr << "cliffgraph: " << cg_last_error() << where << "\n";
  throw Failure{s == CG_ERR_CAPACITY ? kExitCapacity : kExitInput};
}

void emit(char* text) {
  std::cout << text;
  cg_string_free(text);
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string first_record(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  return {};
}

class GraphHandle {
 public:
  explicit GraphHandle(const std::string& input) {
    if (input == "-") {
      g_input_name = "stdin";
      g_input_text = first_record(slurp(std::cin));
      check(cg_graph_from_graph6(g_input_text.c_str(), &g_));
    } else if (input.find(':') != std::string::npos) {
      g_input_name = "family spec";
      g_input_text = input;
      check(cg_graph_from_family(input.c_str(), &g_));
    } else if (std::filesystem::is_regular_file(input)) {
      std::ifstream f(input);
      g_input_name = input;
      g_input_text = first_record(slurp(f));
      check(cg_graph_from_graph6(g_input_text.c_str(), &g_));
    } else {
      g_input_name = "graph6";
      g_input_text = input;
      check(cg_graph_from_graph6(input.c_str(), &g_));
    }
  }
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { cg_graph_free(g_); }

  const cg_graph* get() const { return g_; }

 private:
  cg_graph* g_ = nullptr;
};

cg_format parse_format(const std::string& name) {
  if (name == "json") return CG_FORMAT_JSON;
  if (name == "tsv") return CG_FORMAT_TSV;
  return CG_FORMAT_TEXT;
}

void require_stretch(int max_vertices, bool stretch) {
  if (max_vertices >= 8 && !stretch) {
    std::cerr << "cliffgraph: capacity error: census at 8 vertices requires --stretch\n";
    throw Failure{kExitCapacity};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford graph algebras: structure, canonical reduction, and small-graph census"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cg_version()));

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv", "text"}))
      ->capture_default_str();

  std::string input;
  const char* input_help = "Family spec (path:7, union:(complete:3,complete:3)), graph6 string, file, or - for stdin";

  auto* analyze = app.add_subcommand("analyze", "Structure report: rank, k, m, center dimension");
  analyze->add_option("input", input, input_help)->required();

  std::string mode = "explicit";
  auto* center = app.add_subcommand("center", "Central monomials of the graph algebra");
  center->add_option("input", input, input_help)->required();
  center->add_option("--mode", mode, "explicit: every central monomial; basis: a GF(2) basis")
      ->check(CLI::IsMember({"explicit", "basis"}))
      ->capture_default_str();

  std::string monomial;
  auto* idempotent = app.add_subcommand("idempotent", "Central idempotent (1 + f_a)/2 for a central monomial");
  idempotent->add_option("input", input, input_help)->required();
  idempotent->add_option("--monomial", monomial, "Central monomial as 1-based vertices, e.g. 1,3,5,7")->required();

  std::string witness_out;
  auto* reduce = app.add_subcommand("reduce", "Reduce to G(k,m) with an isomorphism witness");
  reduce->add_option("input", input, input_help)->required();
  reduce->add_option("--witness-out", witness_out, "Also write the witness JSON to this file");

  std::string witness_file;
  std::string named;
  bool inverse = false;
  auto* validate = app.add_subcommand("validate", "Check an isomorphism witness");
  validate->add_option("witness", witness_file, "Witness JSON file, or - for stdin");
  validate->add_option("--named", named, "Built-in witness: path_complete:N or star_oneedge:N");
  validate->add_flag("--inverse", inverse, "Use the inverse direction of the built-in witness");

  int max_vertices = 7;
  int vertices = 0;
  bool stretch = false;
  auto* census = app.add_subcommand("census", "Isomorphism-class census by property profile");
  census->add_option("--max-vertices", max_vertices, "Largest vertex count")->capture_default_str();
  census->add_option("--vertices", vertices, "Only this vertex count");
  census->add_flag("--stretch", stretch, "Allow 8 vertices");

  std::vector<std::string> ids;
  auto* sequences = app.add_subcommand("sequences", "Recompute the OEIS sequences from the census");
  sequences->add_option("ids", ids, "Sequence ids (default: all)");
  sequences->add_option("--max-vertices", max_vertices, "Largest vertex count")->capture_default_str();
  sequences->add_flag("--stretch", stretch, "Allow 8 vertices");

  int max_rank = 12;
  auto* dynkin = app.add_subcommand("dynkin", "Center dimensions of the simply-laced Dynkin diagrams");
  dynkin->add_option("--max-rank", max_rank, "Largest A_n and D_n rank")->capture_default_str();

  int hierarchy_n = 6;
  auto* hierarchy = app.add_subcommand("hierarchy", "Check odd-determinant within invertible within mating");
  hierarchy->add_option("n", hierarchy_n, "Vertex count")->capture_default_str();
  hierarchy->add_flag("--stretch", stretch, "Allow 8 vertices");

  CLI11_PARSE(app, argc, argv);
  const cg_format fmt = parse_format(format);

  try {
    char* out = nullptr;
    if (analyze->parsed()) {
      GraphHandle g(input);
      check(cg_render_analysis(g.get(), fmt, &out));
      emit(out);
    } else if (center->parsed()) {
      GraphHandle g(input);
      check(cg_render_center(g.get(), mode == "basis" ? CG_CENTER_BASIS : CG_CENTER_EXPLICIT, fmt, &out));
      emit(out);
    } else if (idempotent->parsed()) {
      GraphHandle g(input);
      g_input_name = "--monomial";
      g_input_text = monomial;
      check(cg_render_idempotent(g.get(), monomial.c_str(), fmt, &out));
      emit(out);
    } else if (reduce->parsed()) {
      GraphHandle g(input);
      check(cg_render_reduction(g.get(), fmt, &out));
      emit(out);
      if (!witness_out.empty()) {
        cg_witness* w = nullptr;
        check(cg_reduce(g.get(), nullptr, &w));
        char* json = nullptr;
        const cg_status s = cg_witness_to_json(w, &json);
        cg_witness_free(w);
        check(s);
        std::ofstream(witness_out) << json;
        cg_string_free(json);
      }
    } else if (validate->parsed()) {
      cg_witness* w = nullptr;
      if (!named.empty()) {
        const auto colon = named.find(':');
        const std::string kind = named.substr(0, colon);
        if ((kind != "path_complete" && kind != "star_oneedge") || colon == std::string::npos) {
          std::cerr << "cliffgraph: --named expects path_complete:N or star_oneedge:N\n";
          return kExitInput;
        }
        int n = 0;
        try {
          n = std::stoi(named.substr(colon + 1));
        } catch (const std::exception&) {
          std::cerr << "cliffgraph: --named expects an integer vertex count\n";
          return kExitInput;
        }
        check(cg_named_isomorphism(kind == "path_complete" ? CG_ISO_PATH_COMPLETE : CG_ISO_STAR_ONEEDGE, n,
                                   inverse ? 1 : 0, &w));
      } else {
        if (witness_file.empty()) {
          std::cerr << "cliffgraph: validate needs a witness file or --named\n";
          return kExitInput;
        }
        if (witness_file == "-") {
          g_input_name = "stdin";
          g_input_text = slurp(std::cin);
        } else {
          std::ifstream f(witness_file);
          if (!f) {
            std::cerr << "cliffgraph: cannot read " << witness_file << "\n";
            return kExitInput;
          }
          g_input_name = witness_file;
          g_input_text = slurp(f);
        }
        check(cg_witness_from_json(g_input_text.c_str(), &w));
      }
      int valid = 0;
      const cg_status s = cg_render_validation(w, fmt, &valid, &out);
      cg_witness_free(w);
      check(s);
      emit(out);
      return valid ? kExitOk : kExitCheckFailed;
    } else if (census->parsed()) {
      const int hi = vertices > 0 ? vertices : max_vertices;
      require_stretch(hi, stretch);
      check(cg_render_census(vertices > 0 ? vertices : 1, hi, 0, fmt, &out));
      emit(out);
    } else if (sequences->parsed()) {
      require_stretch(max_vertices, stretch);
      std::string joined;
      for (const auto& id : ids) joined += (joined.empty() ? "" : ",") + id;
      int all_match = 0;
      check(cg_render_sequences(joined.c_str(), max_vertices, 0, fmt, &all_match, &out));
      emit(out);
      return all_match ? kExitOk : kExitCheckFailed;
    } else if (dynkin->parsed()) {
      int all_match = 0;
      check(cg_render_dynkin(max_rank, fmt, &all_match, &out));
      emit(out);
      return all_match ? kExitOk : kExitCheckFailed;
    } else if (hierarchy->parsed()) {
      require_stretch(hierarchy_n, stretch);
      int ok = 0;
      check(cg_render_hierarchy(hierarchy_n, 0, fmt, &ok, &out));
      emit(out);
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitOk;
}
