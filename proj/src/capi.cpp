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

#include "cliffgraph/cliffgraph.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "cliffgraph/census.hpp"
#include "cliffgraph/error.hpp"
#include "cliffgraph/family.hpp"
#include "cliffgraph/gf2.hpp"
#include "cliffgraph/graph6.hpp"
#include "cliffgraph/render.hpp"
#include "cliffgraph/structure.hpp"

struct cg_graph {
  cliffgraph::Graph value;
};

struct cg_witness {
  cliffgraph::IsomorphismWitness value;
};

namespace {

using namespace cliffgraph;

thread_local std::string g_last_error;
thread_local long g_last_offset = -1;

cg_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter: return CG_ERR_PARAMETER;
    case ErrorKind::kCapacity: return CG_ERR_CAPACITY;
    case ErrorKind::kParse: return CG_ERR_PARSE;
    case ErrorKind::kAmbient: return CG_ERR_AMBIENT;
    case ErrorKind::kPrecondition: return CG_ERR_PRECONDITION;
  }
  return CG_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename F>
cg_status guarded(F&& body) {
  g_last_error.clear();
  g_last_offset = -1;
  try {
    body();
    return CG_OK;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    g_last_offset = static_cast<long>(e.offset());
    return CG_ERR_PARSE;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return CG_ERR_CAPACITY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CG_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorKind::kParameter, std::string(what) + " must not be NULL");
}

render::Format format_of(cg_format f) {
  switch (f) {
    case CG_FORMAT_JSON: return render::Format::kJson;
    case CG_FORMAT_TSV: return render::Format::kTsv;
    case CG_FORMAT_TEXT: return render::Format::kText;
  }
  throw Error(ErrorKind::kParameter, "unknown output format");
}

}  // namespace

extern "C" {

const char* cg_version(void) { return "1.0.0"; }
const char* cg_last_error(void) { return g_last_error.c_str(); }
long cg_last_error_offset(void) { return g_last_offset; }
void cg_string_free(char* s) { std::free(s); }

cg_status cg_graph_from_family(const char* spec, cg_graph** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new cg_graph{build_family(spec)};
  });
}

cg_status cg_graph_from_graph6(const char* text, cg_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new cg_graph{parse_graph6(text)};
  });
}

cg_status cg_graph_union(const cg_graph* a, const cg_graph* b, cg_graph** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = new cg_graph{disjoint_union(a->value, b->value)};
  });
}

void cg_graph_free(cg_graph* g) { delete g; }

int cg_graph_order(const cg_graph* g) { return g ? g->value.order() : 0; }

int cg_graph_has_edge(const cg_graph* g, int i, int j) {
  if (!g || i < 1 || j < 1 || i > g->value.order() || j > g->value.order()) return 0;
  return g->value.has_edge(i - 1, j - 1) ? 1 : 0;
}

cg_status cg_graph_to_graph6(const cg_graph* g, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = dup(to_graph6(g->value));
  });
}

cg_status cg_graph_is_mating(const cg_graph* g, int* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = is_mating(g->value) ? 1 : 0;
  });
}

cg_status cg_graph_rank_gf2(const cg_graph* g, int* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = gf2::rank(gf2::adjacency(g->value));
  });
}

cg_status cg_graph_det_integer(const cg_graph* g, int64_t* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = gf2::det_integer(g->value);
  });
}

cg_status cg_classify(const cg_graph* g, cg_structure_report* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    const StructureReport r = classify(g->value);
    *out = cg_structure_report{r.n, r.rank, r.k, r.m};
  });
}

cg_status cg_same_class(const cg_graph* a, const cg_graph* b, int* out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = same_class(a->value, b->value) ? 1 : 0;
  });
}

cg_status cg_reduce(const cg_graph* g, cg_graph** target, cg_witness** witness) {
  return guarded([&] {
    require(g, "g");
    Reduction r = reduce_to_canonical(g->value);
    if (target) *target = new cg_graph{r.target};
    if (witness) *witness = new cg_witness{std::move(r.witness)};
  });
}

cg_status cg_named_isomorphism(cg_named_iso kind, int n, int inverse, cg_witness** out) {
  return guarded([&] {
    require(out, "out");
    if (kind != CG_ISO_PATH_COMPLETE && kind != CG_ISO_STAR_ONEEDGE) {
      throw Error(ErrorKind::kParameter, "unknown named isomorphism");
    }
    const auto which = kind == CG_ISO_PATH_COMPLETE ? NamedIsomorphism::kPathComplete : NamedIsomorphism::kStarOneEdge;
    *out = new cg_witness{named_isomorphism(which, n, inverse ? Direction::kInverse : Direction::kForward)};
  });
}

cg_status cg_witness_from_json(const char* text, cg_witness** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new cg_witness{render::witness_from_text(text)};
  });
}

cg_status cg_witness_to_json(const cg_witness* w, char** out) {
  return guarded([&] {
    require(w, "w");
    require(out, "out");
    *out = dup(render::witness_to_json(w->value).dump(2) + "\n");
  });
}

cg_status cg_witness_validate(const cg_witness* w, int* valid, char** diagnostic) {
  return guarded([&] {
    require(w, "w");
    require(valid, "valid");
    const ValidationResult r = validate_witness(w->value);
    *valid = r.ok ? 1 : 0;
    if (diagnostic) *diagnostic = dup(r.diagnostic);
  });
}

void cg_witness_free(cg_witness* w) { delete w; }

cg_status cg_is_central(const cg_graph* g, const char* monomial, int* out) {
  return guarded([&] {
    require(g, "g");
    require(monomial, "monomial");
    require(out, "out");
    *out = is_central_monomial(g->value, render::parse_monomial(monomial, g->value.order())) ? 1 : 0;
  });
}

cg_status cg_center_log2(const cg_graph* g, int* out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = center_basis(g->value, CenterMode::kBasis).dimension_log2;
  });
}

cg_status cg_render_analysis(const cg_graph* g, cg_format f, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = dup(render::analysis(g->value, format_of(f)));
  });
}

cg_status cg_render_center(const cg_graph* g, cg_center_mode mode, cg_format f, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    const CenterMode m = mode == CG_CENTER_EXPLICIT ? CenterMode::kExplicit : CenterMode::kBasis;
    *out = dup(render::center(g->value, m, format_of(f)));
  });
}

cg_status cg_render_idempotent(const cg_graph* g, const char* monomial, cg_format f, char** out) {
  return guarded([&] {
    require(g, "g");
    require(monomial, "monomial");
    require(out, "out");
    const Monomial a = render::parse_monomial(monomial, g->value.order());
    *out = dup(render::idempotent(g->value, a, format_of(f)));
  });
}

cg_status cg_render_reduction(const cg_graph* g, cg_format f, char** out) {
  return guarded([&] {
    require(g, "g");
    require(out, "out");
    *out = dup(render::reduction(reduce_to_canonical(g->value), format_of(f)));
  });
}

cg_status cg_render_validation(const cg_witness* w, cg_format f, int* valid, char** out) {
  return guarded([&] {
    require(w, "w");
    require(out, "out");
    const ValidationResult r = validate_witness(w->value);
    if (valid) *valid = r.ok ? 1 : 0;
    *out = dup(render::validation(w->value, r, format_of(f)));
  });
}

cg_status cg_render_census(int min_vertices, int max_vertices, int threads, cg_format f, char** out) {
  return guarded([&] {
    require(out, "out");
    if (min_vertices < 1 || min_vertices > max_vertices) {
      throw Error(ErrorKind::kParameter, "census range must satisfy 1 <= min <= max");
    }
    auto tables = census::census_tables(max_vertices, threads);
    tables.erase(tables.begin(), tables.begin() + (min_vertices - 1));
    *out = dup(render::census(tables, format_of(f)));
  });
}

cg_status cg_render_sequences(const char* ids, int max_vertices, int threads, cg_format f, int* all_match,
                              char** out) {
  return guarded([&] {
    require(out, "out");
    std::vector<census::SequenceId> selected;
    if (ids && *ids) {
      std::stringstream ss(ids);
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto id = census::parse_sequence_id(item);
        if (!id) throw Error(ErrorKind::kParameter, "unsupported sequence id '" + item + "'");
        selected.push_back(*id);
      }
    } else {
      selected = census::all_sequences();
    }
    const auto tables = census::census_tables(max_vertices, threads);
    bool ok = false;
    *out = dup(render::sequences(selected, tables, format_of(f), &ok));
    if (all_match) *all_match = ok ? 1 : 0;
  });
}

cg_status cg_render_dynkin(int bound, cg_format f, int* all_match, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto rows = dynkin_table(bound);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.matches();
    if (all_match) *all_match = ok ? 1 : 0;
    *out = dup(render::dynkin(rows, format_of(f)));
  });
}

cg_status cg_render_hierarchy(int n, int threads, cg_format f, int* ok, char** out) {
  return guarded([&] {
    require(out, "out");
    const auto report = census::hierarchy_check(n, threads);
    if (ok) *ok = report.ok() ? 1 : 0;
    *out = dup(render::hierarchy(report, format_of(f)));
  });
}

}  // extern "C"
