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

#ifndef CLIFFGRAPH_CLIFFGRAPH_H_
#define CLIFFGRAPH_CLIFFGRAPH_H_

/*
 * C interface to libcliffgraph.
 *
 * Every call returns a cg_status. On failure the thread-local message from
 * cg_last_error() describes what went wrong. Strings returned through char**
 * out-parameters are heap-allocated and must be released with cg_string_free;
 * handles are released with the matching *_free function. Vertices are
 * 1-based at this interface.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_PARAMETER = 1,
  CG_ERR_CAPACITY = 2,
  CG_ERR_PARSE = 3,
  CG_ERR_AMBIENT = 4,
  CG_ERR_PRECONDITION = 5,
  CG_ERR_INTERNAL = 6
} cg_status;

typedef enum cg_format { CG_FORMAT_TEXT = 0, CG_FORMAT_JSON = 1, CG_FORMAT_TSV = 2 } cg_format;

typedef enum cg_center_mode { CG_CENTER_BASIS = 0, CG_CENTER_EXPLICIT = 1 } cg_center_mode;

typedef enum cg_named_iso { CG_ISO_PATH_COMPLETE = 0, CG_ISO_STAR_ONEEDGE = 1 } cg_named_iso;

typedef struct cg_graph cg_graph;
typedef struct cg_witness cg_witness;

typedef struct cg_structure_report {
  int n;
  int rank;
  int k;
  int m;
} cg_structure_report;

CG_API const char* cg_version(void);
CG_API const char* cg_last_error(void);
/* Byte offset of the last parse error, or -1. */
CG_API long cg_last_error_offset(void);
CG_API void cg_string_free(char* s);

/* Graphs */
CG_API cg_status cg_graph_from_family(const char* spec, cg_graph** out);
CG_API cg_status cg_graph_from_graph6(const char* text, cg_graph** out);
CG_API cg_status cg_graph_union(const cg_graph* a, const cg_graph* b, cg_graph** out);
CG_API void cg_graph_free(cg_graph* g);
CG_API int cg_graph_order(const cg_graph* g);
CG_API int cg_graph_has_edge(const cg_graph* g, int i, int j);
CG_API cg_status cg_graph_to_graph6(const cg_graph* g, char** out);
CG_API cg_status cg_graph_is_mating(const cg_graph* g, int* out);
CG_API cg_status cg_graph_rank_gf2(const cg_graph* g, int* out);
CG_API cg_status cg_graph_det_integer(const cg_graph* g, int64_t* out);

/* Structure */
CG_API cg_status cg_classify(const cg_graph* g, cg_structure_report* out);
CG_API cg_status cg_same_class(const cg_graph* a, const cg_graph* b, int* out);
CG_API cg_status cg_reduce(const cg_graph* g, cg_graph** target, cg_witness** witness);
CG_API cg_status cg_named_isomorphism(cg_named_iso kind, int n, int inverse, cg_witness** out);
CG_API cg_status cg_witness_from_json(const char* text, cg_witness** out);
CG_API cg_status cg_witness_to_json(const cg_witness* w, char** out);
/* *valid is 1 or 0; *diagnostic (may be NULL) receives the first violated relation. */
CG_API cg_status cg_witness_validate(const cg_witness* w, int* valid, char** diagnostic);
CG_API void cg_witness_free(cg_witness* w);

/* Clifford engine: monomials are comma-separated 1-based vertex lists, "" for 1. */
CG_API cg_status cg_is_central(const cg_graph* g, const char* monomial, int* out);
CG_API cg_status cg_center_log2(const cg_graph* g, int* out);

/* Rendered reports (text, JSON or TSV). */
CG_API cg_status cg_render_analysis(const cg_graph* g, cg_format f, char** out);
CG_API cg_status cg_render_center(const cg_graph* g, cg_center_mode mode, cg_format f, char** out);
CG_API cg_status cg_render_idempotent(const cg_graph* g, const char* monomial, cg_format f, char** out);
CG_API cg_status cg_render_reduction(const cg_graph* g, cg_format f, char** out);
CG_API cg_status cg_render_validation(const cg_witness* w, cg_format f, int* valid, char** out);

/* Census entry points; threads <= 0 uses CLIFFGRAPH_THREADS or the core count. */
CG_API cg_status cg_render_census(int min_vertices, int max_vertices, int threads, cg_format f, char** out);
/* ids: comma-separated OEIS ids, or NULL / "" for all. *all_match is 0 on any disagreement. */
CG_API cg_status cg_render_sequences(const char* ids, int max_vertices, int threads, cg_format f, int* all_match,
                                     char** out);
CG_API cg_status cg_render_dynkin(int bound, cg_format f, int* all_match, char** out);
CG_API cg_status cg_render_hierarchy(int n, int threads, cg_format f, int* ok, char** out);

#ifdef __cplusplus
}
#endif

#endif /* CLIFFGRAPH_CLIFFGRAPH_H_ */
