#include <cstdlib>
#include <string>

#include "cliffgraph/cliffgraph.h"
#include "doctest.h"
#include "json.hpp"

extern "C" int cg_c_smoke(void);

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cg_string_free(s);
  return out;
}

struct Graph {
  explicit Graph(const char* spec) { REQUIRE(cg_graph_from_family(spec, &g) == CG_OK); }
  ~Graph() { cg_graph_free(g); }
  Graph(const Graph&) = delete;
  Graph& operator=(const Graph&) = delete;
  cg_graph* g = nullptr;
};

}  // namespace

TEST_CASE("C translation unit") { CHECK(cg_c_smoke() == 0); }

TEST_CASE("version") { CHECK(std::string(cg_version()) == "1.0.0"); }

TEST_CASE("graph handles") {
  Graph p("path:7");
  CHECK(cg_graph_order(p.g) == 7);
  CHECK(cg_graph_has_edge(p.g, 1, 2) == 1);
  CHECK(cg_graph_has_edge(p.g, 1, 3) == 0);
  CHECK(cg_graph_has_edge(p.g, 0, 1) == 0);
  CHECK(cg_graph_has_edge(nullptr, 1, 2) == 0);

  char* g6 = nullptr;
  REQUIRE(cg_graph_to_graph6(p.g, &g6) == CG_OK);
  CHECK(take(g6) == "FhCGG");

  int rank = -1;
  CHECK(cg_graph_rank_gf2(p.g, &rank) == CG_OK);
  CHECK(rank == 6);

  Graph k3("complete:3");
  cg_graph* u = nullptr;
  REQUIRE(cg_graph_union(k3.g, k3.g, &u) == CG_OK);
  int64_t det = 0;
  CHECK(cg_graph_det_integer(u, &det) == CG_OK);
  CHECK(det == 4);
  int mating = 0;
  CHECK(cg_graph_is_mating(u, &mating) == CG_OK);
  CHECK(mating == 1);
  cg_graph_free(u);
}

TEST_CASE("structure") {
  Graph p("path:7");
  cg_structure_report r{};
  REQUIRE(cg_classify(p.g, &r) == CG_OK);
  CHECK(r.n == 7);
  CHECK(r.rank == 6);
  CHECK(r.k == 3);
  CHECK(r.m == 1);

  Graph s("star:4");
  Graph one("gkm:1,2");
  int same = 0;
  CHECK(cg_same_class(s.g, one.g, &same) == CG_OK);
  CHECK(same == 1);
  CHECK(cg_same_class(s.g, p.g, &same) == CG_ERR_PARAMETER);
  CHECK(std::string(cg_last_error()).find("same number of vertices") != std::string::npos);
}

TEST_CASE("reduce and witness round trip") {
  Graph g("union:(complete:3,path:4)");
  cg_graph* target = nullptr;
  cg_witness* w = nullptr;
  REQUIRE(cg_reduce(g.g, &target, &w) == CG_OK);
  CHECK(cg_graph_order(target) == 7);

  char* json = nullptr;
  REQUIRE(cg_witness_to_json(w, &json) == CG_OK);
  const std::string text = take(json);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["images"].size() == 7);

  cg_witness* back = nullptr;
  REQUIRE(cg_witness_from_json(text.c_str(), &back) == CG_OK);
  int valid = 0;
  char* diag = nullptr;
  CHECK(cg_witness_validate(back, &valid, &diag) == CG_OK);
  CHECK(valid == 1);
  CHECK(take(diag).empty());

  cg_witness_free(back);
  cg_witness_free(w);
  cg_graph_free(target);
}

TEST_CASE("named witnesses") {
  for (int n = 2; n <= 10; ++n) {
    for (const cg_named_iso kind : {CG_ISO_PATH_COMPLETE, CG_ISO_STAR_ONEEDGE}) {
      for (int inverse = 0; inverse <= 1; ++inverse) {
        cg_witness* w = nullptr;
        REQUIRE(cg_named_isomorphism(kind, n, inverse, &w) == CG_OK);
        int valid = 0;
        CHECK(cg_witness_validate(w, &valid, nullptr) == CG_OK);
        CHECK(valid == 1);
        cg_witness_free(w);
      }
    }
  }
  cg_witness* w = nullptr;
  CHECK(cg_named_isomorphism(CG_ISO_STAR_ONEEDGE, 1, 0, &w) == CG_ERR_PARAMETER);
  CHECK(cg_named_isomorphism(static_cast<cg_named_iso>(9), 4, 0, &w) == CG_ERR_PARAMETER);
}

TEST_CASE("center") {
  Graph p("path:7");
  int central = 0;
  CHECK(cg_is_central(p.g, "1,3,5,7", &central) == CG_OK);
  CHECK(central == 1);
  CHECK(cg_is_central(p.g, "", &central) == CG_OK);
  CHECK(central == 1);
  CHECK(cg_is_central(p.g, "1,2", &central) == CG_OK);
  CHECK(central == 0);
  CHECK(cg_is_central(p.g, "1,9", &central) != CG_OK);
  int d = 0;
  Graph s("star:8");
  CHECK(cg_center_log2(s.g, &d) == CG_OK);
  CHECK(d == 6);
}

TEST_CASE("rendered reports are JSON") {
  Graph p("path:7");
  char* out = nullptr;
  REQUIRE(cg_render_analysis(p.g, CG_FORMAT_JSON, &out) == CG_OK);
  const auto a = nlohmann::json::parse(take(out));
  CHECK(a["center_dim"] == 2);
  CHECK(a["summary"] == "⊕_2 Mat(8)");

  REQUIRE(cg_render_idempotent(p.g, "1,3,5,7", CG_FORMAT_JSON, &out) == CG_OK);
  const auto c = nlohmann::json::parse(take(out));
  CHECK(c["checks"]["idempotent"] == true);
  CHECK(c["checks"]["central"] == true);

  CHECK(cg_render_idempotent(p.g, "1", CG_FORMAT_JSON, &out) == CG_ERR_PRECONDITION);

  int all = 0;
  REQUIRE(cg_render_sequences("A141040", 6, 0, CG_FORMAT_JSON, &all, &out) == CG_OK);
  CHECK(all == 1);
  const auto s = nlohmann::json::parse(take(out));
  CHECK(s["sequences"][0]["terms"].size() == 3);
  CHECK(s["sequences"][0]["terms"][2]["value"] == 47);

  CHECK(cg_render_sequences("A999999", 6, 0, CG_FORMAT_JSON, &all, &out) == CG_ERR_PARAMETER);
  CHECK(cg_render_census(3, 2, 0, CG_FORMAT_TEXT, &out) == CG_ERR_PARAMETER);
  CHECK(cg_render_census(1, 9, 0, CG_FORMAT_TEXT, &out) == CG_ERR_CAPACITY);

  REQUIRE(cg_render_dynkin(12, CG_FORMAT_JSON, &all, &out) == CG_OK);
  CHECK(all == 1);
  cg_string_free(out);
}

TEST_CASE("error reporting") {
  cg_graph* g = nullptr;
  CHECK(cg_graph_from_graph6("E?~", &g) == CG_ERR_PARSE);
  CHECK(cg_last_error_offset() == 3);
  CHECK(cg_graph_from_family("path:70", &g) == CG_ERR_CAPACITY);
  CHECK(cg_last_error_offset() == -1);
  CHECK(cg_graph_from_family(nullptr, &g) == CG_ERR_PARAMETER);
  CHECK(cg_graph_from_family("path:3", nullptr) == CG_ERR_PARAMETER);
  cg_witness* w = nullptr;
  CHECK(cg_witness_from_json("{\"source\": 1}", &w) == CG_ERR_PARSE);
  CHECK(cg_witness_from_json("{not json", &w) == CG_ERR_PARSE);
  CHECK(cg_last_error_offset() >= 0);
  cg_graph_free(nullptr);
  cg_witness_free(nullptr);
  cg_string_free(nullptr);
}
