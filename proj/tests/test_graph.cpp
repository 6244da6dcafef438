#include <random>
#include <vector>

#include "cliffgraph/census.hpp"
#include "cliffgraph/error.hpp"
#include "cliffgraph/family.hpp"
#include "cliffgraph/graph.hpp"
#include "cliffgraph/graph6.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cliffgraph;

namespace {

bool symmetric_loopless(const Graph& g) {
  for (int i = 0; i < g.order(); ++i) {
    if (g.has_edge(i, i)) return false;
    for (int j = 0; j < g.order(); ++j)
      if (g.has_edge(i, j) != g.has_edge(j, i)) return false;
  }
  return true;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::kParameter;
}

}  // namespace

TEST_CASE("family constructors") {
  const Graph p = build_family("path:7");
  CHECK(p.order() == 7);
  CHECK(p.edge_count() == 6);
  CHECK(p.has_edge(0, 1));
  CHECK_FALSE(p.has_edge(0, 2));

  const Graph s = build_family("star:8");
  CHECK(s.degree(0) == 7);
  CHECK(s.edge_count() == 7);

  CHECK(build_family("complete:5").edge_count() == 10);
  CHECK(build_family("cycle:4").edge_count() == 4);
  CHECK(build_family("edgeless:3").edge_count() == 0);

  const Graph gkm = build_family("gkm:3,2");
  CHECK(gkm.order() == 8);
  CHECK(gkm.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(gkm.isolated_count() == 2);

  for (const char* spec : {"path:7", "star:8", "complete:5", "cycle:4", "edgeless:3", "gkm:3,2", "dynkin:A5",
                           "dynkin:D4", "dynkin:E8", "union:(complete:3,complete:3)"}) {
    CAPTURE(spec);
    CHECK(symmetric_loopless(build_family(spec)));
  }
}

TEST_CASE("dynkin layouts") {
  const Graph d5 = build_family("dynkin:D5");
  // path 1-2-3-4 with vertex 5 on vertex 3
  CHECK(d5.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {2, 4}});
  const Graph e6 = build_family("dynkin:E6");
  CHECK(e6.edge_count() == 5);
  CHECK(e6.has_edge(2, 5));
  CHECK(e6.degree(2) == 3);
  CHECK(build_family("dynkin:A5") == path_graph(5));
}

TEST_CASE("family parameter constraints") {
  CHECK(kind_of([] { build_family("cycle:2"); }) == ErrorKind::kParameter);
  CHECK(kind_of([] { build_family("dynkin:E9"); }) == ErrorKind::kParameter);
  CHECK(kind_of([] { build_family("dynkin:D3"); }) == ErrorKind::kParameter);
  CHECK(kind_of([] { build_family("path:65"); }) == ErrorKind::kCapacity);
  CHECK(kind_of([] { build_family("union:(complete:40,complete:40)"); }) == ErrorKind::kCapacity);
}

TEST_CASE("family spec parse errors carry offsets") {
  try {
    build_family("union:(path:3,,path:2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 14);
  }
  CHECK(kind_of([] { build_family("wheel:5"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { build_family("path:"); }) == ErrorKind::kParse);
  CHECK(kind_of([] { build_family("path:3x"); }) == ErrorKind::kParse);
}

TEST_CASE("family spec round trip") {
  for (const char* spec : {"path:7", "gkm:3,2", "dynkin:E8", "union:(complete:3,union:(path:2,edgeless:1))"}) {
    CHECK(to_string(parse_family(spec)) == spec);
  }
}

TEST_CASE("disjoint union") {
  const Graph k3k3 = build_family("union:(complete:3,complete:3)");
  CHECK(k3k3.order() == 6);
  CHECK(k3k3.edge_count() == 6);
  CHECK_FALSE(k3k3.has_edge(2, 3));
  CHECK(k3k3.has_edge(3, 5));

  const Graph p = path_graph(4);
  const Graph pk1 = disjoint_union(p, Graph(1));
  CHECK(pk1.order() == 5);
  CHECK(pk1.isolated_count() == 1);

  // K2 u K1 is the 3-vertex mating graph with degenerate adjacency.
  const Graph k2k1 = disjoint_union(complete_graph(2), Graph(1));
  CHECK(is_mating(k2k1));
  CHECK(oracle::leibniz_det(k2k1) == 0);
}

TEST_CASE("union is associative up to isomorphism") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Graph a = oracle::labeled_graph(2, rng() & 1);
    const Graph b = oracle::labeled_graph(3, rng() & 7);
    const Graph c = oracle::labeled_graph(3, rng() & 7);
    CHECK(census::canonical_form(disjoint_union(disjoint_union(a, b), c)) ==
          census::canonical_form(disjoint_union(a, disjoint_union(b, c))));
  }
}

TEST_CASE("mating graphs") {
  CHECK(is_mating(complete_graph(3)));
  CHECK_FALSE(is_mating(disjoint_union(Graph(1), Graph(1))));
  CHECK(is_mating(disjoint_union(complete_graph(2), Graph(1))));
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) CHECK(is_mating(g) == oracle::rows_distinct(g));
  }
}

TEST_CASE("unions of mating graphs") {
  const auto small = oracle::brute_classes(3);
  for (const Graph& a : small) {
    for (const Graph& b : small) {
      const Graph u = disjoint_union(a, b);
      if (is_mating(a) && is_mating(b) && u.isolated_count() <= 1) CHECK(is_mating(u));
    }
  }
}

TEST_CASE("relabel") {
  const Graph p = path_graph(4);
  const std::vector<int> reverse{3, 2, 1, 0};
  const Graph r = p.relabel(reverse);
  CHECK(r == p);
  const std::vector<int> swap{1, 0, 2, 3};
  CHECK(p.relabel(swap).has_edge(0, 2));
  const std::vector<int> bad{0, 0, 1, 2};
  CHECK(kind_of([&] { p.relabel(bad); }) == ErrorKind::kParameter);
}

TEST_CASE("from_rows validation") {
  const std::vector<std::uint64_t> asym{0b10, 0b00};
  CHECK(kind_of([&] { Graph::from_rows(asym); }) == ErrorKind::kParameter);
  const std::vector<std::uint64_t> loop{0b01};
  CHECK(kind_of([&] { Graph::from_rows(loop); }) == ErrorKind::kParameter);
  const std::vector<std::uint64_t> ok{0b10, 0b01};
  CHECK(Graph::from_rows(ok) == complete_graph(2));
}

TEST_CASE("graph6 encoding") {
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6(to_graph6(path_graph(6))) == path_graph(6));
  CHECK(parse_graph6("E?~o\n") == parse_graph6("E?~o"));
  CHECK(to_graph6(parse_graph6("E?~o")) == "E?~o");
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 64; ++n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) edges.emplace_back(i, j);
    const Graph g = Graph::from_edges(n, edges);
    CAPTURE(n);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  CHECK(to_graph6(Graph(63)).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 errors") {
  auto offset_of = [](const char* text) -> long {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("E?~") == 3);   // truncated body
  CHECK(offset_of("A_x") == 2);   // trailing data
  CHECK(offset_of("E?\x01o") == 2);
  CHECK(kind_of([] { parse_graph6("~?@@"); }) == ErrorKind::kCapacity);
}
