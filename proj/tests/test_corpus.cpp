#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sepack/corpus.hpp"
#include "sepack/graph.hpp"

using namespace sepack;

TEST_CASE("named graph orders and sizes") {
  struct Row {
    const char* name;
    int n, m;
  };
  for (const Row& r : {Row{"k4", 4, 6}, Row{"k4_subdivided", 5, 7}, Row{"k33", 6, 9},
                       Row{"k33_subdivided", 7, 10}, Row{"petersen", 10, 15},
                       Row{"tietze", 12, 18}, Row{"wagner", 8, 12}, Row{"prism3", 6, 9}}) {
    Graph g = named_graph(r.name);
    CHECK(g.vertex_count() == r.n);
    CHECK(g.edge_count() == r.m);
    CHECK(g.is_simple());
    CHECK(g.is_connected());
    CHECK(g.subcubic());
  }
}

TEST_CASE("parametric names") {
  Graph c12 = named_graph("cycle(12)");
  CHECK(c12.vertex_count() == 12);
  CHECK(c12.edge_count() == 12);
  for (VertexId v = 0; v < 12; ++v) CHECK(c12.degree(v) == 2);

  Graph p2 = named_graph("path(2)");
  CHECK(p2.vertex_count() == 2);
  CHECK(p2.edge_count() == 1);
  CHECK(named_graph("path(1)").edge_count() == 0);  // a single vertex

  CHECK_THROWS(named_graph("cycle(2)"));
  CHECK_THROWS(named_graph("nonesuch"));
  CHECK_THROWS(named_graph("cycle(x)"));
}

TEST_CASE("every listed name resolves") {
  for (const std::string& name : named_graph_names()) {
    if (name.find("(n)") != std::string::npos) continue;  // parametric placeholder
    CHECK_NOTHROW(named_graph(name));
  }
}

TEST_CASE("tietze is the petersen graph with vertex 0 expanded") {
  Graph t = named_graph("tietze");
  StructureStats s = structure_stats(t);
  CHECK(s.girth == 3);
  for (VertexId v = 0; v < 12; ++v) CHECK(t.degree(v) == 3);
  // Exactly one triangle: vertices 0,1,2.
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : t.edges()) edges.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  CHECK(edges.count({0, 1}));
  CHECK(edges.count({0, 2}));
  CHECK(edges.count({1, 2}));
}

TEST_CASE("edge list round trip with comments") {
  Graph g = named_graph("k33_subdivided");
  std::string text = "# subdivided complete bipartite\n" + write_graph(g, GraphFormat::kEdgeList);
  Graph back = read_graph(text, GraphFormat::kEdgeList);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edge_count() == g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    CHECK(back.edge(e).u == g.edge(e).u);
    CHECK(back.edge(e).v == g.edge(e).v);
  }
}

TEST_CASE("edge list triangle from the plain format") {
  Graph g = read_graph("3 3\n0 1\n1 2\n2 0\n", GraphFormat::kEdgeList);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(structure_stats(g).girth == 3);
}

TEST_CASE("edge list parse errors carry the line number") {
  try {
    read_graph("3 3\n0 1\n1 5\n2 0\n", GraphFormat::kEdgeList);
    FAIL("expected a parse error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS(read_graph("2 1\n", GraphFormat::kEdgeList));          // missing edge
  CHECK_THROWS(read_graph("not a header\n", GraphFormat::kEdgeList));
}

TEST_CASE("graph6 encodes K4 in two bytes") {
  Graph k4 = named_graph("k4");
  CHECK(write_graph(k4, GraphFormat::kGraph6) == "C~");
  Graph back = read_graph("C~", GraphFormat::kGraph6);
  CHECK(back.vertex_count() == 4);
  CHECK(back.edge_count() == 6);
}

TEST_CASE("graph6 round trip preserves adjacency") {
  for (const char* name : {"petersen", "wagner", "k33", "cycle(13)", "path(9)"}) {
    Graph g = named_graph(name);
    Graph back = read_graph(write_graph(g, GraphFormat::kGraph6), GraphFormat::kGraph6);
    REQUIRE(back.vertex_count() == g.vertex_count());
    std::set<std::pair<VertexId, VertexId>> a, b;
    for (const Edge& e : g.edges()) a.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    for (const Edge& e : back.edges()) b.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    CHECK(a == b);
  }
}

TEST_CASE("graph6 refuses multigraphs and bad bytes") {
  CHECK_THROWS(write_graph(Graph(2, {{0, 1}, {0, 1}}), GraphFormat::kGraph6));
  CHECK_THROWS(write_graph(Graph(1, {{0, 0}}), GraphFormat::kGraph6));
  try {
    read_graph("C\x01", GraphFormat::kGraph6);
    FAIL("expected a decode error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}
