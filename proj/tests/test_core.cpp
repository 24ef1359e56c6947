#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace graphgram;

TEST_CASE("construct_graph basic cases") {
  SECTION("empty input gives the empty graph") {
    Graph g = construct_graph({}, {});
    CHECK(g.live_node_count() == 0);
    CHECK(g.live_edge_count() == 0);
    CHECK_FALSE(g.directed());
  }

  SECTION("demo molecule layout") {
    Graph g = generate({.kind = GraphKind::demo_molecule});
    CHECK(g.live_node_count() == 6);
    CHECK(g.live_edge_count() == 6);
    REQUIRE(g.types().find_terminal("C").has_value());
    REQUIRE(g.types().find_terminal("H").has_value());
    CHECK(g.types().size() == 2);
    CHECK(g.validate());
  }

  SECTION("unlabeled nodes collapse to a single terminal") {
    Graph g = construct_graph({{0, ""}, {1, ""}}, {{0, 1}});
    CHECK(g.types().size() == 1);
    CHECK(g.types().name(g.node(0).type) == "n");
  }

  SECTION("input self-loop is rejected") {
    CHECK_THROWS_MATCHES(construct_graph({{1, "A"}}, {{1, 1}}), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == Errc::self_loop_in_input; }));
  }

  SECTION("duplicate node id is rejected") {
    try {
      construct_graph({{1, "A"}, {1, "B"}}, {});
      FAIL("expected DuplicateNodeId");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::duplicate_node_id);
    }
  }

  SECTION("dangling endpoint is rejected") {
    try {
      construct_graph({{1, "A"}}, {{1, 2}});
      FAIL("expected DanglingEndpoint");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::dangling_endpoint);
    }
  }

  SECTION("mixed directedness is rejected") {
    try {
      construct_graph({{0, "A"}, {1, "B"}, {2, "C"}}, {{0, 1, "-", true}, {1, 2, "-", false}});
      FAIL("expected MixedDirectedness");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::mixed_directedness);
    }
  }
}

TEST_CASE("construct_graph preserves the input edge multiset") {
  std::vector<EdgeSpec> edges = {{0, 1, "x"}, {0, 1, "x"}, {1, 2}, {2, 0, "y"}};
  Graph g = construct_graph({{0, "A"}, {1, "A"}, {2, "B"}}, edges);
  std::multiset<std::tuple<NodeId, NodeId, std::string>> expect, got;
  for (const EdgeSpec& e : edges) expect.insert({e.u, e.v, e.label});
  for (EdgeId id : g.live_edges()) {
    const Graph::Edge& e = g.edge(id);
    got.insert({e.u, e.v, e.label});
  }
  CHECK(expect == got);
}

TEST_CASE("edge_type_of canonicalization") {
  SECTION("undirected H-C and C-H edges get the identical key") {
    Graph g = construct_graph({{0, "C"}, {1, "H"}, {2, "C"}, {3, "H"}}, {{0, 1}, {3, 2}});
    CHECK(edge_type_of(g, 0) == edge_type_of(g, 1));
    CHECK(key_to_string(edge_type_of(g, 1), g.types()) == "C-H");
  }

  SECTION("directed edges keep orientation") {
    Graph g = construct_graph({{0, "A"}, {1, "B"}}, {{0, 1, "-", true}, {1, 0, "-", true}});
    CHECK(edge_type_of(g, 0) != edge_type_of(g, 1));
    CHECK(key_to_string(edge_type_of(g, 0), g.types()) == "A>B");
    CHECK(key_to_string(edge_type_of(g, 1), g.types()) == "B>A");
  }

  SECTION("self-loop on a hyper-node sorts its two attachment paths") {
    Graph g(false);
    TypeId a = g.types().intern_terminal("A");
    TypeId b = g.types().intern_terminal("B");
    TypeId t = g.types().add_nonterminal("T");
    (void)a;
    (void)b;
    g.add_node(0, t);
    g.add_edge(0, {1}, 0, {0}, "-", false);
    EdgeTypeKey k = edge_type_of(g, 0);
    CHECK(k.path_a == PortPath{0});
    CHECK(k.path_b == PortPath{1});
    CHECK(key_to_string(k, g.types()) == "T.0-T.1");
  }

  SECTION("unknown edge") {
    Graph g = construct_graph({{0, "A"}}, {});
    CHECK_THROWS_AS(edge_type_of(g, 0), Error);
  }

  SECTION("key is invariant under storage order of undirected endpoints") {
    for (std::uint32_t seed = 1; seed <= 20; ++seed) {
      Graph g = testutil::small_random_graph(seed);
      std::vector<EdgeSpec> flipped;
      for (EdgeId id : g.live_edges()) {
        const Graph::Edge& e = g.edge(id);
        flipped.push_back({e.v, e.u, e.label});
      }
      std::vector<NodeSpec> nodes;
      for (NodeId id : g.live_nodes()) nodes.push_back({id, g.types().name(g.node(id).type)});
      Graph h = construct_graph(nodes, flipped);
      for (EdgeId id : g.live_edges()) CHECK(edge_type_of(g, id) == edge_type_of(h, id));
    }
  }
}

TEST_CASE("relabel_by_degree") {
  SECTION("path gets d1, d2, d1") {
    Graph g = construct_graph({{0, "a"}, {1, "b"}, {2, "c"}}, {{0, 1}, {1, 2}});
    Graph r = relabel_by_degree(g);
    CHECK(r.types().name(r.node(0).type) == "d1");
    CHECK(r.types().name(r.node(1).type) == "d2");
    CHECK(r.types().name(r.node(2).type) == "d1");
    CHECK(r.live_edge_count() == 2);
  }

  SECTION("directed star hub gets i0o3, leaves i1o0") {
    GeneratorSpec spec;
    spec.kind = GraphKind::star_forest;
    spec.hubs = 1;
    spec.leaves = 3;
    spec.directed = true;
    Graph r = relabel_by_degree(generate(spec));
    CHECK(r.types().name(r.node(0).type) == "i0o3");
    CHECK(r.types().name(r.node(1).type) == "i1o0");
  }

  SECTION("empty graph stays empty") {
    Graph r = relabel_by_degree(construct_graph({}, {}));
    CHECK(r.live_node_count() == 0);
  }

  SECTION("idempotent up to label text") {
    Graph g = generate({.kind = GraphKind::two_triangles});
    Graph once = relabel_by_degree(g);
    Graph twice = relabel_by_degree(once);
    for (NodeId id : once.live_nodes())
      CHECK(once.types().name(once.node(id).type) == twice.types().name(twice.node(id).type));
  }
}

TEST_CASE("graph_equal distinguishes structure") {
  Graph a = generate({.kind = GraphKind::demo_molecule});
  Graph b = generate({.kind = GraphKind::demo_molecule});
  CHECK(graph_equal(a, b));
  Graph c = construct_graph({{0, "C"}, {1, "C"}, {2, "H"}, {3, "H"}, {4, "H"}, {5, "H"}},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {4, 5}});
  CHECK_FALSE(graph_equal(a, c));
}
