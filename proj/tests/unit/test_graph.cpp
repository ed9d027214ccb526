#include <sstream>

#include "doctest.h"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/flows.hpp"
#include "tuttekit/graph.hpp"
#include "tuttekit/graph_io.hpp"
#include "tuttekit/rotation.hpp"

using namespace tuttekit;

TEST_CASE("multigraph stores loops and parallel edges") {
  Multigraph g(2);
  int a = g.add_edge(0, 1);
  int b = g.add_edge(0, 1);
  int l = g.add_edge(1, 1);
  CHECK(g.num_edges() == 3);
  CHECK(g.edge(l).is_loop());
  CHECK_FALSE(g.edge(a).is_loop());
  CHECK(g.degree(1) == 4);  // two ends of the loop plus two parallels
  CHECK(g.edge(b).other(0) == 1);
}

TEST_CASE("deletion and contraction renumber consistently") {
  Multigraph g = complete_graph(4);
  Multigraph d = g.deleted(0);
  CHECK(d.num_edges() == 5);
  CHECK(d.num_vertices() == 4);
  CHECK_FALSE(d.has_edge(0));

  Multigraph c = g.contracted(0);  // contract edge (0,1)
  CHECK(c.num_vertices() == 3);
  CHECK(c.num_edges() == 5);
  // the two former 0-2 and 1-2 edges are now parallel
  int parallel = 0;
  for (const Edge& e : c.edges())
    if (!e.is_loop()) ++parallel;
  CHECK(parallel == 5);

  // contracting a loop just deletes it
  Multigraph loop(1);
  int l = loop.add_edge(0, 0);
  CHECK(loop.contracted(l).num_edges() == 0);
  CHECK(loop.contracted(l).num_vertices() == 1);
}

TEST_CASE("component counts and cyclomatic numbers") {
  Multigraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  ComponentInfo info = g.components();
  CHECK(info.k == 2);
  CHECK(info.cyclomatic == 1);
  CHECK_FALSE(g.connected());
  CHECK(g.components_of({3}).k == 4);  // only edge (3,4) present
}

TEST_CASE("edge classification finds bridges and loops") {
  Multigraph g(3);
  int bridge = g.add_edge(0, 1);
  int l = g.add_edge(1, 1);
  int c1 = g.add_edge(1, 2);
  int c2 = g.add_edge(1, 2);
  CHECK(g.classify_edge(bridge) == EdgeClass::Bridge);
  CHECK(g.classify_edge(l) == EdgeClass::Loop);
  CHECK(g.classify_edge(c1) == EdgeClass::Normal);
  auto pp = g.find_parallel_pair();
  REQUIRE(pp.has_value());
  CHECK(((pp->first == c1 && pp->second == c2) || (pp->first == c2 && pp->second == c1)));
}

TEST_CASE("series pair detection skips the terminals") {
  Multigraph path = path_graph(3);  // 0-1-2-3
  auto sp = path.find_series_pair();
  CHECK(sp.has_value());
  Multigraph p2 = path_graph(2);
  // inner vertex of a 2-path has degree 2: series reducible
  CHECK(p2.find_series_pair().has_value());
  Multigraph k4 = complete_graph(4);
  CHECK_FALSE(k4.find_series_pair().has_value());
}

TEST_CASE("identify merges vertices without deleting edges") {
  Multigraph g = path_graph(3);
  std::vector<int> vmap;
  Multigraph h = g.identified(0, 3, vmap);
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 3);
  CHECK(vmap[0] == vmap[3]);
  CHECK(h.connected());
  CHECK(h.components().cyclomatic == 1);
}

TEST_CASE("articulation points of a bowtie") {
  // two triangles joined at vertex 2
  Multigraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 2);
  auto arts = articulation_points(g);
  REQUIRE(arts.size() == 1);
  CHECK(arts[0] == 2);
  CHECK(biconnected_components(g).size() == 2);
}

TEST_CASE("graph text format round-trips weights and rotations") {
  Multigraph g(3);
  g.add_edge(0, 1, EdgeWeight::exact(Rational(-1, 2)));
  g.add_edge(1, 2, EdgeWeight::symbol("a"));
  g.add_edge(2, 0);
  RotationSystem rot;
  rot.at = {{{0, 0}, {2, 1}}, {{1, 0}, {0, 1}}, {{2, 0}, {1, 1}}};
  std::string text = graph_to_text(g, &rot);
  ParsedGraph back = parse_graph_text(text);
  CHECK(back.graph.num_vertices() == 3);
  REQUIRE(back.graph.num_edges() == 3);
  CHECK(back.graph.edge(0).w.is_exact());
  CHECK(back.graph.edge(0).w.value == Rational(-1, 2));
  CHECK(back.graph.edge(1).w.name == "a");
  REQUIRE(back.rotation.has_value());
  CHECK(graph_to_text(back.graph, &*back.rotation) == text);
}

TEST_CASE("graph parser rejects malformed input") {
  CHECK_THROWS_AS(parse_graph_text("edge 0 1\n"), GraphParseError);  // no vertex count
  CHECK_THROWS_AS(parse_graph_text("vertices 2\nedge 0 5\n"), GraphParseError);
  CHECK_THROWS_AS(parse_graph_text("vertices -1\n"), GraphParseError);
  CHECK_THROWS_AS(parse_graph_text("vertices 2\nedge 0 1\nrot 0 7:0\n"), GraphParseError);
}

TEST_CASE("shared symbol names produce shared weight keys") {
  ParsedGraph pg = parse_graph_text("vertices 3\nedge 0 1 a\nedge 1 2 a\nedge 2 0 b\n");
  CHECK(pg.graph.edge(0).w.key() == pg.graph.edge(1).w.key());
  CHECK(pg.graph.edge(0).w.key() != pg.graph.edge(2).w.key());
}

TEST_CASE("planar dual of a cycle is a multi-edge bundle") {
  Multigraph c4 = cycle_graph(4);
  PlanarDualResult dual = planar_dual(c4, cycle_embedding(4));
  CHECK(dual.num_faces == 2);
  CHECK(dual.dual.num_vertices() == 2);
  CHECK(dual.dual.num_edges() == 4);
  for (const Edge& e : dual.dual.edges()) CHECK_FALSE(e.is_loop());
}

TEST_CASE("planar dual of the wheel keeps edge identifiers") {
  Multigraph w4 = wheel_graph(4);
  PlanarDualResult dual = planar_dual(w4, wheel_embedding(4));
  // Euler: V - E + F = 2 with V=5, E=8 gives F=5
  CHECK(dual.num_faces == 5);
  CHECK(dual.dual.num_edges() == w4.num_edges());
  for (const Edge& e : w4.edges()) CHECK(dual.dual.has_edge(e.id));
  // dual of the dual has the primal's profile
  PlanarDualResult back = planar_dual(dual.dual, dual.dual_rot);
  CHECK(back.num_faces == w4.num_vertices());
}

TEST_CASE("non planar rotation is rejected") {
  // K5 has no planar embedding; any rotation fails the Euler check
  Multigraph k5 = complete_graph(5);
  RotationSystem rot;
  rot.at.resize(5);
  for (const Edge& e : k5.edges()) {
    rot.at[static_cast<size_t>(e.u)].push_back({e.id, 0});
    rot.at[static_cast<size_t>(e.v)].push_back({e.id, 1});
  }
  REQUIRE(rot.validate(k5));
  CHECK_THROWS_AS(planar_dual(k5, rot), NonPlanarEmbeddingError);
}

TEST_CASE("max flow counts edge-disjoint paths") {
  Multigraph theta = theta_graph(2, 3);
  CHECK(max_flow(theta, 0, 1) == 3);
  Multigraph p = path_graph(4);
  CHECK(max_flow(p, 0, 4) == 1);
  CHECK(maxmaxflow(complete_graph(4)) == 3);
  CHECK(maxmaxflow(cycle_graph(5)) == 2);
}

TEST_CASE("fixture generators have the documented shapes") {
  CHECK(complete_graph(5).num_edges() == 10);
  CHECK(cycle_graph(1).edge(0).is_loop());
  CHECK(star_graph(4).num_edges() == 4);
  CHECK(wheel_graph(5).num_vertices() == 6);
  CHECK(wheel_graph(5).num_edges() == 10);
  Multigraph th = theta_graph(3, 4);
  CHECK(th.num_edges() == 12);
  CHECK(th.num_vertices() == 2 + 4 * 2);
  CHECK(max_flow(th, 0, 1) == 4);
  Multigraph pet = petersen_graph();
  CHECK(pet.num_vertices() == 10);
  CHECK(pet.num_edges() == 15);
  CHECK(pet.max_degree() == 3);
}

TEST_CASE("exhaustive small corpus hits the known counts") {
  auto all46 = all_multigraphs(4, 6);
  CHECK(all46.size() == 9023);
  auto trees5 = all_labeled_trees(5);
  CHECK(trees5.size() == 125);
  for (const Multigraph& t : trees5) {
    CHECK(t.connected());
    CHECK(t.components().cyclomatic == 0);
  }
}

TEST_CASE("random corpora respect their constraints") {
  auto graphs = random_multigraphs(25, 8, 7);
  CHECK(graphs.size() == 25);
  for (const auto& g : graphs) CHECK(g.num_edges() <= 8);
  auto bounded = bounded_degree_corpus(30, 4, 10, 3);
  CHECK(bounded.size() == 30);
  for (const auto& g : bounded) {
    CHECK(g.max_degree() <= 4);
    CHECK(g.num_vertices() <= 10);
    for (const Edge& e : g.edges()) CHECK_FALSE(e.is_loop());
  }
  // determinism under a fixed seed
  auto again = bounded_degree_corpus(30, 4, 10, 3);
  REQUIRE(again.size() == bounded.size());
  for (size_t i = 0; i < again.size(); ++i)
    CHECK(again[i].debug_string() == bounded[i].debug_string());
}
