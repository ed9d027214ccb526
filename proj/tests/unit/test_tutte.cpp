#include "doctest.h"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/graph_io.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

// q (q + v0) (q + v1) ... for a tree with the given edge ids
MultiAffinePoly tree_formula(const Multigraph& t) {
  MultiAffinePoly out{LaurentPoly::var_power(1)};
  for (const Edge& e : t.edges())
    out *= MultiAffinePoly::var(e.id) + MultiAffinePoly(LaurentPoly::var_power(1));
  return out;
}

// prod (q + v_e) + (q - 1) prod v_e for a cycle
MultiAffinePoly cycle_formula(const Multigraph& c) {
  MultiAffinePoly a{Rational(1)}, b{Rational(1)};
  for (const Edge& e : c.edges()) {
    a *= MultiAffinePoly::var(e.id) + MultiAffinePoly(LaurentPoly::var_power(1));
    b *= MultiAffinePoly::var(e.id);
  }
  return a + b.scaled(LaurentPoly::var_power(1) - LaurentPoly(Rational(1)));
}

}  // namespace

TEST_CASE("subset expansion equals deletion-contraction on mixed multigraphs") {
  std::vector<Multigraph> gs;
  gs.push_back(complete_graph(4));
  gs.push_back(theta_graph(2, 3));
  Multigraph messy(3);
  messy.add_edge(0, 0);
  messy.add_edge(0, 1);
  messy.add_edge(0, 1);
  messy.add_edge(1, 2);
  messy.add_edge(2, 2);
  gs.push_back(messy);
  Multigraph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  gs.push_back(disconnected);
  for (const Multigraph& g : gs) {
    CHECK(z_subset_expansion(g) == z_delete_contract(g).z);
  }
}

TEST_CASE("empty and edgeless graphs") {
  Multigraph empty(0);
  CHECK(graph_z(empty) == MultiAffinePoly(Rational(1)));
  Multigraph dots(3);
  CHECK(graph_z(dots) == MultiAffinePoly(LaurentPoly::var_power(3)));
}

TEST_CASE("memoized and plain solvers agree") {
  Multigraph g = wheel_graph(5);
  SolveOptions plain;
  plain.use_memo = false;
  SolveOptions memo;
  CHECK(z_delete_contract(g, plain).z == z_delete_contract(g, memo).z);
}

TEST_CASE("parallel solve is bit-identical to sequential") {
  Multigraph g = complete_graph(5);
  SolveOptions seq;
  SolveOptions par;
  par.jobs = 4;
  CHECK(z_delete_contract(g, seq).z.serialize() == z_delete_contract(g, par).z.serialize());
}

TEST_CASE("trees satisfy the product formula") {
  for (const Multigraph& t : all_labeled_trees(5)) CHECK(graph_z(t) == tree_formula(t));
  CHECK(graph_z(path_graph(7)) == tree_formula(path_graph(7)));
  CHECK(graph_z(star_graph(6)) == tree_formula(star_graph(6)));
}

TEST_CASE("cycles satisfy the two-term formula") {
  for (int n = 1; n <= 7; ++n) {
    Multigraph c = cycle_graph(n);
    CHECK(graph_z(c) == cycle_formula(c));
  }
}

TEST_CASE("coloring oracle matches the polynomial at small integer q") {
  std::vector<Multigraph> gs{complete_graph(4), cycle_graph(5), theta_graph(2, 2)};
  Multigraph loopy(2);
  loopy.add_edge(0, 1);
  loopy.add_edge(0, 0);
  gs.push_back(loopy);
  for (const Multigraph& g : gs)
    for (int q : {1, 2, 3})
      CHECK(potts_coloring_oracle(g, q) == graph_z(g).substitute_q(Rational(q)));
}

TEST_CASE("flow sums depend only on the group order for abelian groups") {
  std::vector<Multigraph> gs{complete_graph(4), theta_graph(2, 3), cycle_graph(4)};
  for (const Multigraph& g : gs) {
    MultiAffinePoly z4 = gamma_flow_oracle(g, {4});
    MultiAffinePoly z22 = gamma_flow_oracle(g, {2, 2});
    CHECK(z4 == z22);
  }
}

TEST_CASE("flow sum equals the transformed partition function") {
  std::vector<Multigraph> gs{complete_graph(4), cycle_graph(3)};
  Multigraph with_loop(2);
  with_loop.add_edge(0, 1);
  with_loop.add_edge(1, 1);
  gs.push_back(with_loop);
  for (const Multigraph& g : gs)
    for (int q : {2, 3}) {
      MultiAffinePoly lhs = gamma_flow_oracle(g, {q});
      MultiAffinePoly rhs = flow_poly_multivariate(g).substitute_q(Rational(q));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("chromatic polynomials of standard graphs") {
  LaurentPoly q = LaurentPoly::var_power(1);
  LaurentPoly one{Rational(1)};
  CHECK(chromatic_poly(complete_graph(3)) ==
        q * (q - one) * (q - LaurentPoly(Rational(2))));
  CHECK(chromatic_poly(cycle_graph(4)) ==
        (q - one).pow(4) + (q - one));
  // a loop makes the graph uncolorable
  Multigraph loopy(1);
  loopy.add_edge(0, 0);
  CHECK(chromatic_poly(loopy).is_zero());
  // chromatic polynomial is multiplicative over components
  Multigraph two_triangles(6);
  for (int base : {0, 3}) {
    two_triangles.add_edge(base, base + 1);
    two_triangles.add_edge(base + 1, base + 2);
    two_triangles.add_edge(base + 2, base);
  }
  CHECK(two_triangles.components().k == 2);
  CHECK(chromatic_poly(two_triangles) == chromatic_poly(complete_graph(3)).pow(2));
}

TEST_CASE("flow polynomials of standard graphs") {
  LaurentPoly q = LaurentPoly::var_power(1);
  LaurentPoly one{Rational(1)};
  // any cycle has flow polynomial q - 1
  CHECK(flow_poly(cycle_graph(5)) == q - one);
  // bridges force zero flow
  CHECK(flow_poly(path_graph(2)).is_zero());
  // K4: (q-1)(q-2)(q-3)
  CHECK(flow_poly(complete_graph(4)) ==
        (q - one) * (q - LaurentPoly(Rational(2))) * (q - LaurentPoly(Rational(3))));
  // the triple edge has (q-1)(q-2) nowhere-zero flows: 2 at q=3
  CHECK(flow_poly(theta_graph(1, 3)).evaluate(Rational(3)) == Rational(2));
  CHECK(flow_poly(theta_graph(1, 3)).evaluate(Rational(2)) == Rational(0));
}

TEST_CASE("reliability specialization") {
  // series pair: both edges must work
  Multigraph p2 = path_graph(2);
  LaurentPoly p = LaurentPoly::var_power(1);
  CHECK(reliability_poly(p2) == p.pow(2));
  // parallel pair: 1 - (1-p)^2 = 2p - p^2
  Multigraph par(2);
  par.add_edge(0, 1);
  par.add_edge(0, 1);
  CHECK(reliability_poly(par) == p * LaurentPoly(Rational(2)) - p.pow(2));
  CHECK(reliability_at(par, {{0, Rational(1, 2)}, {1, Rational(1, 2)}}) == Rational(3, 4));
  // disconnected graphs never connect
  Multigraph d(2);
  CHECK(reliability_poly(d).is_zero());
}

TEST_CASE("low q-degree limits pick out subsets by rank") {
  Multigraph c3 = cycle_graph(3);
  QZeroPolys lim = q_zero_limits(c3);
  // connected spanning subsets of C3: the three 2-subsets and the full edge set
  MultiAffinePoly v0 = MultiAffinePoly::var(0), v1 = MultiAffinePoly::var(1),
                  v2 = MultiAffinePoly::var(2);
  CHECK(lim.c == v0 * v1 + v0 * v2 + v1 * v2 + v0 * v1 * v2);
  // forests: everything except the full cycle
  MultiAffinePoly one{Rational(1)};
  CHECK(lim.f == one + v0 + v1 + v2 + v0 * v1 + v0 * v2 + v1 * v2);
  // spanning trees: the three 2-subsets
  CHECK(lim.t == v0 * v1 + v0 * v2 + v1 * v2);
  // the three limits come from one Z up to the alternative extraction path
  QZeroPolys again = q_zero_limits_from_z(c3, graph_z(c3));
  CHECK(again.c == lim.c);
  CHECK(again.f == lim.f);
  CHECK(again.t == lim.t);
}

TEST_CASE("scaled limit keeps only maximal forests") {
  Multigraph g = theta_graph(2, 2);  // C4 drawn as two strands
  AlphaLimitReport rep = alpha_limit_check(g, Rational(1));
  CHECK(rep.ok);
  CHECK(rep.limit == q_zero_limits(g).t);
  CHECK(rep.min_positive_exponent > Rational(0));
}

TEST_CASE("bivariate form of the triangle") {
  SparsePoly t = tutte_xy(complete_graph(3));
  // T(K3) = x^2 + x + y
  SparsePoly want = SparsePoly::var(kVarX, 2) + SparsePoly::var(kVarX) + SparsePoly::var(kVarY);
  CHECK(t == want);
}

TEST_CASE("bivariate form of K4") {
  SparsePoly t = tutte_xy(complete_graph(4));
  SparsePoly want = SparsePoly::var(kVarX, 3) + SparsePoly::var(kVarX, 2, Rational(3)) +
                    SparsePoly::var(kVarX, 1, Rational(2)) + SparsePoly::var(kVarY, 3) +
                    SparsePoly::var(kVarY, 2, Rational(3)) + SparsePoly::var(kVarY, 1, Rational(2)) +
                    SparsePoly::var(kVarX) * SparsePoly::var(kVarY) * SparsePoly(Rational(4));
  CHECK(t == want);
}

TEST_CASE("bivariate form respects loops and bridges") {
  Multigraph g(2);
  g.add_edge(0, 1);  // bridge -> factor x
  g.add_edge(1, 1);  // loop -> factor y
  CHECK(tutte_xy(g) == SparsePoly::var(kVarX) * SparsePoly::var(kVarY));
}

TEST_CASE("planar duality identities on embedded fixtures") {
  for (const NamedFixture& f : standard_fixtures()) {
    if (!f.rotation) continue;
    if (f.graph.num_edges() > 10) continue;
    DualityReport rep = duality_check(f.graph, *f.rotation);
    CHECK_MESSAGE(rep.all(), f.name);
  }
}

TEST_CASE("weighted graphs carry exact weights through the solver") {
  ParsedGraph pg = parse_graph_text(
      "vertices 3\nedge 0 1 1/2\nedge 1 2 -2\nedge 2 0\n");
  MultiAffinePoly z = z_subset_expansion(pg.graph);
  // only edge 2 stays symbolic
  CHECK(z.appearing_vars() == std::set<int>{2});
  CHECK(z == z_delete_contract(pg.graph).z);
  // evaluating at v2 = 1, q = 2: finite check against brute force over colorings
  CHECK(z.evaluate(Rational(2), {{2, Rational(1)}}) ==
        potts_coloring_oracle(pg.graph, 2).evaluate(Rational(2), {{2, Rational(1)}}));
}
