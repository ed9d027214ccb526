#include <algorithm>
#include <set>

#include "doctest.h"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/two_rooted.hpp"

using namespace tuttekit;

namespace {

MultiAffinePoly recompose(const TwoRootedDecomposition& d) {
  return d.a.scaled(LaurentPoly::var_power(2)) + d.b.scaled(LaurentPoly::var_power(1));
}

// exact check that f == num/den as rational functions, on a spread of points
void check_fraction_equals(const PolyFraction& f, const MultiAffinePoly& num,
                           const MultiAffinePoly& den) {
  std::set<int> vars;
  for (const MultiAffinePoly* p : {&f.num, &f.den, &num, &den})
    for (int v : p->appearing_vars()) vars.insert(v);
  for (Rational q : {Rational(5), Rational(-3), Rational(7, 2)}) {
    std::map<int, Rational> pt;
    Rational x(2);
    for (int v : vars) {
      pt[v] = x + q / 10;
      x += Rational(3, 2);
    }
    Rational lhs_den = f.den.evaluate(q, pt), rhs_den = den.evaluate(q, pt);
    REQUIRE(lhs_den != Rational(0));
    REQUIRE(rhs_den != Rational(0));
    CHECK(f.num.evaluate(q, pt) * rhs_den == num.evaluate(q, pt) * lhs_den);
  }
}

}  // namespace

TEST_CASE("decomposition reassembles the partition function") {
  std::vector<std::pair<Multigraph, std::pair<int, int>>> cases;
  cases.push_back({path_graph(3), {0, 3}});
  cases.push_back({cycle_graph(4), {0, 2}});
  cases.push_back({complete_graph(4), {1, 3}});
  cases.push_back({theta_graph(2, 3), {0, 1}});
  for (auto& [g, roots] : cases) {
    TwoRootedDecomposition d = decompose_two_rooted(g, roots.first, roots.second);
    CHECK(recompose(d) == graph_z(g));
  }
}

TEST_CASE("single edge decomposes into its two subsets") {
  Multigraph g(2);
  g.add_edge(0, 1);
  TwoRootedDecomposition d = decompose_two_rooted(g, 0, 1);
  CHECK(d.a == MultiAffinePoly(Rational(1)));
  CHECK(d.b == MultiAffinePoly::var(0));
}

TEST_CASE("series rule for the effective coupling") {
  // v_eff of a two-edge path between its endpoints is v0 v1 / (q + v0 + v1)
  Multigraph p = path_graph(2);
  PolyFraction ve = effective_coupling(p, 0, 2);
  MultiAffinePoly v0 = MultiAffinePoly::var(0), v1 = MultiAffinePoly::var(1);
  MultiAffinePoly q{LaurentPoly::var_power(1)};
  check_fraction_equals(ve, v0 * v1, q + v0 + v1);
}

TEST_CASE("parallel rule for the effective coupling") {
  // two parallel edges behave like one with (1+v0)(1+v1) - 1
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  PolyFraction ve = effective_coupling(g, 0, 1);
  MultiAffinePoly v0 = MultiAffinePoly::var(0), v1 = MultiAffinePoly::var(1);
  MultiAffinePoly one{Rational(1)};
  check_fraction_equals(ve, (one + v0) * (one + v1) - one, one);
}

TEST_CASE("transmissivity is the coupling divided by q plus itself") {
  Multigraph g = cycle_graph(4);
  TwoRootedDecomposition d = decompose_two_rooted(g, 0, 2);
  PolyFraction t = transmissivity(g, 0, 2);
  check_fraction_equals(t, d.b, d.a.scaled(LaurentPoly::var_power(1)) + d.b);
}

TEST_CASE("effective substitution preserves the partition function up to A") {
  // replacing the 0-2 edge of a triangle by a two-edge path multiplies Z by A
  // of the path piece and leaves the decomposition B/A in place of v
  Multigraph tri = cycle_graph(3);
  TwoRootedPiece piece;
  piece.h = path_graph(2);
  piece.x = 0;
  piece.y = 2;
  std::map<int, std::map<int, int>> edge_map;
  Multigraph glued = substitute_edges(tri, {{2, piece}}, &edge_map);
  CHECK(glued.num_vertices() == 4);  // triangle + one interior path vertex
  CHECK(glued.num_edges() == 4);
  REQUIRE(edge_map.count(2) == 1);
  CHECK(edge_map[2].size() == 2);

  // Z_glued = A_piece * Z_tri with v2 -> B/A of the piece
  TwoRootedDecomposition pd = decompose_two_rooted(piece.h, piece.x, piece.y);
  MultiAffinePoly z_tri = graph_z(tri);
  // rename piece variables to the glued ids before comparing
  std::map<int, LaurentPoly> rename;
  MultiAffinePoly a = pd.a, b = pd.b;
  // piece edges 0,1 map to fresh glued ids
  std::vector<int> glued_ids;
  for (auto& [pe, ge] : edge_map[2]) glued_ids.push_back(ge);
  // rebuild A and B over glued ids by substitution v_pe -> v_ge
  // (A and B are multiaffine, so this is a relabel)
  MultiAffinePoly a2(std::vector<int>(glued_ids.begin(), glued_ids.end()));
  MultiAffinePoly b2 = a2;
  for (auto& [mask, coeff] : a.terms()) {
    uint32_t m2 = 0;
    int bit = 0;
    for (int pe : a.universe()) {
      if (mask & (1u << bit)) {
        int ge = edge_map[2][pe];
        auto pos = std::lower_bound(a2.universe().begin(), a2.universe().end(), ge);
        m2 |= 1u << (pos - a2.universe().begin());
      }
      ++bit;
    }
    a2.add_term(m2, coeff);
  }
  for (auto& [mask, coeff] : b.terms()) {
    uint32_t m2 = 0;
    int bit = 0;
    for (int pe : b.universe()) {
      if (mask & (1u << bit)) {
        int ge = edge_map[2][pe];
        auto pos = std::lower_bound(b2.universe().begin(), b2.universe().end(), ge);
        m2 |= 1u << (pos - b2.universe().begin());
      }
      ++bit;
    }
    b2.add_term(m2, coeff);
  }
  MultiAffinePoly expected = z_tri.substitute_affine_fraction(2, b2, a2);
  CHECK(graph_z(glued) == expected);
}

TEST_CASE("theta closed form matches direct computation") {
  for (int strands = 2; strands <= 3; ++strands)
    for (int len = 1; len <= 3; ++len) {
      Rational v(-2, 3);
      Multigraph th = theta_graph(len, strands);
      std::map<int, LaurentPoly> bind;
      for (const Edge& e : th.edges()) bind[e.id] = LaurentPoly(v);
      LaurentPoly direct = graph_z(th).substitute_partial(bind).q_poly();
      CHECK(direct == theta_z_closed_form(strands, len, v));
    }
}

TEST_CASE("distance between roots") {
  CHECK(unweighted_distance(path_graph(4), 0, 4) == 4);
  CHECK(unweighted_distance(cycle_graph(6), 0, 3) == 3);
  CHECK(unweighted_distance(theta_graph(2, 3), 0, 1) == 2);
  Multigraph d(3);
  d.add_edge(0, 1);
  CHECK(unweighted_distance(d, 0, 2) == -1);
}

TEST_CASE("q-degree bounds of the decomposition") {
  // deg_q A = n - 2 and deg_q B <= n - 1 - dist(x, y)
  std::vector<std::pair<Multigraph, std::pair<int, int>>> cases;
  cases.push_back({cycle_graph(5), {0, 2}});
  cases.push_back({complete_graph(4), {0, 3}});
  cases.push_back({theta_graph(3, 2), {0, 1}});
  cases.push_back({path_graph(4), {0, 4}});
  for (auto& [g, roots] : cases) {
    int n = g.num_vertices();
    int dist = unweighted_distance(g, roots.first, roots.second);
    TwoRootedDecomposition d = decompose_two_rooted(g, roots.first, roots.second);
    CHECK(d.a.degree_q() == n - 2);
    CHECK(d.b.degree_q() <= n - 1 - dist);
  }
}
