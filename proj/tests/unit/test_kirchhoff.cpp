#include <map>
#include <set>

#include "doctest.h"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/grassmann.hpp"
#include "tuttekit/kirchhoff.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

Rational count_at_ones(const MultiAffinePoly& p) {
  std::map<int, Rational> ones;
  for (int v : p.appearing_vars()) ones[v] = Rational(1);
  return p.evaluate(Rational(1), ones);
}

void check_fraction_equals(const PolyFraction& f, const MultiAffinePoly& num,
                           const MultiAffinePoly& den) {
  std::set<int> vars;
  for (const MultiAffinePoly* p : {&f.num, &f.den, &num, &den})
    for (int v : p->appearing_vars()) vars.insert(v);
  for (Rational q : {Rational(2), Rational(5)}) {
    std::map<int, Rational> pt;
    Rational x(2);
    for (int v : vars) {
      pt[v] = x + q / 7;
      x += Rational(5, 3);
    }
    Rational lhs_den = f.den.evaluate(q, pt), rhs_den = den.evaluate(q, pt);
    REQUIRE(lhs_den != Rational(0));
    REQUIRE(rhs_den != Rational(0));
    CHECK(f.num.evaluate(q, pt) * rhs_den == num.evaluate(q, pt) * lhs_den);
  }
}

}  // namespace

TEST_CASE("laplacian is the incidence outer product") {
  Multigraph g = theta_graph(2, 2);
  auto b = directed_incidence(g);
  Matrix<MultiAffinePoly> l = weighted_laplacian(g);
  int n = g.num_vertices();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiAffinePoly want;
      for (const Edge& e : g.edges()) {
        int bi = b[static_cast<size_t>(i)][static_cast<size_t>(e.id)];
        int bj = b[static_cast<size_t>(j)][static_cast<size_t>(e.id)];
        if (bi * bj != 0)
          want += MultiAffinePoly::var(e.id, LaurentPoly(Rational(bi * bj)));
      }
      CHECK(l[static_cast<size_t>(i)][static_cast<size_t>(j)] == want);
    }
}

TEST_CASE("loops never touch the laplacian") {
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  Matrix<MultiAffinePoly> l = weighted_laplacian(g);
  CHECK(l[1][1] == MultiAffinePoly::var(0));
  auto b = directed_incidence(g);
  CHECK(b[0][1] == 0);
  CHECK(b[1][1] == 0);
}

TEST_CASE("spanning tree polynomial is root independent") {
  for (const Multigraph& g : {complete_graph(4), wheel_graph(4), theta_graph(2, 3)}) {
    MultiAffinePoly at0 = matrix_tree(g, 0);
    for (int r = 1; r < g.num_vertices(); ++r) CHECK(matrix_tree(g, r) == at0);
    CHECK(at0 == q_zero_limits(g).t);
  }
}

TEST_CASE("spanning tree counts of complete graphs") {
  CHECK(count_at_ones(matrix_tree(complete_graph(4), 0)) == Rational(16));
  CHECK(count_at_ones(matrix_tree(complete_graph(5), 2)) == Rational(125));
  CHECK(count_at_ones(matrix_tree(complete_graph(6), 5)) == Rational(1296));
}

TEST_CASE("disconnected graphs have no spanning tree") {
  Multigraph g(3);
  g.add_edge(0, 1);
  CHECK(matrix_tree(g, 0).is_zero());
}

TEST_CASE("weighted tree polynomial respects exact weights") {
  Multigraph g(3);
  g.add_edge(0, 1, EdgeWeight::exact(Rational(2)));
  g.add_edge(1, 2, EdgeWeight::exact(Rational(1, 3)));
  g.add_edge(2, 0);  // symbolic v2
  // trees: {0,1} -> 2/3, {0,2} -> 2 v2, {1,2} -> v2/3
  MultiAffinePoly want = MultiAffinePoly(Rational(2, 3)) +
                         MultiAffinePoly::var(2, LaurentPoly(Rational(2))) +
                         MultiAffinePoly::var(2, LaurentPoly(Rational(1, 3)));
  CHECK(matrix_tree(g, 1) == want);
}

TEST_CASE("rooted forest minors match enumeration") {
  std::vector<Multigraph> gs{complete_graph(4), cycle_graph(5), theta_graph(2, 2)};
  for (const Multigraph& g : gs) {
    std::vector<int> roots{0, 2};
    CHECK(rooted_forest_minor(g, roots) == rooted_forest_enumeration(g, roots));
    std::vector<int> three{0, 1, 2};
    CHECK(rooted_forest_minor(g, three) == rooted_forest_enumeration(g, three));
  }
}

TEST_CASE("single-root forest minor is the tree polynomial") {
  Multigraph g = wheel_graph(4);
  CHECK(rooted_forest_minor(g, {3}) == matrix_tree(g, 3));
}

TEST_CASE("conductance composes in series and parallel") {
  // series: two edges 0-1-2, Y = v0 v1 / (v0 + v1)
  Multigraph s = path_graph(2);
  MultiAffinePoly v0 = MultiAffinePoly::var(0), v1 = MultiAffinePoly::var(1);
  check_fraction_equals(effective_conductance(s, 0, 2), v0 * v1, v0 + v1);
  // parallel: Y = v0 + v1
  Multigraph p(2);
  p.add_edge(0, 1);
  p.add_edge(0, 1);
  check_fraction_equals(effective_conductance(p, 0, 1), v0 + v1, MultiAffinePoly(Rational(1)));
  // triangle between adjacent vertices: v0 + v1 v2 / (v1 + v2)
  Multigraph c3 = cycle_graph(3);
  MultiAffinePoly v2 = MultiAffinePoly::var(2);
  check_fraction_equals(effective_conductance(c3, 0, 1), v0 * (v1 + v2) + v1 * v2, v1 + v2);
}

TEST_CASE("grassmann generators anticommute") {
  GrassmannElement psi0 = GrassmannElement::psi(2, 0);
  GrassmannElement psi1 = GrassmannElement::psi(2, 1);
  CHECK((psi0 * psi0).is_zero());
  CHECK((psi0 * psi1 + psi1 * psi0).is_zero());
  GrassmannElement bar0 = GrassmannElement::psi_bar(2, 0);
  CHECK((psi0 * bar0 + bar0 * psi0).is_zero());
  // psibar_i psi_i pairs are even and commute
  GrassmannElement n0 = bar0 * psi0;
  GrassmannElement n1 = GrassmannElement::psi_bar(2, 1) * psi1;
  CHECK(n0.is_even());
  CHECK((n0 * n1 - n1 * n0).is_zero());
}

TEST_CASE("gaussian integral over two pairs is the determinant") {
  Matrix<SparsePoly> a(2, std::vector<SparsePoly>(2));
  a[0][0] = SparsePoly::var(10);
  a[0][1] = SparsePoly::var(11);
  a[1][0] = SparsePoly::var(12);
  a[1][1] = SparsePoly::var(13);
  SparsePoly det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  CHECK(grassmann_gaussian_determinant(a) == det);
  // and by explicit exponential
  GrassmannElement body = grassmann_bilinear(a);
  CHECK(body.exp_even().integrate() == det);
}

TEST_CASE("integration extracts the top coefficient with its sign") {
  // conventions fixed by the 1-pair gaussian: integral of psibar_0 psi_0 = 1
  GrassmannElement number =
      GrassmannElement::psi_bar(1, 0) * GrassmannElement::psi(1, 0);
  CHECK(number.integrate() == SparsePoly(Rational(1)));
  GrassmannElement flipped = GrassmannElement::psi(1, 0) * GrassmannElement::psi_bar(1, 0);
  CHECK(flipped.integrate() == SparsePoly(Rational(-1)));
  CHECK(GrassmannElement::scalar(1, SparsePoly(Rational(1))).integrate().terms().empty());
}

TEST_CASE("forest integral equals forest enumeration on small graphs") {
  for (const Multigraph& g :
       {path_graph(2), cycle_graph(3), complete_graph(4), theta_graph(2, 2)}) {
    CHECK(grassmann_forest_lhs(g) == forest_poly_enumeration(g));
    CHECK(grassmann_forest_lhs_edge_form(g) == forest_poly_enumeration(g));
  }
  Multigraph with_extras(3);
  with_extras.add_edge(0, 1);
  with_extras.add_edge(0, 1);
  with_extras.add_edge(1, 2);
  with_extras.add_edge(2, 2);  // loops contribute no forest edge
  CHECK(grassmann_forest_lhs(with_extras) == forest_poly_enumeration(with_extras));
}

TEST_CASE("forest enumeration counts components with t powers") {
  // P2: forests are {}, {e}; t^2 + t v0 after weighting
  Multigraph p(2);
  int e = p.add_edge(0, 1);
  SparsePoly want = SparsePoly::var(kVarT, 2) + SparsePoly::var(kVarT) * SparsePoly::var(e);
  CHECK(forest_poly_enumeration(p) == want);
}

TEST_CASE("marked integrals match the constrained subgraph sum") {
  Multigraph c3 = cycle_graph(3);
  std::vector<SubgraphMark> marks;
  // mark every single vertex with t
  for (int v = 0; v < 3; ++v) {
    SubgraphMark m;
    m.vertices = 1u << v;
    m.edges = 0;
    m.t = SparsePoly::var(kVarT);
    marks.push_back(m);
  }
  // plus the full triangle with its own mark
  SubgraphMark tri;
  tri.vertices = 0b111;
  tri.edges = 0b111;
  tri.t = SparsePoly::var(kVarU);
  marks.push_back(tri);
  CHECK(grassmann_marked_integral(c3, marks) == marked_subgraph_sum(c3, marks));
}
