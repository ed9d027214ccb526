#include <array>
#include <cmath>

#include "doctest.h"
#include "tuttekit/analysis.hpp"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

namespace {

// sparse polynomial in the reserved vars a, b from (a-exp, b-exp, coeff) rows
SparsePoly ab_poly(const std::vector<std::array<int, 3>>& rows) {
  SparsePoly out;
  for (auto& r : rows) {
    SparsePoly term(Rational(r[2]));
    if (r[0] > 0) term = term * SparsePoly::var(kVarA, r[0]);
    if (r[1] > 0) term = term * SparsePoly::var(kVarB, r[1]);
    out = out + term;
  }
  return out;
}

}  // namespace

TEST_CASE("half-plane sampling holds on spanning tree polynomials") {
  for (const Multigraph& g : {cycle_graph(3), complete_graph(4)}) {
    MultiAffinePoly t = q_zero_limits(g).t;
    PropertyReport rep = hpp_sample_check(t, 60, 7);
    CHECK(rep.verdict == Verdict::HoldsOnSamples);
    CHECK(rep.samples == 60);
    PropertyReport comp = hpp_sample_check(t, 60, 7, true);
    CHECK(comp.verdict == Verdict::HoldsOnSamples);
  }
}

TEST_CASE("half-plane sampling flags the zero polynomial") {
  PropertyReport rep = hpp_sample_check(MultiAffinePoly{}, 10, 1);
  CHECK(rep.verdict == Verdict::Falsified);
}

TEST_CASE("float descent finds a right half-plane zero when one exists") {
  // v0 - 1 vanishes at v0 = 1, inside the open right half-plane
  MultiAffinePoly p = MultiAffinePoly::var(0) - MultiAffinePoly(Rational(1));
  PropertyReport rep = hpp_float_falsifier(p, 10, 3);
  CHECK(rep.verdict == Verdict::Falsified);
  CHECK(rep.detail.find("exact zero") != std::string::npos);
}

TEST_CASE("float descent stays inconclusive on a zero-free polynomial") {
  MultiAffinePoly p = MultiAffinePoly::var(0) + MultiAffinePoly::var(1) +
                      MultiAffinePoly(Rational(1));
  PropertyReport rep = hpp_float_falsifier(p, 6, 3);
  CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("same phase detection is exact") {
  MultiAffinePoly good = MultiAffinePoly::var(0) + MultiAffinePoly::var(1);
  CHECK(same_phase_check(good).verdict == Verdict::ProvenExact);
  MultiAffinePoly negated = -good;
  CHECK(same_phase_check(negated).verdict == Verdict::ProvenExact);
  MultiAffinePoly mixed = MultiAffinePoly::var(0) - MultiAffinePoly::var(1);
  CHECK(same_phase_check(mixed).verdict == Verdict::Falsified);
}

TEST_CASE("support family check distinguishes matroids from impostors") {
  MultiAffinePoly bases = q_zero_limits(cycle_graph(3)).t;
  CHECK(support_matroid_check(bases).verdict == Verdict::ProvenExact);
  MultiAffinePoly no_exchange =
      MultiAffinePoly::var(0) * MultiAffinePoly::var(1) +
      MultiAffinePoly::var(2) * MultiAffinePoly::var(3);
  PropertyReport rep = support_matroid_check(no_exchange);
  CHECK(rep.verdict == Verdict::Falsified);
  CHECK(!rep.witness.empty());
  MultiAffinePoly inhomogeneous = MultiAffinePoly::var(0) +
                                  MultiAffinePoly::var(1) * MultiAffinePoly::var(2);
  CHECK_THROWS_AS(support_matroid_check(inhomogeneous), std::invalid_argument);
}

TEST_CASE("rayleigh difference of the triangle is a perfect square") {
  RayleighResult r = rayleigh_check_graph(cycle_graph(3), 0, 1, 10, 1);
  CHECK(r.report.verdict == Verdict::ProvenExact);
  CHECK(r.difference == SparsePoly::var(2) * SparsePoly::var(2));
}

TEST_CASE("rayleigh holds exactly on small standard graphs") {
  for (const Multigraph& g : {complete_graph(4), theta_graph(2, 2)}) {
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i)
      for (size_t j = i + 1; j < es.size(); ++j) {
        RayleighResult r = rayleigh_check_graph(g, es[i].id, es[j].id, 25, 5);
        CHECK(r.report.verdict != Verdict::Falsified);
      }
  }
}

TEST_CASE("rayleigh on the uniform matroid") {
  RayleighResult r = rayleigh_check_matroid(RankOracle::uniform(2, 3), 0, 1, 10, 1);
  CHECK(r.report.verdict == Verdict::ProvenExact);
  CHECK(r.difference == SparsePoly::var(2) * SparsePoly::var(2));
}

TEST_CASE("rayleigh validates its edge arguments") {
  CHECK_THROWS_AS(rayleigh_check_graph(cycle_graph(3), 0, 0, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(rayleigh_check_graph(cycle_graph(3), 0, 9, 5, 1), std::invalid_argument);
}

TEST_CASE("reliability-domain sampling holds on series-parallel fixtures") {
  for (const NamedFixture& f : series_parallel_fixtures()) {
    PropertyReport rep = brown_colbourn_sample(f.graph, 50, 11);
    CHECK_MESSAGE(rep.verdict == Verdict::HoldsOnSamples, f.name);
  }
}

TEST_CASE("reliability-domain sampling rejects loops and disconnection") {
  Multigraph loopy(2);
  loopy.add_edge(0, 1);
  loopy.add_edge(1, 1);
  CHECK_THROWS_AS(brown_colbourn_sample(loopy, 5, 1), std::invalid_argument);
  Multigraph disc(3);
  disc.add_edge(0, 1);
  CHECK_THROWS_AS(brown_colbourn_sample(disc, 5, 1), std::invalid_argument);
}

TEST_CASE("bivariate reliability polynomials of the five marked graphs") {
  CHECK(k4_bivariate_poly('a') ==
        ab_poly({{0, 3, 8}, {0, 4, 5}, {0, 5, 1},
                 {1, 2, 8}, {1, 3, 10}, {1, 4, 5}, {1, 5, 1}}));
  CHECK(k4_bivariate_poly('b') ==
        ab_poly({{0, 3, 4}, {0, 4, 1},
                 {1, 2, 8}, {1, 3, 8}, {1, 4, 2},
                 {2, 1, 4}, {2, 2, 6}, {2, 3, 4}, {2, 4, 1}}));
  CHECK(k4_bivariate_poly('c') ==
        ab_poly({{0, 3, 3}, {0, 4, 1},
                 {1, 2, 10}, {1, 3, 8}, {1, 4, 2},
                 {2, 1, 3}, {2, 2, 6}, {2, 3, 4}, {2, 4, 1}}));
  CHECK(k4_bivariate_poly('d') ==
        ab_poly({{1, 2, 9}, {1, 3, 3},
                 {2, 1, 6}, {2, 2, 9}, {2, 3, 3},
                 {3, 0, 1}, {3, 1, 3}, {3, 2, 3}, {3, 3, 1}}));
  CHECK(k4_bivariate_poly('e') ==
        ab_poly({{0, 3, 1},
                 {1, 2, 7}, {1, 3, 3},
                 {2, 1, 7}, {2, 2, 9}, {2, 3, 3},
                 {3, 0, 1}, {3, 1, 3}, {3, 2, 3}, {3, 3, 1}}));
  auto all = k4_bivariate_polys();
  for (int i = 0; i < 5; ++i)
    CHECK(all[static_cast<size_t>(i)] == k4_bivariate_poly(static_cast<char>('a' + i)));
}

TEST_CASE("marked graphs match their polynomials through the solver") {
  for (char which : {'a', 'b', 'c', 'd', 'e'}) {
    Multigraph g = k4_case_graph(which);
    MultiAffinePoly c = q_zero_limits(g).c;
    // bind the a-edges to kVarA and b-edges to kVarB and compare
    SparsePoly direct;
    uint32_t amask = k4_case_edge_mask(which);
    for (auto& [mask, coeff] : c.terms()) {
      SparsePoly term(coeff.constant_value());
      int abits = 0, bbits = 0;
      for (int e = 0; e < 6; ++e)
        if (mask & (1u << e)) ((amask >> e) & 1u ? abits : bbits) += 1;
      if (abits) term = term * SparsePoly::var(kVarA, abits);
      if (bbits) term = term * SparsePoly::var(kVarB, bbits);
      direct = direct + term;
    }
    CHECK(direct == k4_bivariate_poly(which));
  }
}

TEST_CASE("boundary root trace crosses into the disc for the two hard cases") {
  std::vector<double> thetas;
  for (int i = 1; i <= 60; ++i) thetas.push_back(0.5 * i / 60);
  for (char which : {'b', 'd'}) {
    BcTraceResult r = bc_boundary_root_trace(which, thetas);
    CHECK(r.report.verdict == Verdict::Falsified);
    CHECK(r.min_abs_1pa < 1.0 - 1e-6);
    CHECK(r.path.size() == thetas.size());
    CHECK(r.theta_at_min > 0.0);
    CHECK(r.theta_at_min <= 0.5);
  }
}

TEST_CASE("matroid reliability-domain sampling") {
  PropertyReport rep = bc_matroid_check(RankOracle::uniform(2, 4), 40, 3);
  CHECK(rep.verdict == Verdict::HoldsOnSamples);
  // loops are rejected
  Multigraph loopy(2);
  loopy.add_edge(0, 1);
  loopy.add_edge(0, 0);
  CHECK_THROWS_AS(bc_matroid_check(RankOracle::graphic(loopy), 5, 1),
                  std::invalid_argument);
}

TEST_CASE("polydisc descent finds the known non-series-parallel zero") {
  PropertyReport rep = bc_polydisc_falsifier(k4_case_graph('b'), 40, 1);
  CHECK(rep.verdict == Verdict::Falsified);
  CHECK(rep.witness.find("a =") != std::string::npos);
  CHECK(rep.witness.find("b =") != std::string::npos);
}

TEST_CASE("polydisc descent stays inconclusive on series-parallel graphs") {
  PropertyReport rep = bc_polydisc_falsifier(theta_graph(2, 3), 8, 1);
  CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("vertex-weight polynomial of an edge") {
  Multigraph p2(2);
  p2.add_edge(0, 1);
  MultiAffinePoly ly = lee_yang_poly(p2, VertexWeightScheme::LeeYang);
  MultiAffinePoly want = MultiAffinePoly(Rational(1)) +
                         MultiAffinePoly::var(0) * MultiAffinePoly::var(vertex_var(0)) *
                             MultiAffinePoly::var(vertex_var(1));
  CHECK(ly == want);
  CHECK(lee_yang_poly(p2, VertexWeightScheme::HeilmannLieb) == want);
}

TEST_CASE("the two vertex-weight schemes diverge once degrees exceed one") {
  Multigraph p = path_graph(2);
  MultiAffinePoly ly = lee_yang_poly(p, VertexWeightScheme::LeeYang);
  MultiAffinePoly hl = lee_yang_poly(p, VertexWeightScheme::HeilmannLieb);
  CHECK(ly != hl);
  // the subset {both edges} keeps vertex 1 even: no t_1 factor in the LY term
  LaurentPoly both = ly.coeff_of({0, 1, vertex_var(0), vertex_var(2)});
  CHECK(both == LaurentPoly(Rational(1)));
  // HL kills any subset with a degree-2 vertex
  CHECK(hl.coeff_of({0, 1, vertex_var(0), vertex_var(2)}).is_zero());
}

TEST_CASE("vertex-weight sampling holds on small graphs") {
  for (VertexWeightScheme s : {VertexWeightScheme::LeeYang, VertexWeightScheme::HeilmannLieb}) {
    PropertyReport rep = lee_yang_sample_check(cycle_graph(3), s, 40, 9);
    CHECK(rep.verdict == Verdict::HoldsOnSamples);
  }
}

TEST_CASE("independent set polynomial and activity disc") {
  MultiAffinePoly hc = hardcore_poly(path_graph(2));  // vertices 0-1-2
  MultiAffinePoly z0 = MultiAffinePoly::var(vertex_var(0)),
                  z1 = MultiAffinePoly::var(vertex_var(1)),
                  z2 = MultiAffinePoly::var(vertex_var(2));
  MultiAffinePoly one{Rational(1)};
  CHECK(hc == one + z0 + z1 + z2 + z0 * z2);
  CHECK(hardcore_disc_radius(2) == Rational(1, 4));
  CHECK(hardcore_disc_radius(3) == Rational(4, 27));
  CHECK_THROWS_AS(hardcore_disc_radius(1), std::invalid_argument);
  PropertyReport rep = hardcore_disc_check(cycle_graph(4), 60, 3);
  CHECK(rep.verdict == Verdict::HoldsOnSamples);
  // a single edge has max degree 1: no disc statement applies
  Multigraph tiny(2);
  tiny.add_edge(0, 1);
  CHECK_THROWS_AS(hardcore_disc_check(tiny, 5, 1), std::invalid_argument);
}

TEST_CASE("a loop forbids its vertex in every independent set") {
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 0);
  MultiAffinePoly hc = hardcore_poly(g);
  MultiAffinePoly one{Rational(1)};
  CHECK(hc == one + MultiAffinePoly::var(vertex_var(1)));
}

TEST_CASE("polymer decomposition of a triangle") {
  PolymerGas gas = polymer_gas(cycle_graph(3));
  // connected induced subgraphs with >= 2 vertices: three edges + the full triangle
  CHECK(gas.polymers.size() == 4);
  CHECK(gas.weights.size() == 4);
  CHECK(gas.singleton_factors.size() == 3);
  for (const MultiAffinePoly& f : gas.singleton_factors)
    CHECK(f == MultiAffinePoly(Rational(1)));
}

TEST_CASE("polymer representation matches the partition function") {
  std::vector<Multigraph> gs{path_graph(2), cycle_graph(3), complete_graph(4)};
  Multigraph loopy(3);
  loopy.add_edge(0, 1);
  loopy.add_edge(1, 1);
  loopy.add_edge(1, 2);
  gs.push_back(loopy);
  Multigraph disc(4);
  disc.add_edge(0, 1);
  disc.add_edge(0, 1);
  gs.push_back(disc);
  for (const Multigraph& g : gs) {
    PropertyReport rep = polymer_representation_check(g);
    CHECK(rep.verdict == Verdict::ProvenExact);
  }
}
