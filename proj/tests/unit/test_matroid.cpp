#include <fstream>

#include "doctest.h"
#include "tuttekit/fixtures.hpp"
#include "tuttekit/matroid.hpp"
#include "tuttekit/matroid_io.hpp"
#include "tuttekit/tutte.hpp"

using namespace tuttekit;

TEST_CASE("uniform matroid ranks") {
  RankOracle u = RankOracle::uniform(2, 4);
  CHECK(u.size() == 4);
  CHECK(u.full_rank() == 2);
  CHECK(u.rank(0b0001) == 1);
  CHECK(u.rank(0b0111) == 2);
  CHECK_FALSE(u.is_loop(0));
  CHECK_FALSE(u.is_coloop(0));
  // U_{0,2}: everything is a loop; U_{2,2}: everything is a coloop
  CHECK(RankOracle::uniform(0, 2).is_loop(0));
  CHECK(RankOracle::uniform(2, 2).is_coloop(1));
}

TEST_CASE("graphic matroid of a triangle matches the uniform one") {
  RankOracle g = RankOracle::graphic(cycle_graph(3));
  RankOracle u = RankOracle::uniform(2, 3);
  for (uint32_t m = 0; m <= g.all_mask(); ++m) CHECK(g.rank(m) == u.rank(m));
  CHECK(z_tilde_matroid(g) == z_tilde_matroid(u));
}

TEST_CASE("graphic matroid keeps edge labels through views") {
  Multigraph k4 = complete_graph(4);
  RankOracle m = RankOracle::graphic(k4);
  CHECK(m.labels() == std::vector<int>{0, 1, 2, 3, 4, 5});
  RankOracle del = m.deleted(3);
  CHECK(del.size() == 5);
  CHECK(del.position_of(5) == 4);
  RankOracle con = m.contracted(0);
  CHECK(con.full_rank() == m.full_rank() - 1);
  // a loop appears when a parallel edge is contracted
  Multigraph par(2);
  par.add_edge(0, 1);
  par.add_edge(0, 1);
  RankOracle pm = RankOracle::graphic(par).contracted(0);
  CHECK(pm.is_loop(1));
}

TEST_CASE("dual ranks satisfy the complement formula") {
  RankOracle m = RankOracle::graphic(complete_graph(4));
  RankOracle d = m.dual();
  for (uint32_t a = 0; a <= m.all_mask(); ++a) {
    int comp = static_cast<int>(__builtin_popcount(a));
    CHECK(d.rank(a) == comp + m.rank(m.all_mask() & ~a) - m.full_rank());
  }
  CHECK(d.dual().rank(0b010101) == m.rank(0b010101));
}

TEST_CASE("linear matroids over the rationals and GF(2)") {
  // four points on a line in the plane: U_{2,4}
  Matrix<Rational> cols{{Rational(1), Rational(0)},
                        {Rational(0), Rational(1)},
                        {Rational(1), Rational(1)},
                        {Rational(1), Rational(2)}};
  RankOracle lin = RankOracle::linear_rational(cols);
  RankOracle u = RankOracle::uniform(2, 4);
  for (uint32_t m = 0; m <= lin.all_mask(); ++m) CHECK(lin.rank(m) == u.rank(m));

  // the Fano plane needs characteristic 2: over GF(2) all 7 columns, rank 3
  std::vector<uint64_t> fano{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  RankOracle f7 = RankOracle::linear_gf2(fano, 3);
  CHECK(f7.full_rank() == 3);
  // every line {a,b,a^b} has rank 2
  CHECK(f7.rank((1u << 0) | (1u << 1) | (1u << 3)) == 2);
  CHECK(f7.rank((1u << 0) | (1u << 1) | (1u << 2)) == 3);
}

TEST_CASE("uniform chromatic evaluations follow the closed form") {
  for (int n = 2; n <= 6; ++n) {
    RankOracle u = RankOracle::uniform(2, n);
    LaurentPoly got = matroid_chromatic(u);
    LaurentPoly q = LaurentPoly::var_power(1);
    LaurentPoly want = (q - LaurentPoly(Rational(1))) *
                       (q - LaurentPoly(Rational(n - 1))) *
                       LaurentPoly::var_power(-2);
    CHECK(got == want);
  }
}

TEST_CASE("graphic z-tilde equals the graph partition function") {
  for (const Multigraph& g : {cycle_graph(4), complete_graph(4), theta_graph(2, 2)}) {
    MultiAffinePoly scaled = graph_z(g).scaled(LaurentPoly::var_power(-g.num_vertices()));
    CHECK(z_tilde_matroid(RankOracle::graphic(g)) == scaled);
  }
  // loops and parallels are invisible to vertex counts but not to Z
  Multigraph loopy(2);
  loopy.add_edge(0, 1);
  loopy.add_edge(1, 1);
  CHECK(z_tilde_matroid(RankOracle::graphic(loopy)) ==
        graph_z(loopy).scaled(LaurentPoly::var_power(-2)));
}

TEST_CASE("duality and deletion-contraction identities") {
  CHECK(matroid_duality_identity(RankOracle::uniform(2, 5)));
  CHECK(matroid_duality_identity(RankOracle::graphic(complete_graph(4))));
  std::vector<uint64_t> fano{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  CHECK(matroid_duality_identity(RankOracle::linear_gf2(fano, 3)));

  RankOracle m = RankOracle::graphic(wheel_graph(4));
  for (int label : {0, 3, 6}) CHECK(matroid_delcon_identity(m, label));
  // with a loop present (contract a parallel pair first)
  Multigraph par(2);
  par.add_edge(0, 1);
  par.add_edge(0, 1);
  RankOracle loopy = RankOracle::graphic(par).contracted(0);
  CHECK(matroid_delcon_identity(loopy, 1));
}

namespace {

// z~_M == prefactor * z~_{reduced with fraction weights}, checked at exact points
void check_reduction(const RankOracle& m, const MatroidReduction& red) {
  PolyFraction z_red = z_tilde_fraction_weights(red.reduced, red.weights);
  MultiAffinePoly z_full = z_tilde_matroid(m);
  for (Rational q : {Rational(3), Rational(-2), Rational(7, 3)}) {
    std::map<int, Rational> pt;
    Rational x(2);
    for (int lab : m.labels()) {
      pt[lab] = x;
      x += Rational(3, 2);
    }
    Rational den = z_red.den.evaluate(q, pt) * red.prefactor.den.evaluate(q, pt);
    REQUIRE(den != Rational(0));
    Rational lhs = z_full.evaluate(q, pt) * den;
    Rational rhs = z_red.num.evaluate(q, pt) * red.prefactor.num.evaluate(q, pt);
    CHECK(lhs == rhs);
  }
}

}  // namespace

TEST_CASE("two-element reductions preserve the weighted expansion") {
  // parallel pair in U_{1,3}: elements 0 and 1 form a circuit
  RankOracle u13 = RankOracle::uniform(1, 3);
  MatroidReduction red = matroid_series_parallel(u13, 0, 1);
  CHECK_FALSE(red.series);
  CHECK(red.reduced.size() == 2);
  CHECK(red.merged_label == 0);
  check_reduction(u13, red);

  // series pair: adjacent edges of a path's graphic matroid (both coloops)
  RankOracle path = RankOracle::graphic(path_graph(2));
  MatroidReduction sred = matroid_series_parallel(path, 0, 1);
  CHECK(sred.series);
  CHECK(sred.reduced.size() == 1);
  check_reduction(path, sred);

  // series pair inside a cycle (cocircuit of size two in C3 is any edge pair)
  RankOracle c3 = RankOracle::graphic(cycle_graph(3));
  MatroidReduction cred = matroid_series_parallel(c3, 0, 2);
  CHECK(cred.series);
  check_reduction(c3, cred);

  // rejects pairs that are neither
  RankOracle k4 = RankOracle::graphic(complete_graph(4));
  CHECK_THROWS_AS(matroid_series_parallel(k4, 0, 5), std::invalid_argument);
}

TEST_CASE("q to zero limits of a uniform matroid") {
  RankOracle u = RankOracle::uniform(2, 3);
  MatroidQZero lim = q_zero_matroid_limits(u);
  MultiAffinePoly v0 = MultiAffinePoly::var(0), v1 = MultiAffinePoly::var(1),
                  v2 = MultiAffinePoly::var(2);
  MultiAffinePoly pairs = v0 * v1 + v0 * v2 + v1 * v2;
  CHECK(lim.b == pairs);
  CHECK(lim.s == pairs + v0 * v1 * v2);
  MultiAffinePoly one{Rational(1)};
  CHECK(lim.i == one + v0 + v1 + v2 + pairs);
  CHECK(matroid_basis_poly(u) == pairs);
}

TEST_CASE("basis families recognize exchange failures") {
  SetSystem good;
  good.ground_size = 4;
  good.sets = {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100};
  CHECK(is_matroid_basis_family(good));
  SetSystem bad;
  bad.ground_size = 4;
  bad.sets = {0b0011, 0b1100};  // exchange from {0,1} toward {2,3} fails
  CHECK_FALSE(is_matroid_basis_family(bad));
  SetSystem uneven;
  uneven.ground_size = 3;
  uneven.sets = {0b001, 0b011};
  CHECK_FALSE(is_matroid_basis_family(uneven));
  CHECK_FALSE(is_matroid_basis_family(SetSystem{}));
}

TEST_CASE("rank axioms hold for the oracles and fail for a forgery") {
  CHECK(check_rank_axioms(RankOracle::uniform(2, 5)).all());
  CHECK(check_rank_axioms(RankOracle::graphic(complete_graph(4))).all());
  std::vector<uint64_t> fano{0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111};
  CHECK(check_rank_axioms(RankOracle::linear_gf2(fano, 3)).all());
  // a non-submodular table: r({0}) = r({1}) = 1, r({0,1}) = 2, r({}) = 0 is fine,
  // but r jumping by 2 breaks the unit-increase axiom
  RankOracle forged = RankOracle::from_table(2, {0, 1, 1, 3});
  CHECK_FALSE(check_rank_axioms(forged).all());
}

TEST_CASE("bases reconstruct the rank function") {
  RankOracle m = RankOracle::graphic(cycle_graph(4));
  std::vector<uint32_t> bases;
  MatroidQZero lim = q_zero_matroid_limits(m);
  // read bases off the basis polynomial's support
  for (auto& [mask, coeff] : lim.b.terms()) bases.push_back(mask);
  RankOracle back = RankOracle::from_bases(m.size(), bases);
  for (uint32_t a = 0; a <= m.all_mask(); ++a) CHECK(back.rank(a) == m.rank(a));
}

TEST_CASE("spin sums agree with the subset expansion for gf2 columns") {
  // K4 incidence columns over GF(2) give the graphic matroid; the spin sum
  // must match the subset expansion at q = 2 and q = 4
  Multigraph k4 = complete_graph(4);
  std::vector<std::vector<int>> b;
  for (const Edge& e : k4.edges()) {
    std::vector<int> col(static_cast<size_t>(k4.num_vertices()), 0);
    col[static_cast<size_t>(e.u)] = 1;
    col[static_cast<size_t>(e.v)] = 1;
    b.push_back(col);
  }
  RankOracle m = RankOracle::graphic(k4);
  MultiAffinePoly z2 = spin_sum_z_tilde(b, {2});
  CHECK(z2 == z_tilde_matroid(m).substitute_q(Rational(2)));
  MultiAffinePoly z22 = spin_sum_z_tilde(b, {2, 2});
  CHECK(z22 == z_tilde_matroid(m).substitute_q(Rational(4)));
}

TEST_CASE("matroid text formats load and reject garbage") {
  RankOracle u = parse_matroid_text("uniform 2 4\n");
  CHECK(u.full_rank() == 2);
  CHECK(u.size() == 4);
  RankOracle f = parse_matroid_text(
      "linear gf2 3 7\n1 0 0 1 1 0 1\n0 1 0 1 0 1 1\n0 0 1 0 1 1 1\n");
  CHECK(f.full_rank() == 3);
  CHECK(check_rank_axioms(f).all());
  RankOracle bset = parse_matroid_text("bases 3\n0 1\n0 2\n1 2\n");
  CHECK(bset.full_rank() == 2);
  CHECK(matroid_basis_poly(bset) == matroid_basis_poly(RankOracle::uniform(2, 3)));
  RankOracle lin = parse_matroid_text("linear rational 2 3\n1 0 1/2\n0 1 -3\n");
  CHECK(lin.full_rank() == 2);
  CHECK_THROWS_AS(parse_matroid_text("uniform 5\n"), MatroidParseError);
  CHECK_THROWS_AS(parse_matroid_text("nonsuch 1 2\n"), MatroidParseError);
  CHECK_THROWS_AS(parse_matroid_text("bases 3\n0 5\n"), MatroidParseError);
}

TEST_CASE("graphic matroid files resolve relative graph paths") {
  std::ofstream gf("matroid_io_probe_graph.txt");
  gf << "vertices 3\nedge 0 1\nedge 1 2\nedge 2 0\n";
  gf.close();
  RankOracle m = parse_matroid_text("graphic matroid_io_probe_graph.txt\n", ".");
  CHECK(m.size() == 3);
  CHECK(m.full_rank() == 2);
  std::remove("matroid_io_probe_graph.txt");
}
