#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>

#include "tuttekit/fixtures.hpp"
#include "tuttekit/tutte.hpp"
#include "tuttekit/zeros.hpp"

using namespace tuttekit;

namespace {

double dist_to(const std::complex<double>& r, double target) {
  return std::abs(r - std::complex<double>(target, 0.0));
}

// smallest distance from r to any integer in [0, n)
double dist_to_integers(const std::complex<double>& r, int n) {
  double best = 1e300;
  for (int k = 0; k < n; ++k) best = std::min(best, dist_to(r, k));
  return best;
}

}  // namespace

TEST_CASE("complex_roots finds simple rational roots exactly enough") {
  // (q-1)(q-2)(q-3) = -6 + 11q - 6q^2 + q^3
  RootSet rs = complex_roots(std::vector<Rational>{Rational(-6), Rational(11), Rational(-6), Rational(1)});
  CHECK(rs.degree == 3);
  REQUIRE(rs.roots.size() == 3);
  std::vector<double> re;
  for (auto& r : rs.roots) {
    CHECK(std::abs(r.imag()) < 1e-12);
    re.push_back(r.real());
  }
  std::sort(re.begin(), re.end());
  CHECK(std::abs(re[0] - 1.0) < 1e-10);
  CHECK(std::abs(re[1] - 2.0) < 1e-10);
  CHECK(std::abs(re[2] - 3.0) < 1e-10);
  CHECK(rs.max_residual <= rs.tolerance);
  for (int m : rs.multiplicity) CHECK(m == 1);
  CHECK(!rs.source_hash.empty());
}

TEST_CASE("complex_roots trims trailing zero coefficients") {
  // (q-5) padded with zero high-order coefficients
  RootSet rs = complex_roots(std::vector<Rational>{Rational(-5), Rational(1), Rational(0), Rational(0)});
  CHECK(rs.degree == 1);
  REQUIRE(rs.roots.size() == 1);
  CHECK(dist_to(rs.roots[0], 5.0) < 1e-10);
}

TEST_CASE("complex_roots edge cases: constant, zero polynomial") {
  RootSet constant = complex_roots(std::vector<Rational>{Rational(7)});
  CHECK(constant.degree == 0);
  CHECK(constant.roots.empty());
  CHECK_THROWS_AS(complex_roots(std::vector<Rational>{}), std::invalid_argument);
  CHECK_THROWS_AS(complex_roots(std::vector<Rational>{Rational(0), Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(complex_roots(LaurentPoly()), std::invalid_argument);
}

TEST_CASE("complex_roots clusters a triple root when asked for a loose tolerance") {
  // (q-2)^3 = -8 + 12q - 6q^2 + q^3; multiple roots are only resolvable to
  // roughly eps^(1/3), so the clustering tolerance must cover that spread
  RootSet rs = complex_roots(
      std::vector<Rational>{Rational(-8), Rational(12), Rational(-6), Rational(1)}, 1e-6);
  CHECK(rs.degree == 3);
  REQUIRE(rs.roots.size() == 3);
  for (auto& r : rs.roots) CHECK(dist_to(r, 2.0) < 1e-4);
  REQUIRE(rs.multiplicity.size() == 3);
  for (int m : rs.multiplicity) CHECK(m == 3);
}

TEST_CASE("complex_roots on a Laurent polynomial strips the q-power prefactor") {
  // q^-2 (q-1)(q-2) has the same nonzero roots as (q-1)(q-2)
  LaurentPoly p = (LaurentPoly::var_power(1) - LaurentPoly(Rational(1))) *
                  (LaurentPoly::var_power(1) - LaurentPoly(Rational(2))) *
                  LaurentPoly::var_power(-2);
  RootSet rs = complex_roots(p);
  CHECK(rs.degree == 2);
  REQUIRE(rs.roots.size() == 2);
  std::vector<double> re{rs.roots[0].real(), rs.roots[1].real()};
  std::sort(re.begin(), re.end());
  CHECK(std::abs(re[0] - 1.0) < 1e-10);
  CHECK(std::abs(re[1] - 2.0) < 1e-10);
}

TEST_CASE("source_hash is stable for equal inputs and separates different ones") {
  std::vector<Rational> a{Rational(-6), Rational(11), Rational(-6), Rational(1)};
  std::vector<Rational> b{Rational(-6), Rational(11), Rational(-6), Rational(2)};
  CHECK(complex_roots(a).source_hash == complex_roots(a).source_hash);
  CHECK(complex_roots(a).source_hash != complex_roots(b).source_hash);
}

TEST_CASE("poly_roots_complex handles complex coefficients") {
  // (q - i)(q + 2i) = q^2 + iq + 2
  std::vector<std::complex<double>> coeffs{{2, 0}, {0, 1}, {1, 0}};
  auto roots = poly_roots_complex(coeffs);
  REQUIRE(roots.size() == 2);
  std::sort(roots.begin(), roots.end(),
            [](auto& x, auto& y) { return x.imag() < y.imag(); });
  CHECK(std::abs(roots[0] - std::complex<double>(0, -2)) < 1e-10);
  CHECK(std::abs(roots[1] - std::complex<double>(0, 1)) < 1e-10);
}

TEST_CASE("poly_roots_complex peels exact origin roots and rejects zero input") {
  auto roots = poly_roots_complex({{0, 0}, {0, 0}, {1, 0}});  // q^2
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0]) == 0.0);
  CHECK(std::abs(roots[1]) == 0.0);
  CHECK(poly_roots_complex({{5, 0}}).empty());
  CHECK_THROWS_AS(poly_roots_complex({{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("chromatic roots of complete graphs are 0..n-1") {
  for (int n : {3, 4, 5, 6}) {
    RootSet rs = chromatic_roots(complete_graph(n));
    CHECK(rs.degree == n);
    REQUIRE(static_cast<int>(rs.roots.size()) == n);
    for (auto& r : rs.roots) CHECK(dist_to_integers(r, n) < 1e-9);
    // every integer 0..n-1 is hit by some root
    for (int k = 0; k < n; ++k) {
      bool hit = false;
      for (auto& r : rs.roots)
        if (dist_to(r, k) < 1e-9) hit = true;
      CHECK(hit);
    }
    CHECK(rs.max_residual <= 1e-9);
  }
}

TEST_CASE("chromatic roots of a forest sit at 0 and 1 with matching multiplicities") {
  // two disjoint edges: P(q) = q^2 (q-1)^2
  Multigraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  RootSet rs = chromatic_roots(g, 1e-7);
  CHECK(rs.degree == 4);
  REQUIRE(rs.roots.size() == 4);
  int at0 = 0, at1 = 0;
  for (size_t i = 0; i < rs.roots.size(); ++i) {
    if (dist_to(rs.roots[i], 0.0) < 1e-6) {
      ++at0;
      CHECK(rs.multiplicity[i] == 2);
    } else {
      CHECK(dist_to(rs.roots[i], 1.0) < 1e-6);
      ++at1;
      CHECK(rs.multiplicity[i] == 2);
    }
  }
  CHECK(at0 == 2);
  CHECK(at1 == 2);
}

TEST_CASE("chromatic_roots rejects loops") {
  Multigraph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  CHECK_THROWS_AS(chromatic_roots(g), std::invalid_argument);
}

TEST_CASE("chromatic roots of C4 include the known complex pair") {
  // P_{C4}(q) = (q-1)^4 + (q-1); complex roots 3/2 +- i sqrt(3)/2
  RootSet rs = chromatic_roots(cycle_graph(4));
  CHECK(rs.degree == 4);
  bool plus = false, minus = false;
  for (auto& r : rs.roots) {
    if (std::abs(r - std::complex<double>(1.5, std::sqrt(3.0) / 2)) < 1e-9) plus = true;
    if (std::abs(r - std::complex<double>(1.5, -std::sqrt(3.0) / 2)) < 1e-9) minus = true;
  }
  CHECK(plus);
  CHECK(minus);
}

TEST_CASE("disc bound constants are pinned") {
  CHECK(kRootDiscFactor == 7.963907);
  CHECK(kDiscBoundaryTol == 1e-8);
}

TEST_CASE("zero_free_disc_check holds on small standard graphs") {
  for (auto g : {complete_graph(4), cycle_graph(5), wheel_graph(4), petersen_graph()}) {
    PropertyReport rep = zero_free_disc_check(g, 4, 11);
    CHECK(rep.property == "zero-free-discs");
    CHECK(rep.verdict == Verdict::HoldsOnSamples);
    CHECK(rep.samples >= 4);
    CHECK(rep.seed == 11);
    CHECK(rep.witness.empty());
  }
}

TEST_CASE("zero_free_disc_check edge cases") {
  Multigraph edgeless(3);
  PropertyReport rep = zero_free_disc_check(edgeless);
  CHECK(rep.verdict == Verdict::ProvenExact);
  CHECK(rep.detail.find("edgeless") != std::string::npos);

  Multigraph loopy(1);
  loopy.add_edge(0, 0);
  CHECK_THROWS_AS(zero_free_disc_check(loopy), std::invalid_argument);
}

TEST_CASE("conjecture experiments on C4 report the known radius and flow bound") {
  ConjectureExperimentReport rep = conjecture_experiments(cycle_graph(4));
  CHECK(rep.lambda == doctest::Approx(2.0));
  CHECK(rep.max_abs_root == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  CHECK(rep.halfplane_re_le_lambda);
  CHECK(rep.positive_beyond_lambda);
  CHECK(rep.roots.degree == 4);
  CHECK(rep.notes.find("experimental") != std::string::npos);
}

TEST_CASE("conjecture experiments on K4: roots reach lambda but stay in the half-plane") {
  ConjectureExperimentReport rep = conjecture_experiments(complete_graph(4));
  CHECK(rep.lambda == doctest::Approx(3.0));
  CHECK(rep.max_abs_root == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(rep.halfplane_re_le_lambda);
  CHECK(rep.taylor_nonneg_at_lambda);
  CHECK(rep.positive_beyond_lambda);
}

TEST_CASE("conjecture_experiments rejects loops") {
  Multigraph loopy(2);
  loopy.add_edge(0, 1);
  loopy.add_edge(0, 0);
  CHECK_THROWS_AS(conjecture_experiments(loopy), std::invalid_argument);
}
