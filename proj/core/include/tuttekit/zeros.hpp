#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tuttekit/graph.hpp"
#include "tuttekit/laurent.hpp"
#include "tuttekit/report.hpp"

namespace tuttekit {

// Chromatic roots of loopless graphs of maximum degree D lie in |q| < kRootDiscFactor * D;
// with edge weights |1+v| <= 1 the bound is kRootDiscFactor * v_max * D. Stored as the
// published decimal literal; disc membership is asserted strictly minus kDiscBoundaryTol.
inline constexpr double kRootDiscFactor = 7.963907;
inline constexpr double kDiscBoundaryTol = 1e-8;

struct RootSet {
  std::vector<std::complex<double>> roots;  // repeated per multiplicity
  std::vector<int> multiplicity;            // cluster sizes, parallel to roots
  int degree = 0;
  double tolerance = 1e-10;
  double max_residual = 0.0;  // max over roots of |p(r)| / (coefficient scale at r)
  std::string source_hash;    // fnv-1a of the exact coefficient list
};

// All complex roots of a univariate polynomial, low-to-high coefficients.
// Companion-matrix eigenvalues with coefficient balancing, then Newton polishing
// in long double against the exact coefficients. Clusters closer than
// 10*tolerance are merged into multiple roots.
RootSet complex_roots(const std::vector<Rational>& coeffs, double tolerance = 1e-10);
// Laurent input: roots in q != 0 (the q-power prefactor is stripped).
RootSet complex_roots(const LaurentPoly& p, double tolerance = 1e-10);

// Raw double-precision kernel (no exact polishing); used for complex-coefficient
// sections where exact arithmetic is unavailable.
std::vector<std::complex<double>> poly_roots_complex(std::vector<std::complex<double>> coeffs);

// Roots of P_G(q) / q^{k(G)}. Loops make the chromatic polynomial vanish
// identically and are rejected.
RootSet chromatic_roots(const Multigraph& g, double tolerance = 1e-10);

// Asserts, on one report: (1) chromatic roots lie in |q| < factor*Delta;
// (2) for sampled rational v with |1+v_e| <= 1, roots of Z_G(q,v) lie in
// |q| < factor*v_max*Delta; (3) chromatic roots lie in the union of discs of
// radius factor*Delta2 around 0 and around 1 (Delta2 = second-largest degree).
PropertyReport zero_free_disc_check(const Multigraph& g, long samples = 6, uint64_t seed = 1);

// Experimental predicates tied to maxmaxflow Lambda; never an acceptance gate.
// The half-plane predicate is known to fail for some large planar graphs, so a
// false value here is data, not an error.
struct ConjectureExperimentReport {
  double lambda = 0;                    // maxmaxflow of the graph
  double max_abs_root = 0;              // chromatic-root radius actually observed
  bool halfplane_re_le_lambda = false;  // all chromatic roots have Re q <= Lambda + tol
  bool taylor_nonneg_at_lambda = false; // exact: all Taylor coefficients of P at q=Lambda >= 0
  bool positive_beyond_lambda = false;  // exact signs + root localization on (Lambda, infinity)
  RootSet roots;
  std::string notes;
};
ConjectureExperimentReport conjecture_experiments(const Multigraph& g);

}  // namespace tuttekit
