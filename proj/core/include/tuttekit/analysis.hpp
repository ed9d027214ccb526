#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tuttekit/graph.hpp"
#include "tuttekit/matroid.hpp"
#include "tuttekit/multiaffine.hpp"
#include "tuttekit/report.hpp"
#include "tuttekit/sparse_poly.hpp"

namespace tuttekit {

// Vertex-indexed variables (hard-core activities, Ising-style vertex weights)
// live above every edge id so both kinds can share one polynomial.
constexpr int kVertexVarBase = 1 << 20;
inline int vertex_var(int vertex) { return kVertexVarBase + vertex; }

// --- half-plane property and its necessary conditions --------------------

// Evaluates p exactly at pseudo-random Gaussian-rational points with positive
// real parts (q is bound to 1; the intended inputs are q-free). An exact zero
// is a falsifying witness; absence of one is never a proof. With
// `complementary` set the check runs on the x_e -> 1/x_e companion polynomial.
PropertyReport hpp_sample_check(const MultiAffinePoly& p, long samples = 200, uint64_t seed = 1,
                                bool complementary = false);

// Float random-restart descent on |p| over the right half-polydisc, then
// rational rounding attempts. A hit is reported as a float witness with the
// stated residual tolerance, never as an exact zero.
PropertyReport hpp_float_falsifier(const MultiAffinePoly& p, long restarts = 40,
                                   uint64_t seed = 1, double residual_tol = 1e-10);

// All nonzero coefficients share one sign (rational coefficients: equal phase
// reduces to equal sign). Complete check, so the verdict is proven-exact.
PropertyReport same_phase_check(const MultiAffinePoly& p);

// The support of a homogeneous multiaffine polynomial must be a matroid basis
// family; throws std::invalid_argument on non-homogeneous input.
PropertyReport support_matroid_check(const MultiAffinePoly& p);

// --- Rayleigh monotonicity -----------------------------------------------

struct RayleighResult {
  PropertyReport report;
  SparsePoly difference;  // T_{H/e} T_{H/f} - T_{H/{e,f}} T_H (or the B_M analogue)
};

// proven-exact when every coefficient of the difference is nonnegative; else
// sampled at positive rational points (an exact negative value falsifies).
RayleighResult rayleigh_check_graph(const Multigraph& h, int e, int f, long samples = 100,
                                    uint64_t seed = 1);
RayleighResult rayleigh_check_matroid(const RankOracle& m, int e, int f, long samples = 100,
                                      uint64_t seed = 1);

// --- Brown-Colbourn ------------------------------------------------------

// Samples v_e in the open disc |1+v_e| < 1 (rational coordinates; the boundary
// is excluded) and evaluates C_G(v) exactly. Requires loopless connected g.
PropertyReport brown_colbourn_sample(const Multigraph& g, long samples = 200, uint64_t seed = 1);

// C_{K4} under the five two-weight assignments, as a polynomial in the
// reserved vars a, b:
//   'a' one edge gets a            'b' two disjoint edges
//   'c' two adjacent edges         'd' the three edges of a star
//   'e' the three edges of a path
SparsePoly k4_bivariate_poly(char which);
// all five, indexed a..e
std::array<SparsePoly, 5> k4_bivariate_polys();

struct BcTraceResult {
  PropertyReport report;
  double min_abs_1pa = 0;   // min over the trace of |1 + a| at a root
  double theta_at_min = 0;
  // one row per grid point: theta, Re a, Im a of the root closest to -1
  std::vector<std::array<double, 3>> path;
};

// For b = -1 + e^{i theta} over the grid, numerically solves the
// univariate-in-a polynomial of case 'b' or 'd' and tracks |1+a|. Root
// residuals are certified below 1e-9 against the exact (a,b)-coefficients.
BcTraceResult bc_boundary_root_trace(char which, const std::vector<double>& thetas);

// Spanning-set polynomial S_M sampled in the open polydisc |1+v_e| < 1.
// Loops are rejected.
PropertyReport bc_matroid_check(const RankOracle& m, long samples = 200, uint64_t seed = 1);

// Float random-restart descent on |C_G| over the open polydisc |1+v_e| < 1.
// Edges sharing a symbolic weight name move together (one complex variable
// per name); exact-weight edges stay pinned at their value. Finds the zeros
// that exact sampling almost surely misses on non-series-parallel graphs.
PropertyReport bc_polydisc_falsifier(const Multigraph& g, long restarts = 60, uint64_t seed = 1,
                                     double residual_tol = 1e-10);

// --- vertex-weight generating polynomials --------------------------------

enum class VertexWeightScheme {
  LeeYang,       // w_i(A) = 1 for even deg_A(i), t_i for odd
  HeilmannLieb,  // w_i(A) = 1, t_i, 0 for deg_A(i) = 0, 1, >1
};

// P_G(t, lambda) = sum_A (prod_{e in A} lambda_e) (prod_i w_i(A));
// lambda_e keeps the edge id, t_i uses vertex_var(i). Caps at 20 edges.
MultiAffinePoly lee_yang_poly(const Multigraph& g, VertexWeightScheme scheme);

// Samples lambda_e >= 0 and Re t_i > 0; an exact zero falsifies.
PropertyReport lee_yang_sample_check(const Multigraph& g, VertexWeightScheme scheme,
                                     long samples = 200, uint64_t seed = 1);

// --- hard-core lattice gas ------------------------------------------------

// Independent-set generating polynomial over vertex_var activities. A loop
// removes its vertex from every independent set. Caps at 20 vertices.
MultiAffinePoly hardcore_poly(const Multigraph& g);

// (Delta-1)^{Delta-1} / Delta^Delta, exactly; defined for Delta >= 2.
Rational hardcore_disc_radius(int delta);

// Samples activities in the closed polydisc of that radius (Delta = largest
// neighbour count); nonvanishing is asserted at every exact sample point.
PropertyReport hardcore_disc_check(const Multigraph& g, long samples = 200, uint64_t seed = 1);

// --- polymer-gas representation of Ztilde ---------------------------------

struct PolymerGas {
  std::vector<uint32_t> polymers;        // vertex masks, |S| >= 2, induced-connected
  std::vector<MultiAffinePoly> weights;  // w(S) = q^{1-|S|} C_{G|S}(v)
  std::vector<MultiAffinePoly> singleton_factors;  // per vertex, prod over its loops of (1+v)
};

PolymerGas polymer_gas(const Multigraph& g);  // |V| <= 7

// q^{-|V|} Z_G(q,v) == sum over families of vertex-disjoint polymers of
// prod w(S), symbolically in q and every v_e.
PropertyReport polymer_representation_check(const Multigraph& g);

}  // namespace tuttekit
