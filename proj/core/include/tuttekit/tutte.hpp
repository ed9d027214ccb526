#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tuttekit/graph.hpp"
#include "tuttekit/multiaffine.hpp"
#include "tuttekit/rotation.hpp"
#include "tuttekit/sparse_poly.hpp"

namespace tuttekit {

// --- oracles -----------------------------------------------------------

// Sum over edge subsets A of q^{k(A)} prod_{e in A} v_e. Exponential on
// purpose; the reference everything else is checked against.
MultiAffinePoly z_subset_expansion(const Multigraph& g);

// Coloring sum: sum over maps V -> {1..q} of prod_e (1 + v_e [ends equal]).
// Capped at q^{|V|} <= 10^7 enumerated colorings.
MultiAffinePoly potts_coloring_oracle(const Multigraph& g, int q);

// Flow sum over the abelian group Z_{m1} x ... x Z_{mk}: sum over flows of
// prod_e (1 + u_e [flow zero on e]). Capped at |Gamma|^{cyclomatic} <= 10^7.
// Variables keep the edge ids (read them as u_e).
MultiAffinePoly gamma_flow_oracle(const Multigraph& g, const std::vector<int>& moduli);

// --- solver ------------------------------------------------------------

struct SolveOptions {
  bool use_memo = true;
  int jobs = 1;  // > 1 evaluates deletion/contraction branches concurrently
};

struct SolveStats {
  long nodes = 0;
  long memo_hits = 0;
  long branches = 0;
  long loop_factors = 0;
  long parallel_merges = 0;
  long series_merges = 0;
  long block_splits = 0;
  long component_splits = 0;
};

struct TutteResult {
  MultiAffinePoly z;
  SolveStats stats;
};

// Deletion-contraction with reduction to fixpoint before each branch
// (loops, parallel and series merges, component and block factorization),
// memoized on a canonical graph key.
TutteResult z_delete_contract(const Multigraph& g, const SolveOptions& opts = {});

// Convenience: solver Z (symbolic edges keep their ids as variables).
MultiAffinePoly graph_z(const Multigraph& g, const SolveOptions& opts = {});

// --- reduction trace ----------------------------------------------------

struct ReductionStep {
  enum class Kind { LoopFactor, BridgeFactor, ParallelMerge, SeriesMerge };
  Kind kind;
  std::vector<int> edges;  // consumed edge ids
  int new_edge = -1;       // surviving edge id for merges, else -1
  PolyFraction factor;     // multiplicative prefactor (1 for parallel merges)
  PolyFraction new_weight; // effective weight of new_edge (merges only)
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

struct ReducedCore {
  Multigraph core;
  std::map<int, PolyFraction> weights;  // core edge id -> effective weight
  PolyFraction prefactor;               // product of step factors
  ReductionTrace trace;
};

// Applies loop/bridge/parallel/series reductions to fixpoint and records the
// trace. Replaying prefactor * Z(core, weights) reproduces Z(g) exactly.
ReducedCore reduce_to_core(const Multigraph& g, bool wide_series = false);

// Z of a graph whose edges carry exact fraction weights, as a fraction whose
// denominator is the product of the weight denominators (used by replay tests).
PolyFraction z_with_fraction_weights(const Multigraph& structure,
                                     const std::map<int, PolyFraction>& weights);

// --- specializations ----------------------------------------------------

LaurentPoly chromatic_poly(const Multigraph& g, const SolveOptions& opts = {});
LaurentPoly flow_poly(const Multigraph& g, const SolveOptions& opts = {});
// Multivariate flow polynomial q^{-|V|} (prod_e u_e) Z(q, q/u).
MultiAffinePoly flow_poly_multivariate(const Multigraph& g, const SolveOptions& opts = {});

// All-terminal reliability. Edges with p=1 are contracted, p=0 deleted first.
Rational reliability_at(const Multigraph& g, const std::map<int, Rational>& p);
// Uniform edge probability as the variable (coefficients exact).
LaurentPoly reliability_poly(const Multigraph& g);

// --- q -> 0 limits ------------------------------------------------------

struct QZeroPolys {
  MultiAffinePoly c;  // subsets with k(A) = k(G)
  MultiAffinePoly f;  // forests (c(A) = 0)
  MultiAffinePoly t;  // maximal spanning forests (both)
};
// direct subset enumeration
QZeroPolys q_zero_limits(const Multigraph& g);
// extraction from a fully symbolic Z (every subset visible as a monomial)
QZeroPolys q_zero_limits_from_z(const Multigraph& g, const MultiAffinePoly& z);

struct AlphaLimitReport {
  bool ok = false;                // exponents vanish exactly on max forests, positive otherwise
  MultiAffinePoly limit;          // sum of exponent-zero terms
  Rational min_positive_exponent; // evidence for the report
};
AlphaLimitReport alpha_limit_check(const Multigraph& g, const Rational& alpha);

// --- classical conversions and duality ----------------------------------

// T_G(x, y) as a SparsePoly in kVarX/kVarY via the substitution
// q = (x-1)(y-1), v = y-1 and exact division by (x-1)^{k(E)} (y-1)^{|V|}.
SparsePoly tutte_xy(const Multigraph& g, const SolveOptions& opts = {});

struct DualityReport {
  bool z_identity = false;      // Z_{G*}(q,v) = q^{1-|V|} (prod v) Z_G(q, q/v)
  bool flow_identity = false;   // Z_{G*} = q * F_G(q, v)
  bool c_identity = false;      // C_{G*}(v) = (prod v) F_G(1/v)
  bool f_identity = false;      // F_{G*}(w) = (prod w) C_G(1/w)
  bool t_identity = false;      // T_{G*}(v) = (prod v) T_G(1/v)
  bool all() const { return z_identity && flow_identity && c_identity && f_identity && t_identity; }
};
DualityReport duality_check(const Multigraph& g, const RotationSystem& rot);

}  // namespace tuttekit
