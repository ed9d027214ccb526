#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tuttekit/graph.hpp"
#include "tuttekit/linalg.hpp"
#include "tuttekit/multiaffine.hpp"

namespace tuttekit {

// Matroid as a memoized rank oracle over a ground set of at most 24 labeled
// elements. Labels double as polynomial variable ids and survive the
// delete/contract/dual views; subset arguments are masks over positions.
class RankOracle {
 public:
  int size() const;
  uint32_t all_mask() const { return size() == 0 ? 0u : ((uint32_t(1) << size()) - 1); }
  const std::vector<int>& labels() const;
  const std::vector<EdgeWeight>& weights() const;
  const std::string& kind() const;
  int position_of(int label) const;  // throws UnknownEdgeError

  int rank(uint32_t subset) const;
  int full_rank() const { return rank(all_mask()); }
  bool is_loop(int label) const;    // rank {e} = 0
  bool is_coloop(int label) const;  // rank E\e = rank E - 1

  static RankOracle uniform(int r, int n);
  static RankOracle graphic(const Multigraph& g);
  // elements are the matrix columns
  static RankOracle linear_rational(const Matrix<Rational>& columns);
  static RankOracle linear_gf2(const std::vector<uint64_t>& columns, int num_rows);
  static RankOracle from_bases(int ground_size, const std::vector<uint32_t>& bases);
  // table[mask] = rank; requires 2^ground_size entries, ground_size <= 20
  static RankOracle from_table(int ground_size, std::vector<int> table);

  RankOracle dual() const;
  RankOracle deleted(int label) const;
  RankOracle contracted(int label) const;
  RankOracle with_weight(int label, EdgeWeight w) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  explicit RankOracle(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  static RankOracle make(int n, std::vector<int> labels, std::vector<EdgeWeight> weights,
                         std::string kind, std::function<int(uint32_t)> raw);
};

// Z~_M(q,v) = sum over subsets A of q^{-r(A)} prod_{e in A} v_e; |E| <= 24
MultiAffinePoly z_tilde_matroid(const RankOracle& m);

// Z~_M(q,-1)
LaurentPoly matroid_chromatic(const RankOracle& m);

// Z~_{M*}(q,v) == q^{-r*(E)} (prod v) Z~_M(q, q/v), expanded symbolically; |E| <= 12
bool matroid_duality_identity(const RankOracle& m);

// loop: Z~ = (1+v) Z~_{M\e}; otherwise Z~ = Z~_{M\e} + (v/q) Z~_{M/e}
bool matroid_delcon_identity(const RankOracle& m, int label);

struct MatroidReduction {
  RankOracle reduced;
  bool series = false;                  // series pair vs parallel pair
  PolyFraction prefactor;               // (q+v1+v2)/q in the series case, else 1
  int merged_label = -1;
  std::map<int, PolyFraction> weights;  // per surviving label
};

// e1,e2 must form a two-element circuit (parallel) or cocircuit / coloop pair
// (series); otherwise throws std::invalid_argument.
MatroidReduction matroid_series_parallel(const RankOracle& m, int l1, int l2);

// homogenized subset expansion with per-element weight fractions; |E| <= 20
PolyFraction z_tilde_fraction_weights(const RankOracle& m,
                                      const std::map<int, PolyFraction>& weights);

struct MatroidQZero {
  MultiAffinePoly s;  // spanning sets: r(A) = r(E)
  MultiAffinePoly i;  // independent sets: r(A) = |A|
  MultiAffinePoly b;  // bases: both
};
MatroidQZero q_zero_matroid_limits(const RankOracle& m);  // |E| <= 24

// basis generating polynomial (the Rayleigh-test object)
MultiAffinePoly matroid_basis_poly(const RankOracle& m);

struct SetSystem {
  int ground_size = 0;
  std::vector<uint32_t> sets;
};

// nonempty, equicardinal, and closed under basis exchange
bool is_matroid_basis_family(const SetSystem& s);

struct RankAxiomReport {
  bool empty_zero = true;
  bool unit_increase = true;
  bool submodular = true;
  bool all() const { return empty_zero && unit_increase && submodular; }
};
RankAxiomReport check_rank_axioms(const RankOracle& m);  // exhaustive, |E| <= 10

// Direct generalized-coloring sum: |M|^{-rows} sum over assignments sigma of
// rows -> prod of moduli, weighting column e by [1 + v_e delta(sigma . b_e, 0)].
// Entries of b act on each Z_m component by integer multiplication.
MultiAffinePoly spin_sum_z_tilde(const std::vector<std::vector<int>>& b,
                                 const std::vector<int>& moduli);

}  // namespace tuttekit
