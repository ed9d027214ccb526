#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tuttekit/laurent.hpp"
#include "tuttekit/sparse_poly.hpp"

namespace tuttekit {

// Raised when a product would square an edge variable. Callers are expected to
// keep variable supports disjoint; anything else is a logic error upstream.
struct NonMultiaffineError : std::logic_error {
  using std::logic_error::logic_error;
};

struct UnknownVariableError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Symbolic universe cap for fully expanded work; 2^cap monomials is the hard
// ceiling. The CLI can raise it via TUTTEKIT_CAP_EDGES.
int multiaffine_universe_cap();
void set_multiaffine_universe_cap(int cap);

// Polynomial of degree <= 1 in each edge variable, with Laurent-in-q
// coefficients. Terms are keyed by bitmask over a declared variable universe.
class MultiAffinePoly {
 public:
  MultiAffinePoly() = default;
  explicit MultiAffinePoly(const LaurentPoly& c) { if (!c.is_zero()) t_[0] = c; }
  explicit MultiAffinePoly(const Rational& c) : MultiAffinePoly(LaurentPoly(c)) {}
  explicit MultiAffinePoly(std::vector<int> universe);
  static MultiAffinePoly var(int id, const LaurentPoly& c = LaurentPoly(Rational(1)));

  const std::vector<int>& universe() const { return universe_; }
  const std::map<uint32_t, LaurentPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_q_poly() const;                 // no edge variable actually appears
  LaurentPoly q_poly() const;             // requires is_q_poly()
  LaurentPoly coeff(uint32_t mask) const;
  // coefficient by variable-id set
  LaurentPoly coeff_of(const std::vector<int>& vars) const;
  void add_term(uint32_t mask, const LaurentPoly& c);
  std::set<int> appearing_vars() const;

  int degree_q() const;      // max over coefficients; throws on zero poly
  int low_degree_q() const;  // min over coefficients; throws on zero poly

  MultiAffinePoly aligned_to(const std::vector<int>& universe) const;

  MultiAffinePoly operator-() const;
  friend MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b);
  friend MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b);
  // Throws NonMultiaffineError if an edge variable appears in both factors.
  friend MultiAffinePoly operator*(const MultiAffinePoly& a, const MultiAffinePoly& b);
  MultiAffinePoly& operator+=(const MultiAffinePoly& o) { return *this = *this + o; }
  MultiAffinePoly& operator-=(const MultiAffinePoly& o) { return *this = *this - o; }
  MultiAffinePoly& operator*=(const MultiAffinePoly& o) { return *this = *this * o; }
  friend bool operator==(const MultiAffinePoly& a, const MultiAffinePoly& b);
  friend bool operator!=(const MultiAffinePoly& a, const MultiAffinePoly& b) { return !(a == b); }

  MultiAffinePoly scaled(const LaurentPoly& c) const;
  MultiAffinePoly scaled(const Rational& c) const { return scaled(LaurentPoly(c)); }
  // divide every coefficient exactly by a q-polynomial
  MultiAffinePoly divide_coeffs_exact(const LaurentPoly& d) const;

  // Bind a subset of the variables to q-polynomials (constants included);
  // the result lives over the remaining universe.
  MultiAffinePoly substitute_partial(const std::map<int, LaurentPoly>& bindings) const;
  // Evaluate coefficients at a numeric q; edge variables survive.
  MultiAffinePoly substitute_q(const Rational& q) const;
  // (prod_{e in universe} v_e) * p(q, q/v): the duality transform.
  MultiAffinePoly reciprocal_transform() const;
  // (prod_{e in universe} v_e) * p(1/v): mask complement, coefficients kept.
  MultiAffinePoly complement_transform() const;
  // v_e -> q * v_e for every universe variable.
  MultiAffinePoly rescale_vars_by_q() const;
  // v -> num/den multiplied through: returns P*den + Q*num where p = P + v*Q.
  // num/den must not share appearing variables with the rest of p.
  MultiAffinePoly substitute_affine_fraction(int var, const MultiAffinePoly& num,
                                             const MultiAffinePoly& den) const;

  Rational evaluate(const Rational& q, const std::map<int, Rational>& point) const;
  GaussianRational evaluate_gaussian(const GaussianRational& q,
                                     const std::map<int, GaussianRational>& point) const;
  std::complex<double> evaluate_complex(const std::complex<double>& q,
                                        const std::map<int, std::complex<double>>& point) const;

  SparsePoly to_sparse() const;  // q becomes kVarQ

  // Stable text form, usable as a cache key.
  std::string serialize() const;
  std::string to_string(const VarNamer& namer = default_var_name) const;

 private:
  void check_universe_cap() const;
  std::vector<int> universe_;           // sorted distinct variable ids
  std::map<uint32_t, LaurentPoly> t_;   // bitmask over universe_ -> coefficient
};

// Exact quotient of multiaffine polynomials, carried unreduced except for
// rational/monomial content stripping (see reduce_light).
struct PolyFraction {
  MultiAffinePoly num;
  MultiAffinePoly den{LaurentPoly(Rational(1))};

  // strips common rational content and common q-power; divides exactly when
  // den | num (full multivariate gcd is intentionally not attempted)
  void reduce_light();
  bool is_zero() const { return num.is_zero(); }
  std::string serialize() const { return num.serialize() + "|" + den.serialize(); }
};

}  // namespace tuttekit
