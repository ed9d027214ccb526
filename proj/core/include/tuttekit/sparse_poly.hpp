#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tuttekit/laurent.hpp"
#include "tuttekit/rational.hpp"

namespace tuttekit {

// Variable ids: edge/vertex variables use their nonnegative ids; named symbols
// use the reserved negative ids below.
constexpr int kVarQ = -1;
constexpr int kVarT = -2;
constexpr int kVarU = -3;
constexpr int kVarX = -4;
constexpr int kVarY = -5;
constexpr int kVarA = -6;
constexpr int kVarB = -7;
constexpr int kVarP = -8;

std::string default_var_name(int var);
using VarNamer = std::function<std::string(int)>;

// Power product with integer (possibly negative) exponents, sorted by var id.
struct Monomial {
  std::vector<std::pair<int, int>> factors;  // (var, exp), exp != 0

  int exponent(int var) const;
  bool empty() const { return factors.empty(); }
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  auto operator<=>(const Monomial&) const = default;
};

// General sparse Laurent polynomial over Q in many variables. This is the
// engine-internal workhorse behind exact determinants, Grassmann coefficients
// and bivariate outputs; the multiaffine partition-function type stays the
// public representation for Z.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(const Rational& c) { if (!c.is_zero()) t_[Monomial{}] = c; }
  static SparsePoly var(int v, int exp = 1, const Rational& c = Rational(1));
  static SparsePoly from_laurent(const LaurentPoly& p, int var);

  bool is_zero() const { return t_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  Rational coeff(const Monomial& m) const;
  size_t size() const { return t_.size(); }
  void add_term(const Monomial& m, const Rational& c);

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  SparsePoly scaled(const Rational& s) const;
  SparsePoly pow(unsigned n) const;

  int degree_in(int var) const;     // 0 for absent variable / zero poly
  int low_degree_in(int var) const;
  std::vector<int> variables() const;

  // Coefficients of powers of `var` (the var itself removed from each part).
  std::map<int, SparsePoly> collect(int var) const;
  // If univariate in `var` (or constant), the Laurent image; throws otherwise.
  LaurentPoly to_laurent(int var) const;

  SparsePoly substitute(int var, const SparsePoly& value) const;
  // Exact division by (var + c); throws std::domain_error on nonzero remainder.
  SparsePoly divide_exact_binomial(int var, const Rational& c) const;

  Rational evaluate(const std::map<int, Rational>& point) const;
  GaussianRational evaluate_gaussian(const std::map<int, GaussianRational>& point) const;
  std::complex<double> evaluate_complex(const std::map<int, std::complex<double>>& point) const;

  std::string to_string(const VarNamer& namer = default_var_name) const;

 private:
  std::map<Monomial, Rational> t_;
};

}  // namespace tuttekit
