#pragma once

#include <map>
#include <string>
#include <vector>

#include "tuttekit/rational.hpp"

namespace tuttekit {

// Sparse univariate Laurent polynomial over Q. The variable is conventionally q;
// printing takes the variable name so the same type serves t- or p-polynomials.
// Invariant: no zero coefficients are stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) { if (!c.is_zero()) c_[0] = c; }
  static LaurentPoly var_power(int exp, const Rational& c = Rational(1)) {
    LaurentPoly p;
    if (!c.is_zero()) p.c_[exp] = c;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
  Rational constant_value() const { return coeff(0); }
  // degree of the zero polynomial is INT_MIN-ish; callers must check is_zero first
  int degree() const;
  int low_degree() const;
  Rational coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& terms() const { return c_; }
  void set_coeff(int exp, const Rational& v);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly scaled(const Rational& s) const;
  // multiply by q^k
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned n) const;

  // Exact division; throws std::domain_error if the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& divisor) const;
  // Quotient/remainder on the polynomial parts (both shifted to low degree 0).
  static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem);

  Rational evaluate(const Rational& x) const;
  GaussianRational evaluate(const GaussianRational& x) const;

  // Dense coefficient vector c[0..degree-low]; low receives low_degree(). Zero poly -> {}.
  std::vector<Rational> dense_coeffs(int& low) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  std::map<int, Rational> c_;
};

inline LaurentPoly operator*(const Rational& s, const LaurentPoly& p) { return p.scaled(s); }

// Monic GCD over Q[q] of the polynomial parts (Euclid). gcd(0,0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace tuttekit
