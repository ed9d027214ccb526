#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace tuttekit {

using Int = boost::multiprecision::cpp_int;
// Always stored normalized: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

// Raised when a documented size cap is exceeded (CLI maps this to exit code 3).
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

// Emits "p" or "p/q" with den > 0 (the wire format used in JSON payloads).
std::string rational_to_string(const Rational& r);

// Nearby rational with denominator <= max_den (Stern-Brocot / continued fraction).
Rational rational_from_double(double x, long max_den = 1000);

inline int sign(const Rational& r) { return r.sign(); }

// Element of Q(i). Exact arithmetic; division by zero throws.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  // |z|^2, exact.
  Rational norm2() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.norm2();
    if (n.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    GaussianRational p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// "a+bi" with both parts in the p/q wire format, e.g. "1/2-3i".
std::string gaussian_to_string(const GaussianRational& z);
GaussianRational parse_gaussian(const std::string& s);

double to_double(const Rational& r);

}  // namespace tuttekit
