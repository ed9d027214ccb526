#include "tuttekit/rational.hpp"

#include <cmath>
#include <cstdlib>

namespace tuttekit {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
  }
}

std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rational rational_from_double(double x, long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
  bool neg = x < 0;
  double v = neg ? -x : x;
  // continued fraction expansion, truncated when the denominator would overflow max_den
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double f = v;
  for (int it = 0; it < 64; ++it) {
    double a_f = std::floor(f);
    if (a_f > 1e17) break;
    long a = static_cast<long>(a_f);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = f - a_f;
    if (rem < 1e-15) break;
    f = 1.0 / rem;
  }
  if (q1 == 0) { p1 = static_cast<long>(v); q1 = 1; }
  Rational r(p1, q1);
  return neg ? Rational(-r) : r;
}

std::string gaussian_to_string(const GaussianRational& z) {
  if (z.im.is_zero()) return rational_to_string(z.re);
  std::string s;
  if (!z.re.is_zero()) s = rational_to_string(z.re);
  std::string im = rational_to_string(z.im);
  if (!s.empty() && im[0] != '-') s += "+";
  return s + im + "i";
}

GaussianRational parse_gaussian(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_gaussian: empty string");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));
  std::string body = s.substr(0, s.size() - 1);
  // split at the last +/- that is not the leading sign and not inside a fraction
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') { split = i; break; }
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+") return {Rational(0), Rational(1)};
    if (body == "-") return {Rational(0), Rational(-1)};
    return {Rational(0), parse_rational(body)};
  }
  std::string re = body.substr(0, split);
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_rational(re), parse_rational(im)};
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace tuttekit
