#include "tuttekit/laurent.hpp"

#include <sstream>

namespace tuttekit {

int LaurentPoly::degree() const {
  if (c_.empty()) throw std::domain_error("degree of zero polynomial");
  return c_.rbegin()->first;
}

int LaurentPoly::low_degree() const {
  if (c_.empty()) throw std::domain_error("low_degree of zero polynomial");
  return c_.begin()->first;
}

void LaurentPoly::set_coeff(int exp, const Rational& v) {
  if (v.is_zero()) c_.erase(exp);
  else c_[exp] = v;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (auto& [e, v] : b.c_) {
    auto it = r.c_.find(e);
    if (it == r.c_.end()) r.c_[e] = v;
    else {
      it->second += v;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto& [ea, va] : a.c_)
    for (auto& [eb, vb] : b.c_) {
      Rational p = va * vb;
      auto it = r.c_.find(ea + eb);
      if (it == r.c_.end()) {
        if (!p.is_zero()) r.c_[ea + eb] = p;
      } else {
        it->second += p;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
  LaurentPoly r;
  if (s.is_zero()) return r;
  for (auto& [e, v] : c_) r.c_[e] = v * s;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r(Rational(1));
  LaurentPoly base = *this;
  while (n) {
    if (n & 1) r *= base;
    base = (n >>= 1) ? base * base : base;
  }
  return r;
}

void LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quo, LaurentPoly& rem) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly division by zero");
  quo = LaurentPoly();
  rem = a;
  if (a.is_zero()) return;
  int bl = b.low_degree();
  LaurentPoly bp = b.shifted(-bl);  // polynomial part, low degree 0
  int al = a.low_degree();
  rem = a.shifted(-al);
  int bdeg = bp.degree();
  Rational blead = bp.coeff(bdeg);
  while (!rem.is_zero() && rem.degree() >= bdeg) {
    int d = rem.degree();
    Rational f = rem.coeff(d) / blead;
    LaurentPoly t = LaurentPoly::var_power(d - bdeg, f);
    quo += t;
    rem -= t * bp;
  }
  // undo the shifts: a = q^al * (quo * bp + rem), b = q^bl * bp
  quo = quo.shifted(al - bl);
  rem = rem.shifted(al);
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  LaurentPoly q, r;
  divmod(*this, divisor, q, r);
  if (!r.is_zero()) throw std::domain_error("LaurentPoly: inexact division");
  return q;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto& [e, v] : c_) {
    if (e >= 0) {
      Rational p(1);
      for (int i = 0; i < e; ++i) p *= x;
      acc += v * p;
    } else {
      if (x.is_zero()) throw std::domain_error("LaurentPoly: 0 raised to negative power");
      Rational p(1);
      for (int i = 0; i < -e; ++i) p *= x;
      acc += v / p;
    }
  }
  return acc;
}

GaussianRational LaurentPoly::evaluate(const GaussianRational& x) const {
  GaussianRational acc;
  GaussianRational one{Rational(1), Rational(0)};
  for (auto& [e, v] : c_) {
    GaussianRational p = one;
    int n = e >= 0 ? e : -e;
    for (int i = 0; i < n; ++i) p *= x;
    if (e < 0) p = one / p;
    acc += GaussianRational(v) * p;
  }
  return acc;
}

std::vector<Rational> LaurentPoly::dense_coeffs(int& low) const {
  if (c_.empty()) { low = 0; return {}; }
  low = low_degree();
  std::vector<Rational> out(static_cast<size_t>(degree() - low + 1), Rational(0));
  for (auto& [e, v] : c_) out[static_cast<size_t>(e - low)] = v;
  return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [e, v] = *it;
    Rational av = v < 0 ? Rational(-v) : v;
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    bool unit = (av == 1);
    if (e == 0 || !unit) os << rational_to_string(av);
    if (e != 0) {
      if (!unit) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  x = x.shifted(-x.low_degree());
  y = y.shifted(-y.low_degree());
  while (!y.is_zero()) {
    LaurentPoly q, r;
    LaurentPoly::divmod(x, y, q, r);
    x = y;
    y = r;
    if (!y.is_zero()) y = y.shifted(-y.low_degree());
  }
  // monic normalization
  return x.scaled(Rational(1) / x.coeff(x.degree()));
}

}  // namespace tuttekit
