#include "tuttekit/sparse_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tuttekit {

std::string default_var_name(int var) {
  switch (var) {
    case kVarQ: return "q";
    case kVarT: return "t";
    case kVarU: return "u";
    case kVarX: return "x";
    case kVarY: return "y";
    case kVarA: return "a";
    case kVarB: return "b";
    case kVarP: return "p";
    default: return "v" + std::to_string(var);
  }
}

int Monomial::exponent(int var) const {
  for (auto& [v, e] : factors)
    if (v == var) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors.reserve(a.factors.size() + b.factors.size());
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    if (ib == b.factors.end() || (ia != a.factors.end() && ia->first < ib->first)) {
      r.factors.push_back(*ia++);
    } else if (ia == a.factors.end() || ib->first < ia->first) {
      r.factors.push_back(*ib++);
    } else {
      int e = ia->second + ib->second;
      if (e != 0) r.factors.emplace_back(ia->first, e);
      ++ia; ++ib;
    }
  }
  return r;
}

SparsePoly SparsePoly::var(int v, int exp, const Rational& c) {
  SparsePoly p;
  if (c.is_zero()) return p;
  Monomial m;
  if (exp != 0) m.factors.emplace_back(v, exp);
  p.t_[m] = c;
  return p;
}

SparsePoly SparsePoly::from_laurent(const LaurentPoly& p, int v) {
  SparsePoly r;
  for (auto& [e, c] : p.terms()) {
    Monomial m;
    if (e != 0) m.factors.emplace_back(v, e);
    r.t_[m] = c;
  }
  return r;
}

Rational SparsePoly::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) t_[m] = c;
  else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r;
  for (auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r = a;
  for (auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return a + (-b); }

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (auto& [ma, ca] : a.t_)
    for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& s) const {
  SparsePoly r;
  if (s.is_zero()) return r;
  for (auto& [m, c] : t_) r.t_[m] = c * s;
  return r;
}

SparsePoly SparsePoly::pow(unsigned n) const {
  SparsePoly r(Rational(1));
  SparsePoly base = *this;
  while (n) {
    if (n & 1) r *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return r;
}

int SparsePoly::degree_in(int var) const {
  int d = 0;
  for (auto& [m, c] : t_) d = std::max(d, m.exponent(var));
  return d;
}

int SparsePoly::low_degree_in(int var) const {
  int d = 0;
  for (auto& [m, c] : t_) d = std::min(d, m.exponent(var));
  return d;
}

std::vector<int> SparsePoly::variables() const {
  std::set<int> vs;
  for (auto& [m, c] : t_)
    for (auto& [v, e] : m.factors) vs.insert(v);
  return {vs.begin(), vs.end()};
}

std::map<int, SparsePoly> SparsePoly::collect(int var) const {
  std::map<int, SparsePoly> out;
  for (auto& [m, c] : t_) {
    int e = m.exponent(var);
    Monomial rest;
    for (auto& f : m.factors)
      if (f.first != var) rest.factors.push_back(f);
    out[e].add_term(rest, c);
  }
  return out;
}

LaurentPoly SparsePoly::to_laurent(int var) const {
  LaurentPoly out;
  for (auto& [m, c] : t_) {
    if (m.factors.size() > 1 || (m.factors.size() == 1 && m.factors[0].first != var))
      throw std::domain_error("SparsePoly::to_laurent: polynomial is not univariate in the requested variable");
    out.set_coeff(m.empty() ? 0 : m.factors[0].second, out.coeff(m.empty() ? 0 : m.factors[0].second) + c);
  }
  return out;
}

SparsePoly SparsePoly::substitute(int var, const SparsePoly& value) const {
  SparsePoly out;
  for (auto& [e, part] : collect(var)) {
    if (e < 0) throw std::domain_error("SparsePoly::substitute: negative exponent");
    out += part * value.pow(static_cast<unsigned>(e));
  }
  return out;
}

SparsePoly SparsePoly::divide_exact_binomial(int var, const Rational& c) const {
  // divide by (var + c) treating the poly as univariate in var
  auto parts = collect(var);
  int deg = parts.empty() ? 0 : parts.rbegin()->first;
  if (!parts.empty() && parts.begin()->first < 0)
    throw std::domain_error("divide_exact_binomial: negative exponent");
  SparsePoly out;
  SparsePoly carry;  // synthetic division, highest power first
  for (int e = deg; e >= 1; --e) {
    auto it = parts.find(e);
    SparsePoly coeff_e = carry + (it == parts.end() ? SparsePoly() : it->second);
    out += coeff_e * SparsePoly::var(var, e - 1);
    carry = coeff_e.scaled(-c);
  }
  auto it0 = parts.find(0);
  SparsePoly rem = (it0 == parts.end() ? SparsePoly() : it0->second) + carry;
  if (!rem.is_zero()) throw std::domain_error("divide_exact_binomial: inexact division");
  return out;
}

Rational SparsePoly::evaluate(const std::map<int, Rational>& point) const {
  Rational acc(0);
  for (auto& [m, c] : t_) {
    Rational p = c;
    for (auto& [v, e] : m.factors) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("SparsePoly::evaluate: unbound variable " + default_var_name(v));
      if (e >= 0) {
        for (int i = 0; i < e; ++i) p *= it->second;
      } else {
        if (it->second.is_zero()) throw std::domain_error("SparsePoly::evaluate: 0^negative");
        for (int i = 0; i < -e; ++i) p /= it->second;
      }
    }
    acc += p;
  }
  return acc;
}

GaussianRational SparsePoly::evaluate_gaussian(const std::map<int, GaussianRational>& point) const {
  GaussianRational acc;
  for (auto& [m, c] : t_) {
    GaussianRational p{c, Rational(0)};
    for (auto& [v, e] : m.factors) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("SparsePoly::evaluate_gaussian: unbound variable");
      GaussianRational pw{Rational(1), Rational(0)};
      int n = e >= 0 ? e : -e;
      for (int i = 0; i < n; ++i) pw *= it->second;
      if (e < 0) p = p / pw;
      else p *= pw;
    }
    acc += p;
  }
  return acc;
}

std::complex<double> SparsePoly::evaluate_complex(const std::map<int, std::complex<double>>& point) const {
  std::complex<double> acc = 0.0;
  for (auto& [m, c] : t_) {
    std::complex<double> p = to_double(c);
    for (auto& [v, e] : m.factors) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("SparsePoly::evaluate_complex: unbound variable");
      p *= std::pow(it->second, e);
    }
    acc += p;
  }
  return acc;
}

std::string SparsePoly::to_string(const VarNamer& namer) const {
  if (t_.empty()) return "0";
  // print higher total degree first for readability
  std::vector<std::pair<Monomial, Rational>> ts(t_.begin(), t_.end());
  auto total = [](const Monomial& m) {
    int d = 0;
    for (auto& [v, e] : m.factors) d += e;
    return d;
  };
  std::stable_sort(ts.begin(), ts.end(), [&](auto& a, auto& b) { return total(a.first) > total(b.first); });
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : ts) {
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (ac == 1) && !m.empty();
    if (!unit) os << rational_to_string(ac);
    bool first_f = true;
    for (auto& [v, e] : m.factors) {
      if (!first_f || !unit) os << "*";
      os << namer(v);
      if (e != 1) os << "^" << e;
      first_f = false;
    }
  }
  return os.str();
}

}  // namespace tuttekit
