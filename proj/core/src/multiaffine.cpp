#include "tuttekit/multiaffine.hpp"

#include <algorithm>
#include <sstream>

namespace tuttekit {

namespace {
int g_universe_cap = 24;
}

int multiaffine_universe_cap() { return g_universe_cap; }
void set_multiaffine_universe_cap(int cap) {
  if (cap < 0 || cap > 30) throw std::invalid_argument("universe cap must be in [0, 30]");
  g_universe_cap = cap;
}

MultiAffinePoly::MultiAffinePoly(std::vector<int> universe) : universe_(std::move(universe)) {
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
  check_universe_cap();
}

void MultiAffinePoly::check_universe_cap() const {
  if (static_cast<int>(universe_.size()) > g_universe_cap)
    throw CapExceededError("symbolic variable universe exceeds cap of " +
                           std::to_string(g_universe_cap) + " (2^cap monomials)");
}

MultiAffinePoly MultiAffinePoly::var(int id, const LaurentPoly& c) {
  MultiAffinePoly p(std::vector<int>{id});
  if (!c.is_zero()) p.t_[1] = c;
  return p;
}

bool MultiAffinePoly::is_q_poly() const {
  for (auto& [m, c] : t_)
    if (m != 0) return false;
  return true;
}

LaurentPoly MultiAffinePoly::q_poly() const {
  if (!is_q_poly()) throw std::domain_error("MultiAffinePoly: edge variables present");
  auto it = t_.find(0);
  return it == t_.end() ? LaurentPoly() : it->second;
}

LaurentPoly MultiAffinePoly::coeff(uint32_t mask) const {
  auto it = t_.find(mask);
  return it == t_.end() ? LaurentPoly() : it->second;
}

LaurentPoly MultiAffinePoly::coeff_of(const std::vector<int>& vars) const {
  uint32_t mask = 0;
  for (int v : vars) {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
    if (it == universe_.end() || *it != v)
      throw UnknownVariableError("variable " + default_var_name(v) + " not in universe");
    mask |= 1u << (it - universe_.begin());
  }
  return coeff(mask);
}

void MultiAffinePoly::add_term(uint32_t mask, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = t_.find(mask);
  if (it == t_.end()) t_[mask] = c;
  else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

std::set<int> MultiAffinePoly::appearing_vars() const {
  std::set<int> out;
  for (auto& [m, c] : t_)
    for (size_t i = 0; i < universe_.size(); ++i)
      if (m & (1u << i)) out.insert(universe_[i]);
  return out;
}

int MultiAffinePoly::degree_q() const {
  if (t_.empty()) throw std::domain_error("degree_q of zero polynomial");
  int d = INT32_MIN;
  for (auto& [m, c] : t_) d = std::max(d, c.degree());
  return d;
}

int MultiAffinePoly::low_degree_q() const {
  if (t_.empty()) throw std::domain_error("low_degree_q of zero polynomial");
  int d = INT32_MAX;
  for (auto& [m, c] : t_) d = std::min(d, c.low_degree());
  return d;
}

MultiAffinePoly MultiAffinePoly::aligned_to(const std::vector<int>& universe) const {
  MultiAffinePoly out(universe);
  // bit translation table old -> new
  std::vector<int> tr(universe_.size());
  for (size_t i = 0; i < universe_.size(); ++i) {
    auto it = std::lower_bound(out.universe_.begin(), out.universe_.end(), universe_[i]);
    if (it == out.universe_.end() || *it != universe_[i])
      throw UnknownVariableError("aligned_to: universe does not cover the polynomial");
    tr[i] = static_cast<int>(it - out.universe_.begin());
  }
  for (auto& [m, c] : t_) {
    uint32_t nm = 0;
    for (size_t i = 0; i < universe_.size(); ++i)
      if (m & (1u << i)) nm |= 1u << tr[i];
    out.t_[nm] = c;
  }
  return out;
}

static std::vector<int> universe_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

MultiAffinePoly MultiAffinePoly::operator-() const {
  MultiAffinePoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  auto u = universe_union(a.universe_, b.universe_);
  MultiAffinePoly ra = a.aligned_to(u);
  MultiAffinePoly rb = b.aligned_to(u);
  for (auto& [m, c] : rb.t_) ra.add_term(m, c);
  return ra;
}

MultiAffinePoly operator-(const MultiAffinePoly& a, const MultiAffinePoly& b) { return a + (-b); }

MultiAffinePoly operator*(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  std::set<int> va = a.appearing_vars(), vb = b.appearing_vars();
  for (int v : va)
    if (vb.count(v))
      throw NonMultiaffineError("product would square edge variable " + default_var_name(v));
  auto u = universe_union(a.universe_, b.universe_);
  MultiAffinePoly ra = a.aligned_to(u);
  MultiAffinePoly rb = b.aligned_to(u);
  MultiAffinePoly out(u);
  for (auto& [ma, ca] : ra.t_)
    for (auto& [mb, cb] : rb.t_) out.add_term(ma | mb, ca * cb);
  return out;
}

bool operator==(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  auto u = universe_union(a.universe_, b.universe_);
  return a.aligned_to(u).t_ == b.aligned_to(u).t_;
}

MultiAffinePoly MultiAffinePoly::scaled(const LaurentPoly& c) const {
  MultiAffinePoly out(universe_);
  if (c.is_zero()) return out;
  for (auto& [m, cc] : t_) out.t_[m] = cc * c;
  return out;
}

MultiAffinePoly MultiAffinePoly::divide_coeffs_exact(const LaurentPoly& d) const {
  MultiAffinePoly out(universe_);
  for (auto& [m, cc] : t_) out.t_[m] = cc.divide_exact(d);
  return out;
}

MultiAffinePoly MultiAffinePoly::substitute_partial(const std::map<int, LaurentPoly>& bindings) const {
  std::vector<int> rest;
  std::vector<int> bound_bits;
  for (size_t i = 0; i < universe_.size(); ++i) {
    if (bindings.count(universe_[i])) bound_bits.push_back(static_cast<int>(i));
    else rest.push_back(universe_[i]);
  }
  for (auto& [v, val] : bindings)
    if (!std::binary_search(universe_.begin(), universe_.end(), v))
      throw UnknownVariableError("substitute_partial: variable " + default_var_name(v) + " not in universe");
  MultiAffinePoly out(rest);
  for (auto& [m, c] : t_) {
    LaurentPoly factor = c;
    uint32_t nm = 0;
    int nbit = 0;
    bool dead = false;
    for (size_t i = 0; i < universe_.size() && !dead; ++i) {
      bool in_term = m & (1u << i);
      auto bit = bindings.find(universe_[i]);
      if (bit != bindings.end()) {
        if (in_term) {
          factor *= bit->second;
          if (factor.is_zero()) dead = true;
        }
      } else {
        if (in_term) nm |= 1u << nbit;
        ++nbit;
      }
    }
    if (!dead) out.add_term(nm, factor);
  }
  return out;
}

MultiAffinePoly MultiAffinePoly::substitute_q(const Rational& q) const {
  MultiAffinePoly out(universe_);
  for (auto& [m, c] : t_) out.add_term(m, LaurentPoly(c.evaluate(q)));
  return out;
}

MultiAffinePoly MultiAffinePoly::reciprocal_transform() const {
  MultiAffinePoly out(universe_);
  uint32_t full = universe_.empty() ? 0 : (uint32_t(1) << universe_.size()) - 1;
  for (auto& [m, c] : t_) {
    int popcount = __builtin_popcount(m);
    out.add_term(full & ~m, c.shifted(popcount));
  }
  return out;
}

MultiAffinePoly MultiAffinePoly::complement_transform() const {
  MultiAffinePoly out(universe_);
  uint32_t full = universe_.empty() ? 0 : (uint32_t(1) << universe_.size()) - 1;
  for (auto& [m, c] : t_) out.add_term(full & ~m, c);
  return out;
}

MultiAffinePoly MultiAffinePoly::rescale_vars_by_q() const {
  MultiAffinePoly out(universe_);
  for (auto& [m, c] : t_) out.add_term(m, c.shifted(__builtin_popcount(m)));
  return out;
}

MultiAffinePoly MultiAffinePoly::substitute_affine_fraction(int var, const MultiAffinePoly& num,
                                                            const MultiAffinePoly& den) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), var);
  if (it == universe_.end() || *it != var)
    throw UnknownVariableError("substitute_affine_fraction: variable not in universe");
  uint32_t bit = 1u << (it - universe_.begin());
  std::vector<int> rest;
  for (int v : universe_)
    if (v != var) rest.push_back(v);
  MultiAffinePoly p(rest), qpart(rest);
  for (auto& [m, c] : t_) {
    uint32_t nm = 0;
    int nbit = 0;
    for (size_t i = 0; i < universe_.size(); ++i) {
      if (universe_[i] == var) continue;
      if (m & (1u << i)) nm |= 1u << nbit;
      ++nbit;
    }
    if (m & bit) qpart.add_term(nm, c);
    else p.add_term(nm, c);
  }
  return p * den + qpart * num;
}

Rational MultiAffinePoly::evaluate(const Rational& q, const std::map<int, Rational>& point) const {
  Rational acc(0);
  for (auto& [m, c] : t_) {
    Rational term = c.evaluate(q);
    for (size_t i = 0; i < universe_.size(); ++i)
      if (m & (1u << i)) {
        auto it = point.find(universe_[i]);
        if (it == point.end())
          throw UnknownVariableError("evaluate: unbound variable " + default_var_name(universe_[i]));
        term *= it->second;
      }
    acc += term;
  }
  return acc;
}

GaussianRational MultiAffinePoly::evaluate_gaussian(const GaussianRational& q,
                                                    const std::map<int, GaussianRational>& point) const {
  GaussianRational acc;
  for (auto& [m, c] : t_) {
    GaussianRational term = c.evaluate(q);
    for (size_t i = 0; i < universe_.size(); ++i)
      if (m & (1u << i)) {
        auto it = point.find(universe_[i]);
        if (it == point.end())
          throw UnknownVariableError("evaluate_gaussian: unbound variable");
        term *= it->second;
      }
    acc += term;
  }
  return acc;
}

std::complex<double> MultiAffinePoly::evaluate_complex(const std::complex<double>& q,
                                                       const std::map<int, std::complex<double>>& point) const {
  std::complex<double> acc = 0.0;
  for (auto& [m, c] : t_) {
    std::complex<double> term = 0.0;
    for (auto& [e, v] : c.terms()) term += to_double(v) * std::pow(q, e);
    for (size_t i = 0; i < universe_.size(); ++i)
      if (m & (1u << i)) {
        auto it = point.find(universe_[i]);
        if (it == point.end())
          throw UnknownVariableError("evaluate_complex: unbound variable");
        term *= it->second;
      }
    acc += term;
  }
  return acc;
}

SparsePoly MultiAffinePoly::to_sparse() const {
  SparsePoly out;
  for (auto& [m, c] : t_) {
    for (auto& [e, v] : c.terms()) {
      Monomial mono;
      if (e != 0) mono.factors.emplace_back(kVarQ, e);
      for (size_t i = 0; i < universe_.size(); ++i)
        if (m & (1u << i)) mono.factors.emplace_back(universe_[i], 1);
      std::sort(mono.factors.begin(), mono.factors.end());
      out.add_term(mono, v);
    }
  }
  return out;
}

std::string MultiAffinePoly::serialize() const {
  std::ostringstream os;
  os << "u[";
  for (int v : universe_) os << v << ",";
  os << "]";
  for (auto& [m, c] : t_) os << m << ":" << c.to_string() << ";";
  return os.str();
}

std::string MultiAffinePoly::to_string(const VarNamer& namer) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : t_) {
    std::string cs = c.to_string();
    if (!first) os << " + ";
    first = false;
    bool needs_parens = cs.find(' ') != std::string::npos;
    if (m == 0) {
      os << cs;
      continue;
    }
    if (cs == "1") {
    } else if (cs == "-1") {
      os << "-";
    } else if (needs_parens) {
      os << "(" << cs << ")*";
    } else {
      os << cs << "*";
    }
    bool firstv = true;
    for (size_t i = 0; i < universe_.size(); ++i)
      if (m & (1u << i)) {
        if (!firstv) os << "*";
        os << namer(universe_[i]);
        firstv = false;
      }
  }
  return os.str();
}

void PolyFraction::reduce_light() {
  if (num.is_zero()) {
    den = MultiAffinePoly(LaurentPoly(Rational(1)));
    return;
  }
  // common q-power
  int shift = std::min(num.low_degree_q(), den.low_degree_q());
  if (shift != 0) {
    num = num.divide_coeffs_exact(LaurentPoly::var_power(shift));
    den = den.divide_coeffs_exact(LaurentPoly::var_power(shift));
  }
  // rational content (make denominator's first stored coefficient's leading term 1-normalized)
  auto content = [](const MultiAffinePoly& p) {
    Int num_gcd(0), den_lcm(1);
    for (auto& [m, c] : p.terms())
      for (auto& [e, v] : c.terms()) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(v));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(v));
      }
    if (num_gcd.is_zero()) num_gcd = 1;
    return Rational(num_gcd, den_lcm);
  };
  Rational cn = content(num), cd = content(den);
  Rational g = cn / cd;  // scale so den content becomes 1 relative to num
  num = num.scaled(Rational(1) / cn);
  den = den.scaled(Rational(1) / cd);
  num = num.scaled(g);
  // exact division when den | num coefficient-wise through q-polys
  if (den.is_q_poly()) {
    LaurentPoly d = den.q_poly();
    if (!d.is_zero()) {
      try {
        MultiAffinePoly q = num.divide_coeffs_exact(d);
        num = q;
        den = MultiAffinePoly(LaurentPoly(Rational(1)));
      } catch (const std::domain_error&) {
        // keep fraction; q-only gcd still possible
        if (num.is_q_poly()) {
          LaurentPoly n = num.q_poly();
          LaurentPoly g2 = laurent_gcd(n, d);
          bool nontrivial = !(g2.is_constant());
          if (nontrivial) {
            num = MultiAffinePoly(n.divide_exact(g2));
            den = MultiAffinePoly(d.divide_exact(g2));
          }
        }
      }
    }
  }
}

}  // namespace tuttekit
