#include "tuttekit/zeros.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "tuttekit/flows.hpp"
#include "tuttekit/multiaffine.hpp"
#include "tuttekit/tutte.hpp"

namespace tuttekit {

namespace {

using CLD = std::complex<long double>;

std::string fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

long double to_ld(const Rational& r) {
  return static_cast<long double>(numerator(r).convert_to<double>()) /
         static_cast<long double>(denominator(r).convert_to<double>());
}

// Horner evaluation plus derivative.
void eval_with_derivative(const std::vector<CLD>& c, const CLD& x, CLD& p, CLD& dp) {
  p = CLD(0);
  dp = CLD(0);
  for (size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
}

long double coeff_scale_at(const std::vector<CLD>& c, const CLD& x) {
  long double ax = std::abs(x);
  long double scale = 0, pow = 1;
  for (size_t i = 0; i < c.size(); ++i) {
    scale += std::abs(c[i]) * pow;
    pow *= ax;
  }
  return scale > 0 ? scale : 1;
}

std::complex<double> newton_polish(const std::vector<CLD>& c, std::complex<double> r0,
                                   double* residual_out) {
  CLD x(r0.real(), r0.imag());
  for (int it = 0; it < 60; ++it) {
    CLD p, dp;
    eval_with_derivative(c, x, p, dp);
    if (std::abs(p) == 0) break;
    if (std::abs(dp) == 0) break;  // multiple root; leave to clustering
    CLD step = p / dp;
    x -= step;
    if (std::abs(step) < 1e-18L * std::max<long double>(1, std::abs(x))) break;
  }
  CLD p, dp;
  eval_with_derivative(c, x, p, dp);
  if (residual_out) *residual_out = static_cast<double>(std::abs(p) / coeff_scale_at(c, x));
  return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
}

void cluster_multiplicities(RootSet& rs) {
  size_t d = rs.roots.size();
  rs.multiplicity.assign(d, 1);
  std::vector<size_t> owner(d);
  for (size_t i = 0; i < d; ++i) owner[i] = i;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      double thresh = 10 * rs.tolerance * std::max(1.0, std::abs(rs.roots[i]));
      if (std::abs(rs.roots[i] - rs.roots[j]) < thresh) {
        size_t a = owner[i], b = owner[j];
        if (a != b)
          for (auto& o : owner)
            if (o == b) o = a;
      }
    }
  std::vector<int> count(d, 0);
  for (size_t i = 0; i < d; ++i) ++count[owner[i]];
  for (size_t i = 0; i < d; ++i) rs.multiplicity[i] = count[owner[i]];
}

}  // namespace

std::vector<std::complex<double>> poly_roots_complex(std::vector<std::complex<double>> coeffs) {
  // strip high-order zeros
  while (!coeffs.empty() && std::abs(coeffs.back()) == 0) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("poly_roots_complex: zero polynomial");
  std::vector<std::complex<double>> roots;
  // exact zeros from a vanishing constant block
  size_t low = 0;
  while (low + 1 < coeffs.size() && std::abs(coeffs[low]) == 0) ++low;
  for (size_t i = 0; i < low; ++i) roots.push_back({0.0, 0.0});
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
  size_t d = coeffs.size() - 1;
  if (d == 0) return roots;
  // variable scaling keeps companion entries O(1) for lopsided coefficients
  double scale = 0;
  for (size_t i = 0; i < d; ++i) {
    double mag = std::abs(coeffs[i] / coeffs[d]);
    if (mag > 0) scale = std::max(scale, std::pow(mag, 1.0 / static_cast<double>(d - i)));
  }
  if (scale <= 0 || !std::isfinite(scale)) scale = 1;
  // substitute q = scale*z; monic coefficient of z^i is c_i / (c_d * scale^{d-i})
  std::vector<std::complex<double>> scaled(d);
  for (size_t i = 0; i < d; ++i)
    scaled[i] = coeffs[i] / (coeffs[d] * std::pow(scale, static_cast<double>(d - i)));
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(static_cast<long>(d), static_cast<long>(d));
  for (size_t i = 0; i + 1 < d; ++i) comp(static_cast<long>(i + 1), static_cast<long>(i)) = 1.0;
  for (size_t i = 0; i < d; ++i)
    comp(static_cast<long>(i), static_cast<long>(d - 1)) = -scaled[i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots_complex: eigenvalue iteration failed");
  std::vector<CLD> cl(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) cl[i] = CLD(coeffs[i].real(), coeffs[i].imag());
  for (long i = 0; i < static_cast<long>(d); ++i) {
    std::complex<double> raw = solver.eigenvalues()(i);
    roots.push_back(newton_polish(cl, raw * scale, nullptr));
  }
  return roots;
}

RootSet complex_roots(const std::vector<Rational>& coeffs, double tolerance) {
  size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1].is_zero()) --deg;
  if (deg == 0) throw std::invalid_argument("complex_roots: zero polynomial");
  std::vector<Rational> c(coeffs.begin(), coeffs.begin() + static_cast<long>(deg));

  RootSet rs;
  rs.tolerance = tolerance;
  rs.degree = static_cast<int>(deg - 1);
  {
    std::ostringstream os;
    for (auto& x : c) os << rational_to_string(x) << ",";
    rs.source_hash = fnv1a(os.str());
  }
  if (deg == 1) return rs;  // constant: no roots

  // monic rational normalization before the double conversion
  std::vector<CLD> cl(deg);
  std::vector<std::complex<double>> cd(deg);
  for (size_t i = 0; i < deg; ++i) {
    Rational m = c[i] / c[deg - 1];
    cl[i] = CLD(to_ld(m), 0.0L);
    cd[i] = {static_cast<double>(to_ld(m)), 0.0};
  }
  std::vector<std::complex<double>> raw = poly_roots_complex(cd);
  rs.max_residual = 0;
  for (auto& r : raw) {
    double res = 0;
    std::complex<double> polished = newton_polish(cl, r, &res);
    rs.roots.push_back(polished);
    rs.max_residual = std::max(rs.max_residual, res);
  }
  // conjugate symmetry: real coefficients mean roots pair up; snap near-real roots
  for (auto& r : rs.roots)
    if (std::abs(r.imag()) < tolerance * std::max(1.0, std::abs(r))) r = {r.real(), 0.0};
  cluster_multiplicities(rs);
  return rs;
}

RootSet complex_roots(const LaurentPoly& p, double tolerance) {
  if (p.is_zero()) throw std::invalid_argument("complex_roots: zero polynomial");
  int low = p.low_degree();
  std::vector<Rational> c;
  for (int e = low; e <= p.degree(); ++e) c.push_back(p.coeff(e));
  return complex_roots(c, tolerance);
}

RootSet chromatic_roots(const Multigraph& g, double tolerance) {
  for (auto& e : g.edges())
    if (e.is_loop()) throw std::invalid_argument("chromatic_roots: loop makes P identically zero");
  LaurentPoly p = chromatic_poly(g);
  if (p.is_zero()) throw std::invalid_argument("chromatic_roots: zero chromatic polynomial");
  int low = p.low_degree();  // = number of components
  RootSet rs = complex_roots(p.shifted(-low), tolerance);
  // the stripped q^{k(G)} factor contributes exact roots at the origin
  for (int i = 0; i < low; ++i) rs.roots.push_back({0.0, 0.0});
  rs.degree += low;
  cluster_multiplicities(rs);
  {
    std::ostringstream os;
    for (int e = p.low_degree(); e <= p.degree(); ++e) os << rational_to_string(p.coeff(e)) << ",";
    rs.source_hash = fnv1a(os.str());
  }
  return rs;
}

namespace {

int max_degree(const Multigraph& g) {
  std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
  for (auto& e : g.edges()) {
    deg[static_cast<size_t>(e.u)] += 1;
    deg[static_cast<size_t>(e.v)] += 1;  // loops count twice by falling through both ends
  }
  int best = 0;
  for (int d : deg) best = std::max(best, d);
  return best;
}

int second_degree(const Multigraph& g) {
  std::vector<int> deg(static_cast<size_t>(g.num_vertices()), 0);
  for (auto& e : g.edges()) {
    deg[static_cast<size_t>(e.u)] += 1;
    deg[static_cast<size_t>(e.v)] += 1;
  }
  std::sort(deg.begin(), deg.end(), std::greater<int>());
  return deg.size() >= 2 ? deg[1] : 0;
}

// q-coefficients of Z at a fixed Gaussian-rational edge binding
std::vector<GaussianRational> z_q_coeffs_at(const MultiAffinePoly& z,
                                            const std::map<int, GaussianRational>& v) {
  std::map<int, GaussianRational> byexp;
  const auto& uni = z.universe();
  for (auto& [mask, cq] : z.terms()) {
    GaussianRational prod{Rational(1), Rational(0)};
    for (size_t i = 0; i < uni.size(); ++i)
      if (mask & (uint32_t(1) << i)) prod = prod * v.at(uni[i]);
    for (auto& [e, coeff] : cq.terms()) {
      GaussianRational add = prod * GaussianRational{coeff, Rational(0)};
      auto it = byexp.find(e);
      if (it == byexp.end()) byexp[e] = add;
      else it->second = it->second + add;
    }
  }
  if (byexp.empty()) return {};
  int low = byexp.begin()->first, high = byexp.rbegin()->first;
  std::vector<GaussianRational> out;
  for (int e = low; e <= high; ++e) {
    auto it = byexp.find(e);
    out.push_back(it == byexp.end() ? GaussianRational{Rational(0), Rational(0)} : it->second);
  }
  return out;
}

}  // namespace

PropertyReport zero_free_disc_check(const Multigraph& g, long samples, uint64_t seed) {
  PropertyReport rep;
  rep.property = "zero-free-discs";
  rep.seed = seed;
  for (auto& e : g.edges())
    if (e.is_loop()) throw std::invalid_argument("zero_free_disc_check: loopless graphs only");
  if (g.num_edges() == 0) {
    rep.verdict = Verdict::ProvenExact;
    rep.detail = "edgeless graph; P(q) = q^n, nothing to check";
    return rep;
  }
  int delta = max_degree(g);
  int delta2 = second_degree(g);
  double bound1 = kRootDiscFactor * delta - kDiscBoundaryTol;
  double bound3 = kRootDiscFactor * delta2 - kDiscBoundaryTol;

  RootSet chrom = chromatic_roots(g);
  for (auto& r : chrom.roots) {
    if (std::abs(r) >= bound1) {
      rep.verdict = Verdict::Falsified;
      std::ostringstream os;
      os << "chromatic root " << r.real() << (r.imag() < 0 ? "" : "+") << r.imag()
         << "i outside |q| < " << kRootDiscFactor << "*Delta, Delta=" << delta;
      rep.witness = os.str();
      return rep;
    }
    if (std::min(std::abs(r), std::abs(r - std::complex<double>(1, 0))) >= bound3) {
      rep.verdict = Verdict::Falsified;
      std::ostringstream os;
      os << "chromatic root " << r.real() << (r.imag() < 0 ? "" : "+") << r.imag()
         << "i outside both discs of radius " << kRootDiscFactor << "*Delta2, Delta2=" << delta2;
      rep.witness = os.str();
      return rep;
    }
  }
  rep.samples = 1;

  // sampled edge weights in the closed disc |1+v| <= 1
  MultiAffinePoly z = graph_z(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-1000, 1000);
  for (long s = 0; s < samples; ++s) {
    std::map<int, GaussianRational> v;
    double vmax = 0;
    for (auto& e : g.edges()) {
      // w = 1 + v uniform-ish in the closed unit disc, rational coordinates
      Rational a, b;
      do {
        a = Rational(num(rng), 1000);
        b = Rational(num(rng), 1000);
      } while (a * a + b * b > Rational(1));
      GaussianRational ve{a - Rational(1), b};
      v[e.id] = ve;
      double re = static_cast<double>(to_ld(ve.re)), im = static_cast<double>(to_ld(ve.im));
      vmax = std::max(vmax, std::hypot(re, im));
    }
    if (vmax == 0) continue;
    std::vector<GaussianRational> qc = z_q_coeffs_at(z, v);
    std::vector<std::complex<double>> cd;
    std::vector<CLD> cl;
    for (auto& c : qc) {
      cd.push_back({static_cast<double>(to_ld(c.re)), static_cast<double>(to_ld(c.im))});
      cl.push_back(CLD(to_ld(c.re), to_ld(c.im)));
    }
    double bound2 = kRootDiscFactor * vmax * delta - kDiscBoundaryTol;
    for (auto& raw : poly_roots_complex(cd)) {
      double res = 0;
      std::complex<double> r = newton_polish(cl, raw, &res);
      if (std::abs(r) >= bound2) {
        rep.verdict = Verdict::Falsified;
        std::ostringstream os;
        os << "Z(q,v) root " << r.real() << (r.imag() < 0 ? "" : "+") << r.imag()
           << "i outside |q| < " << kRootDiscFactor << "*vmax*Delta = " << bound2 + kDiscBoundaryTol
           << " (sample " << s << ")";
        rep.witness = os.str();
        return rep;
      }
    }
    ++rep.samples;
  }
  rep.verdict = Verdict::HoldsOnSamples;
  std::ostringstream os;
  os << "Delta=" << delta << " Delta2=" << delta2 << " chromatic roots=" << chrom.roots.size()
     << " max residual=" << chrom.max_residual;
  rep.detail = os.str();
  return rep;
}

ConjectureExperimentReport conjecture_experiments(const Multigraph& g) {
  for (auto& e : g.edges())
    if (e.is_loop())
      throw std::invalid_argument("conjecture_experiments: loopless graphs only");
  ConjectureExperimentReport out;
  int lam = maxmaxflow(g);
  out.lambda = lam;
  out.roots = chromatic_roots(g);
  double tol = 1e-9;
  out.halfplane_re_le_lambda = true;
  for (auto& r : out.roots.roots) {
    out.max_abs_root = std::max(out.max_abs_root, std::abs(r));
    if (r.real() > lam + tol) out.halfplane_re_le_lambda = false;
  }

  // exact Taylor expansion of P about q = Lambda
  LaurentPoly p = chromatic_poly(g);
  int dlow = p.low_degree(), dhigh = p.degree();
  std::vector<Rational> c(static_cast<size_t>(dhigh + 1), Rational(0));
  for (int e = dlow; e <= dhigh; ++e) c[static_cast<size_t>(e)] = p.coeff(e);
  // shifted[j] = sum_i c_i * C(i,j) * lam^{i-j}, exactly
  std::vector<Rational> shifted(c.size(), Rational(0));
  Rational lamr(lam);
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    std::vector<Rational> binoms(i + 1);
    binoms[i] = Rational(1);
    for (size_t j = i; j-- > 0;)
      binoms[j] = binoms[j + 1] * Rational(static_cast<long>(j) + 1) /
                  Rational(static_cast<long>(i - j));
    Rational lampow(1);
    for (size_t j = i + 1; j-- > 0;) {
      shifted[j] += c[i] * binoms[j] * lampow;
      lampow *= lamr;
    }
  }
  out.taylor_nonneg_at_lambda = true;
  for (auto& s : shifted)
    if (s < 0) out.taylor_nonneg_at_lambda = false;

  if (out.taylor_nonneg_at_lambda) {
    out.positive_beyond_lambda = true;  // nonneg Taylor data at Lambda and P != 0
  } else {
    bool no_real_root_beyond = true;
    for (auto& r : out.roots.roots)
      if (std::abs(r.imag()) < tol && r.real() > lam + tol) no_real_root_beyond = false;
    bool positive_samples = true;
    for (int k : {1, 2, 4, 20}) {
      Rational at = Rational(lam) + Rational(k, 2);
      if (p.evaluate(at) <= 0) positive_samples = false;
    }
    out.positive_beyond_lambda = no_real_root_beyond && positive_samples;
  }
  std::ostringstream os;
  os << "lambda=" << lam << "; max|root|=" << out.max_abs_root
     << "; halfplane=" << out.halfplane_re_le_lambda
     << "; the halfplane predicate fails for known families of large planar graphs"
     << " (experimental data only, not a property gate)";
  out.notes = os.str();
  return out;
}

}  // namespace tuttekit
