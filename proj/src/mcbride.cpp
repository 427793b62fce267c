// Copyright 2026 The fracflight Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fracflight/mcbride.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "fracflight/errors.hpp"
#include "fracflight/specfun.hpp"

namespace fracflight {

HyperBesselOp::HyperBesselOp(int n, std::vector<double> a)
    : n_(n), a_(std::move(a)) {
  if (n_ < 1) throw DomainError("HyperBesselOp: order must be >= 1");
  if (static_cast<int>(a_.size()) != n_ + 1) {
    throw DomainError("HyperBesselOp: need n + 1 coefficients");
  }
  for (double v : a_) {
    if (!std::isfinite(v)) throw DomainError("HyperBesselOp: non-finite a_k");
  }
  a_sum_ = std::accumulate(a_.begin(), a_.end(), 0.0);
  m_ = std::fabs(a_sum_ - n_);
  if (!(m_ > 0.0)) throw DomainError("HyperBesselOp: m = |a - n| must be > 0");
  b_.resize(n_);
  for (int k = 1; k <= n_; ++k) {
    double tail = 0.0;
    for (int i = k + 1; i <= n_ + 1; ++i) tail += a_[i - 1];
    b_[k - 1] = (tail + k - n_) / m_;
  }
}

HyperBesselOp HyperBesselOp::bessel_1d() { return {2, {-1.0, 1.0, 0.0}}; }
HyperBesselOp HyperBesselOp::bessel_2d() { return {2, {-2.0, 2.0, 0.0}}; }

HyperBesselOp HyperBesselOp::bessel_nd(int dim) {
  if (dim < 1) throw DomainError("bessel_nd: dimension must be >= 1");
  return {2, {-static_cast<double>(dim), static_cast<double>(dim), 0.0}};
}

HyperBesselOp HyperBesselOp::third_order() {
  return {3, {-2.0, 1.0, 1.0, 0.0}};
}

HyperBesselOp HyperBesselOp::hyper_bessel(int n) {
  if (n < 1) throw DomainError("hyper_bessel operator: order must be >= 1");
  std::vector<double> a(n + 1, 1.0);
  a[0] = 1.0 - n;
  a[n] = 0.0;
  return {n, a};
}

HyperBesselOp HyperBesselOp::epd(double chi) { return {2, {-chi, chi, 0.0}}; }

SeriesSolution::SeriesSolution(std::vector<SeriesTerm> terms, VariableMap map)
    : terms_(std::move(terms)), map_(map) {
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coefficient) || !std::isfinite(t.exponent)) {
      throw DomainError("SeriesSolution: non-finite term");
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const SeriesTerm& a, const SeriesTerm& b) {
              return a.exponent < b.exponent;
            });
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (!(terms_[i].exponent > terms_[i - 1].exponent)) {
      throw DomainError("SeriesSolution: exponents must be strictly increasing");
    }
  }
}

double SeriesSolution::evaluate(double w) const {
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw DomainError("SeriesSolution::evaluate: need finite w >= 0");
  }
  double sum = 0.0, comp = 0.0;
  for (const auto& t : terms_) {
    if (t.coefficient == 0.0) continue;
    const double v = t.coefficient * std::pow(w, t.exponent);
    const double s = sum + v;
    comp += std::fabs(sum) >= std::fabs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return sum + comp;
}

double SeriesSolution::leading_exponent() const {
  for (const auto& t : terms_) {
    if (t.coefficient != 0.0) return t.exponent;
  }
  return std::numeric_limits<double>::infinity();
}

double ek_monomial(double m, double eta, double alpha, double beta) {
  if (!(m > 0.0)) throw DomainError("ek_monomial: m must be positive");
  const double num = eta + beta / m + 1.0;
  if (!(num > 0.0)) {
    std::ostringstream msg;
    msg << "ek_monomial: eta + beta/m + 1 = " << num
        << " must be positive (beta = " << beta << ")";
    throw PreconditionError(msg.str());
  }
  const double den = alpha + num;
  if (is_gamma_pole(den)) return 0.0;
  const SignedLog ln = lgamma_signed(num);
  const SignedLog ld = lgamma_signed(den);
  return ld.sign * std::exp(ln.log_abs - ld.log_abs);
}

double ek_integral(double m, double eta, double alpha, const RealFn& f,
                   double x, double f_power_at_zero) {
  if (!(m > 0.0)) throw DomainError("ek_integral: m must be positive");
  if (!(alpha > 0.0)) throw DomainError("ek_integral: alpha must be positive");
  if (!(x > 0.0)) throw DomainError("ek_integral: x must be positive");
  // u^m = x^m s, then s = 1 - (1 - v)^{1/alpha}; the kernel becomes 1/alpha.
  const double inv_alpha = 1.0 / alpha;
  const double inv_m = 1.0 / m;
  const RealFn g = [&](double v) {
    const double s = -std::expm1(inv_alpha * std::log1p(-v));
    return std::pow(s, eta) * f(x * std::pow(s, inv_m));
  };
  const double p = std::max(eta + f_power_at_zero * inv_m, -0.999);
  QuadOptions opts;
  opts.abs_tol = 1e-13;
  opts.rel_tol = 1e-13;
  const QuadResult r = integrate_endpoint_powers(g, 0.0, 1.0, p, 0.0, opts);
  return r.value / gamma_real(alpha + 1.0);
}

double ek_negative_order(double m, double eta, double alpha, const RealFn& f,
                         const RealFn& fprime, double x,
                         double f_power_at_zero) {
  if (!(alpha > -1.0) || alpha > 0.0) {
    throw DomainError("ek_negative_order: need -1 < alpha <= 0");
  }
  const RealFn xfp = [&](double u) { return u * fprime(u); };
  const double a1 = alpha + 1.0;
  return (eta + a1) * ek_integral(m, eta, a1, f, x, f_power_at_zero) +
         ek_integral(m, eta, a1, xfp, x, f_power_at_zero) / m;
}

MonomialAction kober_monomial(double m, double alpha, double beta) {
  return {ek_monomial(m, 0.0, alpha, beta), beta + m * alpha};
}

MonomialAction op_monomial(const HyperBesselOp& op, double alpha,
                           double beta) {
  const double m = op.m();
  const int n = op.order();
  double log_abs = n * alpha * std::log(m);
  int sign = 1;
  bool zero = false;
  for (double bk : op.b()) {
    const double num = bk + beta / m + 1.0;
    if (!(num > 0.0)) {
      std::ostringstream msg;
      msg << "op_monomial: Erdelyi-Kober factor with eta = " << bk
          << " undefined for beta = " << beta;
      throw PreconditionError(msg.str());
    }
    const double den = num - alpha;
    // Exponents built by repeated addition land a few ulps off a pole.
    if (den <= 1e-12 &&
        std::fabs(den - std::round(den)) <= 1e-12 * std::max(1.0, std::fabs(den))) {
      zero = true;
      continue;
    }
    const SignedLog ln = lgamma_signed(num);
    const SignedLog ld = lgamma_signed(den);
    log_abs += ln.log_abs - ld.log_abs;
    sign *= ld.sign;
  }
  MonomialAction out;
  out.exponent = beta - m * alpha;
  out.coefficient = zero ? 0.0 : sign * std::exp(log_abs);
  return out;
}

SeriesSolution apply_to_series(const HyperBesselOp& op, double alpha,
                               const SeriesSolution& s) {
  std::vector<SeriesTerm> out;
  out.reserve(s.size());
  for (const auto& t : s.terms()) {
    if (t.coefficient == 0.0) continue;
    MonomialAction act;
    try {
      act = op_monomial(op, alpha, t.exponent);
    } catch (const PreconditionError& e) {
      std::ostringstream msg;
      msg << "term with exponent " << t.exponent << ": " << e.what();
      throw PreconditionError(msg.str());
    }
    const double c = act.coefficient * t.coefficient;
    if (c != 0.0) out.push_back({c, act.exponent});
  }
  return SeriesSolution(std::move(out), s.map());
}

}  // namespace fracflight
