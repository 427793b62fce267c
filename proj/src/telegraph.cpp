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

#include "fracflight/telegraph.hpp"

#include <cmath>
#include <string>

#include "fracflight/errors.hpp"
#include "fracflight/specfun.hpp"

namespace fracflight {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1]");
  }
}

}  // namespace

const char* to_string(ShapeClass s) {
  switch (s) {
    case ShapeClass::kArcsine:
      return "arcsine";
    case ShapeClass::kUniform:
      return "uniform";
    case ShapeClass::kBell:
      return "bell";
  }
  return "unknown";
}

double shape_exponent(double alpha, unsigned k, Parity parity) {
  check_alpha(alpha);
  if (parity == Parity::kEven) {
    if (k == 0) throw DomainError("classify_shape: even parity needs k >= 1");
    return alpha * k - 1.0;
  }
  return alpha * k + 0.5 * (alpha - 1.0);
}

ShapeClass classify_shape(double alpha, unsigned k, Parity parity,
                          double tol) {
  const double e = shape_exponent(alpha, k, parity);
  if (std::fabs(e) <= tol) return ShapeClass::kUniform;
  return e < 0.0 ? ShapeClass::kArcsine : ShapeClass::kBell;
}

TelegraphLaw::TelegraphLaw(double alpha, double lambda, double c, double t)
    : alpha_(alpha),
      lambda_(lambda),
      c_(c),
      t_(t),
      counting_(alpha, lambda, t) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("TelegraphLaw: c must be positive");
  }
  if (!(t > 0.0)) throw DomainError("TelegraphLaw: t must be positive");
}

double TelegraphLaw::beta_shape(unsigned n) const {
  if (n == 0) throw DomainError("beta_shape: need n >= 1");
  if (n % 2 == 0) return 0.5 * alpha_ * n;
  return 0.5 * (alpha_ * n + 1.0);
}

double TelegraphLaw::conditional_density(unsigned n, double x) const {
  const double ct = half_width();
  if (!(std::fabs(x) < ct)) {
    throw DomainError("conditional_density: need |x| < ct");
  }
  return conditional_density_w(n, std::sqrt((ct - x) * (ct + x)));
}

double TelegraphLaw::conditional_density_w(unsigned n, double w) const {
  if (n == 0) throw DomainError("conditional_density: need n >= 1 events");
  const double ct = half_width();
  if (!(w > 0.0 && w <= ct)) throw DomainError("conditional_density: need 0 < w <= ct");
  const double a = beta_shape(n);
  const double lg = lgamma_signed(2.0 * a).log_abs -
                    2.0 * lgamma_signed(a).log_abs + 2.0 * (a - 1.0) * std::log(w) -
                    (2.0 * a - 1.0) * std::log(2.0 * ct);
  return std::exp(lg);
}

double TelegraphLaw::singular_weight() const {
  return 0.5 * std::exp(-counting_.log_normalizer());
}

MixedDensity TelegraphLaw::density(double x) const {
  const double ct = half_width();
  if (!(std::fabs(x) <= ct)) {
    throw DomainError("density: need |x| <= ct");
  }
  const double lim = ct * (1.0 - 1e-12);
  if (x > lim) x = lim;
  if (x < -lim) x = -lim;
  return {ac_density_w(std::sqrt((ct - x) * (ct + x))), singular_weight()};
}

double TelegraphLaw::ac_density_w(double w) const {
  const double ct = half_width();
  if (!(w > 0.0 && w <= ct)) throw DomainError("ac_density_w: need 0 < w <= ct");
  const double log_w2 = 2.0 * std::log(w);
  const double log_p = std::log(lambda_) - alpha_ * std::log(2.0 * c_);
  const double log_ct = std::log(ct);
  const double log_e = counting_.log_normalizer();
  // n = j + 1 events; even n = 2k and odd n = 2k + 1 alternate.
  const SeriesSum s = sum_log_series([&](int j) {
    const int n = j + 1;
    double lg;
    if (n % 2 == 0) {
      const int k = n / 2;
      lg = log_ct + 2.0 * k * log_p + (alpha_ * k - 1.0) * log_w2 -
           lgamma_signed(alpha_ * k).log_abs -
           lgamma_signed(alpha_ * k + 1.0).log_abs;
    } else {
      const int k = (n - 1) / 2;
      lg = (2.0 * k + 1.0) * log_p +
           (alpha_ * k + 0.5 * (alpha_ - 1.0)) * log_w2 -
           2.0 * lgamma_signed(alpha_ * k + 0.5 * (1.0 + alpha_)).log_abs;
    }
    return LogTerm{lg - log_e, 1, false};
  });
  return s.value();
}

double TelegraphLaw::sample_given_events(Rng& rng, unsigned n) const {
  const double ct = half_width();
  if (n == 0) return rng.uniform() < 0.5 ? -ct : ct;
  const double a = beta_shape(n);
  return ct * (2.0 * sample_beta(rng, a, a) - 1.0);
}

double TelegraphLaw::sample_position(Rng& rng) const {
  return sample_given_events(rng, counting_.sample(rng));
}

SeriesSolution TelegraphLaw::even_mixture_series(int terms) const {
  const double p = lambda_ / std::pow(2.0 * c_, alpha_);
  const double ct = half_width();
  std::vector<SeriesTerm> out;
  for (int k = 1; k <= terms; ++k) {
    const double lg = 2.0 * k * std::log(p) -
                      lgamma_signed(alpha_ * k).log_abs -
                      lgamma_signed(alpha_ * k + 1.0).log_abs;
    out.push_back({ct * std::exp(lg), 2.0 * alpha_ * k - 2.0});
  }
  return SeriesSolution(std::move(out), VariableMap::kLightCone1D);
}

SeriesSolution TelegraphLaw::odd_mixture_series(int terms) const {
  const double p = lambda_ / std::pow(2.0 * c_, alpha_);
  std::vector<SeriesTerm> out;
  for (int k = 0; k < terms; ++k) {
    const double lg =
        (2.0 * k + 1.0) * std::log(p) -
        2.0 * lgamma_signed(alpha_ * k + 0.5 * (1.0 + alpha_)).log_abs;
    out.push_back({std::exp(lg), 2.0 * alpha_ * k + alpha_ - 1.0});
  }
  return SeriesSolution(std::move(out), VariableMap::kLightCone1D);
}

}  // namespace fracflight
