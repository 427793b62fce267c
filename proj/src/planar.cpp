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

#include "fracflight/planar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fracflight/errors.hpp"
#include "fracflight/specfun.hpp"

namespace fracflight {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double clamp_radius(double r, double ct) {
  if (!(r <= ct)) throw DomainError("point lies outside the closed disc");
  return std::min(r, ct * (1.0 - 1e-12));
}

void check_spec(const ThinnedMotionSpec& s) {
  if (!(s.alpha > 0.0 && s.alpha <= 1.0)) {
    throw DomainError("ThinnedMotionSpec: alpha must lie in (0, 1]");
  }
  if (!(s.c > 0.0) || !(s.t > 0.0)) {
    throw DomainError("ThinnedMotionSpec: c and t must be positive");
  }
}

double open_disc_w(double x, double y, double ct) {
  const double r = std::hypot(x, y);
  if (!(r < ct)) throw DomainError("point must lie in the open disc");
  return std::sqrt((ct - r) * (ct + r));
}

}  // namespace

PlanarLaw::PlanarLaw(double alpha, double lambda, double c, double t)
    : alpha_(alpha), lambda_(lambda), c_(c), t_(t), counting_(alpha, lambda, t) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("PlanarLaw: c must be positive");
  }
  if (!(t > 0.0)) throw DomainError("PlanarLaw: t must be positive");
}

double PlanarLaw::conditional_density(unsigned n, double x, double y) const {
  return conditional_density_w(n, open_disc_w(x, y, radius()));
}

double PlanarLaw::conditional_density_w(unsigned n, double w) const {
  if (n == 0) throw DomainError("conditional_density: need n >= 1");
  const double ct = radius();
  if (!(w > 0.0 && w <= ct)) throw DomainError("conditional_density: need 0 < w <= ct");
  const double an = alpha_ * n;
  return std::exp(std::log(an / kTwoPi) - an * std::log(ct) +
                  (an - 2.0) * std::log(w));
}

double PlanarLaw::ac_density_radial(double r) const {
  const double ct = radius();
  if (!(r >= 0.0)) throw DomainError("ac_density_radial: need r >= 0");
  r = clamp_radius(r, ct);
  return ac_density_w(std::sqrt((ct - r) * (ct + r)));
}

double PlanarLaw::ac_density_w(double w) const {
  if (!(w > 0.0 && w <= radius())) throw DomainError("ac_density_w: need 0 < w <= ct");
  const double arg = lambda_ * std::pow(w / c_, alpha_);
  const SeriesSum e = mittag_leffler_sum(alpha_, alpha_, arg);
  return std::exp(std::log(lambda_ / kTwoPi) - alpha_ * std::log(c_) -
                  counting_.log_normalizer() + e.log_abs -
                  (2.0 - alpha_) * std::log(w));
}

PlanarDensity PlanarLaw::density(double x, double y) const {
  return {ac_density_radial(std::hypot(x, y)), boundary_mass()};
}

double PlanarLaw::boundary_mass() const {
  return std::exp(-counting_.log_normalizer());
}

double PlanarLaw::interior_mass() const {
  return -std::expm1(-counting_.log_normalizer());
}

Point2 PlanarLaw::sample_given_events(Rng& rng, unsigned n) const {
  const double ct = radius();
  const double th = kTwoPi * rng.uniform();
  double rho = ct;
  if (n > 0) {
    const double v = rng.uniform();
    // 1 - rho^2/(ct)^2 = V^{2/(n alpha)}
    rho = ct * std::sqrt(-std::expm1(2.0 / (n * alpha_) * std::log(v)));
  }
  return {rho * std::cos(th), rho * std::sin(th)};
}

Point2 PlanarLaw::sample(Rng& rng) const {
  return sample_given_events(rng, counting_.sample(rng));
}

double PlanarLaw::projection_density(double x) const {
  const double ct = radius();
  if (!(std::fabs(x) < ct)) {
    throw DomainError("projection_density: need |x| < ct");
  }
  return projection_density_w(std::sqrt((ct - x) * (ct + x)));
}

double PlanarLaw::projection_density_w(double w) const {
  if (!(w > 0.0 && w <= radius())) {
    throw DomainError("projection_density_w: need 0 < w <= ct");
  }
  const double log_w = std::log(w);
  const double log_p = std::log(lambda_) - alpha_ * std::log(2.0 * c_);
  const double log_e = counting_.log_normalizer();
  return sum_log_series([&](int k) {
           const double lg = k * log_p + (k * alpha_ - 1.0) * log_w -
                             2.0 * lgamma_signed(0.5 * (alpha_ * k + 1.0)).log_abs;
           return LogTerm{lg - log_e, 1, false};
         })
      .value();
}

double thinned_conditional_mean_density(const ThinnedMotionSpec& spec,
                                        double x, double y) {
  check_spec(spec);
  if (spec.n == 0) throw DomainError("thinned density: need n >= 1");
  const double ct = spec.c * spec.t;
  const double w = open_disc_w(x, y, ct);
  const double n = spec.n;
  const double a = spec.alpha;
  return n * a / (kTwoPi * w) *
         std::exp((n - 1.0) * std::log(ct + a * (w - ct)) - n * std::log(ct));
}

double thinned_unconditional_density(const ThinnedMotionSpec& spec,
                                     double lambda, double x, double y) {
  check_spec(spec);
  if (!(lambda > 0.0)) throw DomainError("thinned density: lambda must be > 0");
  const double ct = spec.c * spec.t;
  const double w = open_disc_w(x, y, ct);
  const double a = spec.alpha;
  if (spec.mixing == Mixing::kHomogeneous) {
    return lambda * a / (kTwoPi * spec.c) *
           std::exp(-(lambda * a / spec.c) * (ct - w)) / w;
  }
  const double arg = (lambda / spec.c) * (ct + a * (w - ct));
  const SeriesSum num = mittag_leffler_sum(a, a, arg);
  const SeriesSum den = mittag_leffler_sum(a, 1.0, lambda * spec.t);
  return lambda / (kTwoPi * spec.c * w) * std::exp(num.log_abs - den.log_abs);
}

double thinned_boundary_mass(const ThinnedMotionSpec& spec, double lambda) {
  check_spec(spec);
  // pgf of the mixing law at 1 - alpha
  return thinned_mixing_law(spec, lambda).pgf(1.0 - spec.alpha);
}

FracPoissonLaw thinned_mixing_law(const ThinnedMotionSpec& spec,
                                  double lambda) {
  check_spec(spec);
  if (spec.mixing == Mixing::kHomogeneous) {
    return FracPoissonLaw(1.0, lambda, spec.t);
  }
  // pmf proportional to (lambda t)^n / Gamma(alpha n + 1)
  return FracPoissonLaw(spec.alpha, lambda * std::pow(spec.t, 1.0 - spec.alpha),
                        spec.t);
}

ThinnedSimulator::ThinnedSimulator(const ThinnedMotionSpec& spec, double lambda)
    : spec_(spec), law_(thinned_mixing_law(spec, lambda)) {}

Point2 ThinnedSimulator::sample(Rng& rng) const {
  const unsigned n = law_.sample(rng);
  const unsigned k = sample_binomial(rng, n, spec_.alpha);
  std::vector<double> times(k + 2);
  times[0] = 0.0;
  for (unsigned j = 1; j <= k; ++j) times[j] = spec_.t * rng.uniform();
  times[k + 1] = spec_.t;
  std::sort(times.begin() + 1, times.begin() + 1 + k);
  Point2 p;
  for (unsigned j = 0; j <= k; ++j) {
    const double th = kTwoPi * rng.uniform();
    const double len = spec_.c * (times[j + 1] - times[j]);
    p.x += len * std::cos(th);
    p.y += len * std::sin(th);
  }
  return p;
}

Point2 simulate_thinned_path(const ThinnedMotionSpec& spec, double lambda,
                             Rng& rng) {
  return ThinnedSimulator(spec, lambda).sample(rng);
}

}  // namespace fracflight
