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

#include "fracflight/flights.hpp"

#include <cmath>
#include <numbers>

#include "fracflight/errors.hpp"
#include "fracflight/specfun.hpp"

namespace fracflight {

double ndim_solution(int dim, double alpha, double lambda, double c, double w) {
  if (dim < 1) throw DomainError("ndim_solution: dimension must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("ndim_solution: alpha must lie in (0, 1]");
  }
  if (!(lambda > 0.0) || !(c > 0.0)) {
    throw DomainError("ndim_solution: lambda and c must be positive");
  }
  if (!(w >= 0.0) || (w == 0.0 && alpha < 1.0)) {
    throw DomainError("ndim_solution: need w > 0");
  }
  const double p = lambda / std::pow(2.0 * c, alpha);
  const MultiIndexML e({alpha, alpha}, {alpha + 0.5 * (dim - 1), alpha});
  const double z = p * p * std::pow(w, 2.0 * alpha);
  if (w == 0.0) return multi_index_ml(e, 0.0);
  return std::pow(w, 2.0 * alpha - 2.0) * multi_index_ml(e, z);
}

SeriesSolution ndim_series(int dim, double alpha, double lambda, double c,
                           int terms) {
  const double log_p = std::log(lambda) - alpha * std::log(2.0 * c);
  std::vector<SeriesTerm> out;
  for (int k = 0; k < terms; ++k) {
    const double lg =
        2.0 * k * log_p -
        lgamma_signed(alpha * k + alpha + 0.5 * (dim - 1)).log_abs -
        lgamma_signed(alpha * k + alpha).log_abs;
    out.push_back({std::exp(lg), 2.0 * alpha * k + 2.0 * alpha - 2.0});
  }
  return SeriesSolution(std::move(out), VariableMap::kLightConeND);
}

FlightLaw::FlightLaw(FlightKind kind, int dim, double alpha, double lambda,
                     double c, double t, double counting_index)
    : kind_(kind),
      dim_(dim),
      alpha_(alpha),
      lambda_(lambda),
      c_(c),
      t_(t),
      counting_(counting_index, lambda, t) {
  if (!(c > 0.0) || !(t > 0.0)) {
    throw DomainError("FlightLaw: c and t must be positive");
  }
}

FlightLaw FlightLaw::fractional(int dim, double alpha, double lambda, double c,
                                double t) {
  if (dim < 1) throw DomainError("FlightLaw: dimension must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("FlightLaw::fractional: alpha must lie in (0, 1]");
  }
  return FlightLaw(FlightKind::kFractional, dim, alpha, lambda, c, t, alpha);
}

FlightLaw FlightLaw::four_d(double alpha, double lambda, double c, double t) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw DomainError("FlightLaw::four_d: alpha must lie in (1, 2]");
  }
  return FlightLaw(FlightKind::kFourD, 4, alpha, lambda, c, t, 0.5 * alpha);
}

double FlightLaw::conditional_density_radial(unsigned k, double r) const {
  const double ct = radius();
  if (!(r >= 0.0 && r < ct)) {
    throw DomainError("conditional_density: point must lie in the open ball");
  }
  return conditional_density_w(k, std::sqrt((ct - r) * (ct + r)));
}

double FlightLaw::conditional_density_w(unsigned k, double w) const {
  if (k == 0) throw DomainError("conditional_density: need k >= 1");
  const double ct = radius();
  if (!(w > 0.0 && w <= ct)) throw DomainError("conditional_density: need 0 < w <= ct");
  const double ak = alpha_ * k;
  const double n = dim_;
  return std::exp(lgamma_signed(0.5 * (ak + n)).log_abs + (ak - 2.0) * std::log(w) -
                  (ak + n - 2.0) * std::log(ct) -
                  lgamma_signed(0.5 * ak).log_abs -
                  0.5 * n * std::log(std::numbers::pi));
}

namespace {

double norm_of(std::span<const double> x, int dim) {
  if (static_cast<int>(x.size()) != dim) {
    throw DomainError("point has the wrong dimension");
  }
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

double FlightLaw::conditional_density(unsigned k,
                                      std::span<const double> x) const {
  return conditional_density_radial(k, norm_of(x, dim_));
}

double FlightLaw::density_radial(double r) const {
  const double ct = radius();
  if (!(r >= 0.0 && r < ct)) {
    throw DomainError("density: point must lie in the open ball");
  }
  return density_w(std::sqrt((ct - r) * (ct + r)));
}

double FlightLaw::density_w(double w) const {
  if (kind_ != FlightKind::kFourD) {
    throw DomainError("density: only defined for the 4D flight");
  }
  const double ct = radius();
  if (!(w > 0.0 && w <= ct)) throw DomainError("density: need 0 < w <= ct");
  const double a = alpha_;
  const double log_w = std::log(w);
  const double log_q = std::log(lambda_) - a * std::log(c_) - 0.5 * a * std::log(t_);
  const double zeta = std::exp(log_q + a * log_w);
  const double bracket = mittag_leffler(0.5 * a, 0.5 * a - 1.0, zeta) +
                         2.0 * mittag_leffler(0.5 * a, 0.5 * a, zeta);
  return bracket * std::exp(log_q + (a - 2.0) * log_w -
                            2.0 * std::log(std::numbers::pi) -
                            2.0 * std::log(ct) - counting_.log_normalizer());
}

double FlightLaw::density(std::span<const double> x) const {
  return density_radial(norm_of(x, dim_));
}

double FlightLaw::boundary_mass() const {
  return std::exp(-counting_.log_normalizer());
}

std::vector<double> FlightLaw::sample_given_events(Rng& rng, unsigned k) const {
  std::vector<double> v(dim_);
  double s;
  do {
    s = 0.0;
    for (auto& e : v) {
      e = rng.normal();
      s += e * e;
    }
  } while (s == 0.0);
  double r = radius();
  if (k > 0) r *= std::sqrt(sample_beta(rng, 0.5 * dim_, 0.5 * alpha_ * k));
  const double f = r / std::sqrt(s);
  for (auto& e : v) e *= f;
  return v;
}

std::array<double, 4> FlightLaw::sample_4d(Rng& rng) const {
  if (kind_ != FlightKind::kFourD) {
    throw DomainError("sample_4d: law is not a 4D flight");
  }
  const std::vector<double> v = sample_given_events(rng, counting_.sample(rng));
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace fracflight
