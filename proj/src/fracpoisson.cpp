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

#include "fracflight/fracpoisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracflight/errors.hpp"
#include "fracflight/specfun.hpp"

namespace fracflight {
namespace {

constexpr double kTailTarget = 1e-12;
constexpr unsigned kTableCap = 10000;

}  // namespace

FracPoissonLaw::FracPoissonLaw(double alpha, double lambda, double t)
    : alpha_(alpha), lambda_(lambda), t_(t) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("FracPoissonLaw: alpha must lie in (0, 1]");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("FracPoissonLaw: lambda must be positive");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw DomainError("FracPoissonLaw: t must be non-negative");
  }
  z_ = lambda * std::pow(t, alpha);
  log_e_ = mittag_leffler_sum(alpha, 1.0, z_).log_abs;

  cum_.push_back(pmf(0));
  double prev_log = log_pmf(0);
  for (unsigned k = 1; cum_.back() <= 1.0 - kTailTarget; ++k) {
    if (k > kTableCap) {
      throw ConvergenceError("FracPoissonLaw: cumulative table exceeds cap");
    }
    const double lp = log_pmf(k);
    cum_.push_back(cum_.back() + std::exp(lp));
    // Rounding can leave the sum a hair short of the target; once the terms
    // are decreasing and negligible the remaining tail is below it anyway.
    if (lp < prev_log && lp < std::log(kTailTarget) - 20.0) break;
    prev_log = lp;
  }
}

double FracPoissonLaw::log_pmf(unsigned k) const {
  const SignedLog p = log_power(z_, static_cast<int>(k));
  if (p.sign == 0) return -std::numeric_limits<double>::infinity();
  return p.log_abs - lgamma_signed(alpha_ * k + 1.0).log_abs - log_e_;
}

double FracPoissonLaw::pmf(unsigned k) const { return std::exp(log_pmf(k)); }

double FracPoissonLaw::pgf(double u) const {
  if (!(std::fabs(u) <= 1.0)) throw DomainError("pgf: need |u| <= 1");
  const SeriesSum s = mittag_leffler_sum(alpha_, 1.0, u * z_);
  if (s.sign == 0) return 0.0;
  return s.sign * std::exp(s.log_abs - log_e_);
}

EvenOddMass FracPoissonLaw::even_odd_mass() const {
  const double z2 = z_ * z_;
  EvenOddMass m;
  const SeriesSum even = mittag_leffler_sum(2.0 * alpha_, 1.0, z2);
  m.even = std::exp(even.log_abs - log_e_);
  if (z_ > 0.0) {
    const SeriesSum odd = mittag_leffler_sum(2.0 * alpha_, alpha_ + 1.0, z2);
    m.odd = std::exp(std::log(z_) + odd.log_abs - log_e_);
  }
  return m;
}

unsigned FracPoissonLaw::sample(Rng& rng) const {
  const double u = rng.uniform() * cum_.back();
  const auto it = std::lower_bound(cum_.begin(), cum_.end(), u);
  if (it == cum_.end()) return table_cap();
  return static_cast<unsigned>(it - cum_.begin());
}

}  // namespace fracflight
