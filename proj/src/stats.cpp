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

#include "fracflight/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracflight/errors.hpp"
#include "fracflight/quadrature.hpp"

namespace fracflight {

double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf,
                     const std::function<double(double)>& cdf_left) {
  if (samples.empty()) throw DomainError("ks_one_sample: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < samples.size()) {
    std::size_t j = i;
    while (j < samples.size() && samples[j] == samples[i]) ++j;
    const double x = samples[i];
    const double f = cdf(x);
    const double fl = cdf_left ? cdf_left(x) : f;
    d = std::max(d, std::fabs(static_cast<double>(j) / n - f));
    d = std::max(d, std::fabs(static_cast<double>(i) / n - fl));
    i = j;
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() || j < b.size()) {
    double x;
    if (i == a.size()) {
      x = b[j];
    } else if (j == b.size()) {
      x = a[i];
    } else {
      x = std::min(a[i], b[j]);
    }
    while (i < a.size() && a[i] == x) ++i;
    while (j < b.size() && b[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  return d;
}

TabulatedCdf::TabulatedCdf(const std::function<double(double)>& density,
                           double lo, double hi, double p_lo, double p_hi,
                           double atom_lo, double atom_hi, int cells)
    : lo_(lo), hi_(hi), atom_lo_(atom_lo), atom_hi_(atom_hi) {
  if (!(hi > lo) || cells < 2) throw DomainError("TabulatedCdf: bad range");
  theta_.resize(cells + 1);
  cum_.assign(cells + 1, 0.0);
  for (int i = 0; i <= cells; ++i) {
    theta_[i] = std::numbers::pi * i / cells;
  }
  auto x_of = [&](double th) {
    return lo + (hi - lo) * 0.5 * (1.0 - std::cos(th));
  };
  QuadOptions opts;
  opts.abs_tol = 1e-14;
  opts.rel_tol = 1e-12;
  for (int i = 0; i < cells; ++i) {
    const double a = x_of(theta_[i]);
    const double b = i + 1 == cells ? hi : x_of(theta_[i + 1]);
    double piece;
    if (i == 0) {
      piece = integrate_endpoint_powers(density, a, b, p_lo, 0.0, opts).value;
    } else if (i + 1 == cells) {
      piece = integrate_endpoint_powers(density, a, b, 0.0, p_hi, opts).value;
    } else {
      piece = integrate(density, a, b, opts).value;
    }
    cum_[i + 1] = cum_[i] + piece;
  }
}

double TabulatedCdf::ac_at(double x) const {
  if (x <= lo_) return 0.0;
  if (x >= hi_) return cum_.back();
  const double u = std::clamp(1.0 - 2.0 * (x - lo_) / (hi_ - lo_), -1.0, 1.0);
  const double th = std::acos(u);
  const double step = theta_[1];
  const std::size_t cells = theta_.size() - 1;
  std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(th / step),
                                        cells - 1);
  const double frac = (th - theta_[i]) / step;
  return cum_[i] + frac * (cum_[i + 1] - cum_[i]);
}

double TabulatedCdf::operator()(double x) const {
  double f = ac_at(x);
  if (x >= lo_) f += atom_lo_;
  if (x >= hi_) f += atom_hi_;
  return f;
}

double TabulatedCdf::left_limit(double x) const {
  double f = ac_at(x);
  if (x > lo_) f += atom_lo_;
  if (x > hi_) f += atom_hi_;
  return f;
}

}  // namespace fracflight
