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

#pragma once

#include "fracflight/fracpoisson.hpp"
#include "fracflight/mcbride.hpp"
#include "fracflight/random.hpp"

namespace fracflight {

enum class Parity { kEven, kOdd };
enum class ShapeClass { kArcsine, kUniform, kBell };

const char* to_string(ShapeClass s);

// Exponent of (c^2 t^2 - x^2) in the conditional density given 2k (even)
// or 2k+1 (odd) events: alpha k - 1 or alpha k + (alpha - 1) / 2.
double shape_exponent(double alpha, unsigned k, Parity parity);

// Zero exponent (within `tol`) is uniform, negative is arcsine, positive
// is bell.
ShapeClass classify_shape(double alpha, unsigned k, Parity parity,
                          double tol = 1e-12);

struct MixedDensity {
  double ac = 0.0;             // absolutely continuous part
  double singular_each = 0.0;  // atom at each of -ct and +ct
};

class TelegraphLaw {
 public:
  TelegraphLaw(double alpha, double lambda, double c, double t);

  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  double c() const { return c_; }
  double t() const { return t_; }
  double half_width() const { return c_ * t_; }
  const FracPoissonLaw& counting() const { return counting_; }

  // Shape a of the symmetric Beta(a, a) law given n >= 1 events.
  double beta_shape(unsigned n) const;

  // Density of the position given n >= 1 events, |x| < ct.
  double conditional_density(unsigned n, double x) const;
  // Full law at x, |x| <= ct.
  MixedDensity density(double x) const;
  // Same quantities as functions of w = sqrt(c^2 t^2 - x^2), 0 < w <= ct.
  // These keep full accuracy next to the endpoints, where x cannot.
  double ac_density_w(double w) const;
  double conditional_density_w(unsigned n, double w) const;
  double ac_density(double x) const { return density(x).ac; }
  double singular_weight() const;

  double sample_position(Rng& rng) const;
  double sample_given_events(Rng& rng, unsigned n) const;

  // E_{alpha,1} times the even-n part of the ac density as a series in
  // w = sqrt(c^2 t^2 - x^2): ct sum_{k>=1} p^{2k} w^{2 alpha k - 2} /
  // (Gamma(alpha k) Gamma(alpha k + 1)), p = lambda / (2c)^alpha.
  SeriesSolution even_mixture_series(int terms = 40) const;
  // The odd-n counterpart: sum_{k>=0} p^{2k+1} w^{2 alpha k + alpha - 1} /
  // Gamma(alpha k + (1 + alpha)/2)^2.
  SeriesSolution odd_mixture_series(int terms = 40) const;

 private:
  double alpha_, lambda_, c_, t_;
  FracPoissonLaw counting_;
};

}  // namespace fracflight
