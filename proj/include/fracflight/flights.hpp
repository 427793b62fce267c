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

#include <array>
#include <span>
#include <vector>

#include "fracflight/fracpoisson.hpp"
#include "fracflight/mcbride.hpp"
#include "fracflight/random.hpp"

namespace fracflight {

// sum_k p^{2k} w^{2 alpha k + 2 alpha - 2} /
// (Gamma(alpha k + alpha + (N-1)/2) Gamma(alpha k + alpha)),
// p = lambda / (2^alpha c^alpha).
double ndim_solution(int dim, double alpha, double lambda, double c, double w);
SeriesSolution ndim_series(int dim, double alpha, double lambda, double c,
                           int terms = 40);

enum class FlightKind {
  kFractional,  // alpha in (0, 1], events counted by N^alpha
  kFourD,       // N = 4, alpha in (1, 2], events counted by N^{alpha/2}
};

class FlightLaw {
 public:
  static FlightLaw fractional(int dim, double alpha, double lambda, double c,
                              double t);
  static FlightLaw four_d(double alpha, double lambda, double c, double t);

  FlightKind kind() const { return kind_; }
  int dimension() const { return dim_; }
  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  double c() const { return c_; }
  double t() const { return t_; }
  double radius() const { return c_ * t_; }
  const FracPoissonLaw& counting() const { return counting_; }

  // Gamma((k alpha + N)/2) w^{alpha k - 2} /
  // ((ct)^{alpha k + N - 2} Gamma(alpha k / 2) pi^{N/2}).
  double conditional_density(unsigned k, std::span<const double> x) const;
  double conditional_density_radial(unsigned k, double r) const;

  // Absolutely continuous density of the 4D flight.
  double density(std::span<const double> x) const;
  double density_radial(double r) const;
  // Functions of w = sqrt(c^2 t^2 - |x|^2), 0 < w <= ct.
  double conditional_density_w(unsigned k, double w) const;
  double density_w(double w) const;
  double boundary_mass() const;

  std::array<double, 4> sample_4d(Rng& rng) const;
  // Position given k events: |x|^2/(ct)^2 ~ Beta(N/2, k alpha/2), uniform
  // direction; k = 0 lands on the sphere.
  std::vector<double> sample_given_events(Rng& rng, unsigned k) const;

 private:
  FlightLaw(FlightKind kind, int dim, double alpha, double lambda, double c,
            double t, double counting_index);

  FlightKind kind_;
  int dim_;
  double alpha_, lambda_, c_, t_;
  FracPoissonLaw counting_;
};

}  // namespace fracflight
