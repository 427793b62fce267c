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
#include "fracflight/random.hpp"

namespace fracflight {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct PlanarDensity {
  double ac = 0.0;             // density inside the disc
  double boundary_mass = 0.0;  // total mass spread uniformly on the circle
};

class PlanarLaw {
 public:
  PlanarLaw(double alpha, double lambda, double c, double t);

  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  double c() const { return c_; }
  double t() const { return t_; }
  double radius() const { return c_ * t_; }
  const FracPoissonLaw& counting() const { return counting_; }

  // (alpha n / (2 pi (ct)^{alpha n})) (c^2 t^2 - r^2)^{n alpha / 2 - 1}
  double conditional_density(unsigned n, double x, double y) const;
  PlanarDensity density(double x, double y) const;
  // ac density as a function of r = |(x, y)|.
  double ac_density_radial(double r) const;
  double boundary_mass() const;
  double interior_mass() const;

  Point2 sample(Rng& rng) const;
  Point2 sample_given_events(Rng& rng, unsigned n) const;

  // Density of the x coordinate; purely absolutely continuous.
  double projection_density(double x) const;
  // As functions of w = sqrt(c^2 t^2 - r^2) (w = sqrt(c^2 t^2 - x^2) for the
  // projection), 0 < w <= ct; accurate next to the boundary.
  double ac_density_w(double w) const;
  double conditional_density_w(unsigned n, double w) const;
  double projection_density_w(double w) const;

 private:
  double alpha_, lambda_, c_, t_;
  FracPoissonLaw counting_;
};

enum class Mixing { kFractional, kHomogeneous };

// Planar motion whose n direction changes are each kept with probability
// alpha.
struct ThinnedMotionSpec {
  unsigned n = 1;
  double alpha = 1.0;
  double c = 1.0;
  double t = 1.0;
  Mixing mixing = Mixing::kHomogeneous;
};

// Mean over K ~ Bin(n, alpha) of the classical conditional density given K.
double thinned_conditional_mean_density(const ThinnedMotionSpec& spec,
                                        double x, double y);
// Density after randomizing n (spec.n is ignored).
double thinned_unconditional_density(const ThinnedMotionSpec& spec,
                                     double lambda, double x, double y);
// Mass on the circle (no retained change of direction).
double thinned_boundary_mass(const ThinnedMotionSpec& spec, double lambda);

// Law of the number of direction changes before thinning.
FracPoissonLaw thinned_mixing_law(const ThinnedMotionSpec& spec, double lambda);

class ThinnedSimulator {
 public:
  ThinnedSimulator(const ThinnedMotionSpec& spec, double lambda);
  Point2 sample(Rng& rng) const;
  const FracPoissonLaw& mixing_law() const { return law_; }

 private:
  ThinnedMotionSpec spec_;
  FracPoissonLaw law_;
};

Point2 simulate_thinned_path(const ThinnedMotionSpec& spec, double lambda,
                             Rng& rng);

}  // namespace fracflight
