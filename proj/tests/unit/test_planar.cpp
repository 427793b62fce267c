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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fracflight/errors.hpp"
#include "fracflight/specfun.hpp"
#include "fracflight/stats.hpp"
#include "fracflight/planar.hpp"
#include "masses.hpp"

namespace ff = fracflight;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// n / (2 pi (ct)^n) (c^2 t^2 - r^2)^{n/2 - 1}
double classical_conditional(double n, double ct, double r) {
  return n / (2 * kPi * std::pow(ct, n)) * std::pow(ct * ct - r * r, n / 2 - 1);
}

// (lambda / 2 pi c) e^{-lambda t + lambda w / c} / w
double classical_density(double lambda, double c, double t, double r) {
  const double w = std::sqrt(c * c * t * t - r * r);
  return lambda / (2 * kPi * c) * std::exp(-lambda * t + lambda * w / c) / w;
}

double binomial(unsigned n, unsigned k) {
  return std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
}

// Radial CDF of a law with an ac density f(r) on the disc and an atom on the circle.
ff::TabulatedCdf radial_cdf(const std::function<double(double)>& f, double ct, double p_hi,
                            double atom) {
  return ff::TabulatedCdf([&](double r) { return 2 * kPi * r * f(r); }, 0, ct, 1, p_hi, 0,
                          atom);
}

// Radii in the unit disc; draws on the circle may come back an ulp off 1.
std::vector<double> radii(const std::vector<ff::Point2>& ps) {
  std::vector<double> out;
  out.reserve(ps.size());
  for (const auto& p : ps) {
    const double r = std::hypot(p.x, p.y);
    out.push_back(std::fabs(r - 1) < 1e-12 ? 1.0 : r);
  }
  return out;
}

TEST(Planar, ClassicalConditional) {
  const ff::PlanarLaw law(1, 1, 1, 1);
  EXPECT_LT(rel(law.conditional_density(3, 0.2, 0.1), classical_conditional(3, 1, std::hypot(0.2, 0.1))),
            1e-12);
  for (unsigned n = 1; n <= 6; ++n) {
    EXPECT_LT(rel(law.conditional_density(n, -0.5, 0.3),
                  classical_conditional(n, 1, std::hypot(0.5, 0.3))),
              1e-12);
  }
  const ff::PlanarLaw wide(1, 1, 2, 0.5);
  EXPECT_NEAR(wide.conditional_density(2, 0.3, -0.4), 1 / kPi, 1e-15);
  // n alpha = 2 behaves like two classical events.
  const ff::PlanarLaw half(0.5, 1, 1, 1);
  EXPECT_LT(rel(half.conditional_density(4, 0.3, 0.4), classical_conditional(2, 1, 0.5)), 1e-14);
}

TEST(Planar, ConditionalIntegratesToOne) {
  const ff::PlanarLaw law(0.7, 1, 1.2, 0.9);
  for (unsigned n : {1u, 2u, 3u, 5u}) {
    const double m = fftest::disc_mass([&](double w) { return law.conditional_density_w(n, w); },
                                       law.radius(), 0.7 * n - 2);
    EXPECT_NEAR(m, 1.0, 1e-10) << n;
  }
}

TEST(Planar, ClassicalDensity) {
  const ff::PlanarLaw law(1, 1, 1, 1);
  EXPECT_LT(rel(law.density(0.5, 0).ac, classical_density(1, 1, 1, 0.5)), 1e-10);
  const ff::PlanarLaw other(1, 2.5, 0.8, 1.3);
  for (double r : {0.0, 0.2, 0.6, 1.0, 1.03}) {
    EXPECT_LT(rel(other.ac_density_radial(r), classical_density(2.5, 0.8, 1.3, r)), 1e-10) << r;
  }
  EXPECT_NEAR(other.boundary_mass(), std::exp(-2.5 * 1.3), 1e-15);
}

TEST(Planar, InteriorMass) {
  struct P { double a, l, t; };
  for (auto p : {P{0.5, 1, 1}, P{0.3, 1, 1}, P{0.7, 2, 1.5}, P{1.0, 1, 1}, P{0.9, 0.5, 3},
                 P{0.6, 3, 0.4}}) {
    const ff::PlanarLaw law(p.a, p.l, 1.0, p.t);
    const double m = fftest::disc_mass([&](double w) { return law.ac_density_w(w); },
                                       law.radius(), p.a - 2);
    const double e = ff::mittag_leffler(p.a, 1, p.l * std::pow(p.t, p.a));
    EXPECT_NEAR(m, 1 - 1 / e, 1e-8) << p.a;
    EXPECT_NEAR(law.interior_mass(), 1 - 1 / e, 1e-14);
    EXPECT_NEAR(m + law.boundary_mass(), 1.0, 1e-8);
  }
}

TEST(Planar, MixtureIdentity) {
  const ff::PlanarLaw law(0.6, 1, 1, 1);
  for (auto [x, y] : {std::pair{0.0, 0.0}, {0.3, 0.1}, {-0.5, 0.5}, {0.1, -0.9}, {0.7, 0.7}}) {
    double s = 0;
    for (unsigned n = 1; n <= law.counting().table_cap(); ++n) {
      s += law.counting().pmf(n) * law.conditional_density(n, x, y);
    }
    EXPECT_LT(rel(s, law.density(x, y).ac), 1e-9) << x << " " << y;
  }
}

TEST(Planar, Isotropy) {
  const ff::PlanarLaw law(0.45, 1.5, 1, 1);
  const double r = 0.62;
  const double ref = law.density(r, 0).ac;
  for (double th : {0.3, 1.2, 2.5, 4.0}) {
    EXPECT_LT(rel(law.density(r * std::cos(th), r * std::sin(th)).ac, ref), 1e-14);
  }
}

TEST(Planar, Sampler) {
  const ff::PlanarLaw law(0.8, 1, 1, 1);
  ff::Rng g(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = law.sample_given_events(g, 0);
    EXPECT_NEAR(std::hypot(p.x, p.y), 1.0, 1e-15);
  }
  const auto ps = ff::parallel_draws<ff::Point2>(100000, 4, 4,
                                                 [&](ff::Rng& r) { return law.sample(r); });
  const auto cdf = radial_cdf(
      [&](double r) { return law.ac_density_w(std::sqrt((1 - r) * (1 + r))); }, 1, -0.6,
      law.boundary_mass());
  EXPECT_NEAR(cdf.total_mass(), 1.0, 1e-8);
  EXPECT_LT(ff::ks_one_sample(radii(ps), cdf, [&](double x) { return cdf.left_limit(x); }), 0.01);
  // Rayleigh test on the angles.
  double sc = 0, ss = 0;
  for (const auto& p : ps) {
    const double r = std::hypot(p.x, p.y);
    sc += p.x / r;
    ss += p.y / r;
  }
  const double n = ps.size();
  const double rbar2 = (sc * sc + ss * ss) / (n * n);
  EXPECT_GT(std::exp(-n * rbar2), 1e-3);
}

TEST(Planar, Projection) {
  const ff::PlanarLaw law(0.5, 1, 1, 1);
  const double m = fftest::line_mass([&](double x) { return law.projection_density(x); },
                                     [&](double w) { return law.projection_density_w(w); }, 1,
                                     -1);
  EXPECT_NEAR(m, 1.0, 1e-8);
  // Marginal of the ac part plus the projected circle.
  const ff::PlanarLaw q(0.7, 1, 1, 1);
  const double x = 0.3, s = std::sqrt(1 - x * x);
  const double ac = fftest::line_mass(
      [&](double y) { return q.density(x, y).ac; },
      [&](double w) { return q.ac_density_w(w); }, s, 0.7 - 2);
  const double circle = q.boundary_mass() / (kPi * s);
  EXPECT_LT(rel(q.projection_density(x), ac + circle), 1e-8);
  // Tiny lambda leaves the arcsine law of the circle.
  const ff::PlanarLaw still(0.5, 1e-9, 1, 1);
  EXPECT_LT(rel(still.projection_density(0.4), 1 / (kPi * std::sqrt(1 - 0.16))), 1e-8);
}

TEST(Thinned, ClassicalAtAlphaOne) {
  const ff::ThinnedMotionSpec spec{4, 1.0, 1.0, 1.0, ff::Mixing::kHomogeneous};
  EXPECT_LT(rel(ff::thinned_conditional_mean_density(spec, 0.3, 0), classical_conditional(4, 1, 0.3)),
            1e-14);
  for (auto mixing : {ff::Mixing::kHomogeneous, ff::Mixing::kFractional}) {
    const ff::ThinnedMotionSpec s{1, 1.0, 1.0, 1.0, mixing};
    EXPECT_LT(rel(ff::thinned_unconditional_density(s, 1.3, 0.2, 0.4),
                  classical_density(1.3, 1, 1, std::hypot(0.2, 0.4))),
              1e-12);
  }
}

TEST(Thinned, BinomialSum) {
  const ff::ThinnedMotionSpec spec{5, 0.4, 1.1, 0.9, ff::Mixing::kHomogeneous};
  const double ct = 1.1 * 0.9;
  for (auto [x, y] : {std::pair{0.1, 0.2}, {-0.5, 0.3}, {0.0, 0.0}, {0.9, 0.1}}) {
    const double r = std::hypot(x, y);
    double s = 0;
    for (unsigned k = 1; k <= 5; ++k) {
      s += binomial(5, k) * std::pow(0.4, k) * std::pow(0.6, 5 - k) *
           classical_conditional(k, ct, r);
    }
    EXPECT_LT(rel(ff::thinned_conditional_mean_density(spec, x, y), s), 1e-12);
  }
}

TEST(Thinned, Inequality) {
  for (unsigned n : {2u, 3u, 6u}) {
    for (double alpha : {0.2, 0.5, 0.9}) {
      const ff::ThinnedMotionSpec spec{n, alpha, 1, 1, ff::Mixing::kHomogeneous};
      for (int i = 0; i < 10; ++i) {
        const double r = 0.95 * i / 9.0;
        EXPECT_GE(ff::thinned_conditional_mean_density(spec, r, 0),
                  std::pow(alpha, n) * classical_conditional(n, 1, r));
      }
    }
  }
  const ff::ThinnedMotionSpec spec{3, 0.5, 1, 1, ff::Mixing::kHomogeneous};
  EXPECT_GE(ff::thinned_conditional_mean_density(spec, 0.2, 0.2),
            0.125 * classical_conditional(3, 1, std::hypot(0.2, 0.2)));
}

TEST(Thinned, MixturesMatchClosedForms) {
  for (auto mixing : {ff::Mixing::kHomogeneous, ff::Mixing::kFractional}) {
    ff::ThinnedMotionSpec spec{1, 0.5, 1, 1, mixing};
    const double lambda = 1.0;
    const auto law = ff::thinned_mixing_law(spec, lambda);
    for (auto [x, y] : {std::pair{0.1, 0.2}, {0.6, -0.3}, {0.0, 0.95}}) {
      double s = 0;
      for (unsigned n = 1; n <= law.table_cap(); ++n) {
        spec.n = n;
        s += law.pmf(n) * ff::thinned_conditional_mean_density(spec, x, y);
      }
      EXPECT_LT(rel(s, ff::thinned_unconditional_density(spec, lambda, x, y)), 1e-9);
    }
    double b = 0;
    for (unsigned n = 0; n <= law.table_cap(); ++n) b += law.pmf(n) * std::pow(0.5, n);
    EXPECT_NEAR(ff::thinned_boundary_mass(spec, lambda), b, 1e-12);
  }
  EXPECT_NEAR(ff::thinned_boundary_mass({1, 0.5, 1, 1, ff::Mixing::kHomogeneous}, 2.0),
              std::exp(-1.0), 1e-14);
}

TEST(Thinned, SimulatorHomogeneous) {
  const ff::ThinnedMotionSpec spec{1, 0.6, 1, 1, ff::Mixing::kHomogeneous};
  const double lambda = 2.0;
  const ff::ThinnedSimulator sim(spec, lambda);
  const auto ps = ff::parallel_draws<ff::Point2>(100000, 12, 4,
                                                 [&](ff::Rng& r) { return sim.sample(r); });
  const auto cdf = radial_cdf(
      [&](double r) { return ff::thinned_unconditional_density(spec, lambda, r, 0); }, 1, -0.5,
      ff::thinned_boundary_mass(spec, lambda));
  EXPECT_NEAR(cdf.total_mass(), 1.0, 1e-8);
  EXPECT_LT(ff::ks_one_sample(radii(ps), cdf, [&](double x) { return cdf.left_limit(x); }), 0.015);
}

TEST(Thinned, SimulatorClassical) {
  const ff::ThinnedMotionSpec spec{1, 1.0, 1, 1, ff::Mixing::kHomogeneous};
  const ff::ThinnedSimulator sim(spec, 1.5);
  const auto ps = ff::parallel_draws<ff::Point2>(100000, 13, 4,
                                                 [&](ff::Rng& r) { return sim.sample(r); });
  const auto cdf = radial_cdf([&](double r) { return classical_density(1.5, 1, 1, r); }, 1,
                              -0.5, std::exp(-1.5));
  EXPECT_LT(ff::ks_one_sample(radii(ps), cdf, [&](double x) { return cdf.left_limit(x); }), 0.01);
  ff::Rng g(1);
  const ff::ThinnedSimulator none({1, 0.5, 1, 1, ff::Mixing::kHomogeneous}, 1e-12);
  const auto p = none.sample(g);
  EXPECT_NEAR(std::hypot(p.x, p.y), 1.0, 1e-15);
}

TEST(Planar, Validation) {
  EXPECT_THROW(ff::PlanarLaw(0.5, 1, 1, 1).conditional_density(1, 1.0, 0), ff::DomainError);
  EXPECT_THROW(ff::PlanarLaw(0.5, 1, 1, 1).conditional_density(0, 0.1, 0), ff::DomainError);
  EXPECT_THROW(ff::PlanarLaw(0.5, 1, 1, 1).ac_density_radial(1.1), ff::DomainError);
  EXPECT_THROW(ff::PlanarLaw(0.5, 1, -1, 1), ff::DomainError);
  EXPECT_THROW(ff::thinned_conditional_mean_density({0, 0.5, 1, 1}, 0.1, 0), ff::DomainError);
  EXPECT_THROW(ff::thinned_unconditional_density({1, 1.5, 1, 1}, 1, 0.1, 0), ff::DomainError);
}

}  // namespace
