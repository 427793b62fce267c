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

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fracflight/errors.hpp"
#include "fracflight/mcbride.hpp"
#include "fracflight/pdecheck.hpp"
#include "fracflight/specfun.hpp"

namespace ff = fracflight;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

const ff::LedgerEntry* at_exponent(const ff::ResidualReport& r, double e) {
  for (const auto& l : r.ledger) {
    if (std::fabs(l.output_exponent - e) < 1e-12) return &l;
  }
  return nullptr;
}

TEST(Verify, RegistryIsExact) {
  for (const auto& name : ff::verification_cases()) {
    for (double a : ff::verification_alphas()) {
      const auto r = ff::run_case(name, a);
      EXPECT_TRUE(r.precondition_failures.empty()) << name << " " << a;
      EXPECT_LE(r.max_rel_residual, 1e-11) << name << " " << a;
      EXPECT_LE(r.max_pointwise_residual, 1e-11) << name << " " << a;
      EXPECT_TRUE(r.passed()) << name << " " << a;
    }
  }
}

TEST(Verify, RegistryCoversEveryFamily) {
  const auto names = ff::verification_cases();
  for (const char* want : {"kg1d", "kg1d-minus", "kg1d-iterate2", "kg1d-second", "kg1d-odd",
                           "kg2d", "kg2d-odd", "projection", "kgnd-1", "kgnd-5",
                           "hyperbessel-2", "hyperbessel-3", "hyperbessel-4", "third-order",
                           "epd"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
  }
  EXPECT_EQ(ff::verification_alphas(), (std::vector<double>{0.3, 0.5, 0.7, 1.0}));
  EXPECT_THROW(ff::run_case("no-such-case", 0.5), ff::DomainError);
  EXPECT_THROW(ff::run_case("kg1d", 1.5), ff::DomainError);
}

TEST(Verify, OtherParameters) {
  for (const char* name : {"kg1d", "kg1d-odd", "kg2d-odd", "projection", "third-order"}) {
    const auto r = ff::run_case(name, 0.45, 1.7, 0.6);
    EXPECT_TRUE(r.passed()) << name << " " << r.max_rel_residual << " "
                            << r.max_pointwise_residual;
  }
}

TEST(Verify, LeadingTermIsAnnihilated) {
  const auto r = ff::run_case("kg1d", 0.5);
  const auto* l = at_exponent(r, -2.0);
  ASSERT_NE(l, nullptr);
  EXPECT_EQ(l->output_coefficient, 0.0);
  EXPECT_EQ(l->role, "annihilated");
  // The last image term has nothing to match below the cap.
  EXPECT_EQ(r.ledger.back().role, "truncated");
}

TEST(Verify, ForcingLedgers) {
  // Constant shift of the second solution.
  const auto second = ff::run_case("kg1d-second", 0.7, 1.3, 0.8);
  const auto* s0 = at_exponent(second, 0.0);
  ASSERT_NE(s0, nullptr);
  const double q2 = std::pow(1.3 / std::pow(0.8, 0.7), 2);
  EXPECT_LT(rel(s0->output_coefficient, q2), 1e-13);
  EXPECT_EQ(s0->role, "matched");
  // Odd solution: lambda 2^a c^{-a} / Gamma((1 - a)/2)^2 at w^{-a-1}.
  const double a = 0.3, lambda = 1.3, c = 0.8;
  const auto odd = ff::run_case("kg1d-odd", a, lambda, c);
  const auto* o = at_exponent(odd, -a - 1);
  ASSERT_NE(o, nullptr);
  const double g = ff::rgamma(0.5 * (1 - a));
  EXPECT_LT(rel(o->output_coefficient, lambda * std::pow(2 / c, a) * g * g), 1e-13);
  // Planar odd solution: (lambda / c^a) / Gamma(-a) at w^{-a-2}.
  const auto pl = ff::run_case("kg2d-odd", a, lambda, c);
  const auto* p = at_exponent(pl, -a - 2);
  ASSERT_NE(p, nullptr);
  EXPECT_LT(rel(p->output_coefficient, lambda / std::pow(c, a) * ff::rgamma(-a)), 1e-13);
  EXPECT_TRUE(odd.passed());
  EXPECT_TRUE(pl.passed());
}

TEST(Verify, ProjectionPair) {
  for (double a : {0.3, 0.5, 0.7}) {
    const double lambda = 1.2, c = 0.9, q = lambda / std::pow(c, a);
    const auto r = ff::run_case("projection", a, lambda, c);
    EXPECT_TRUE(r.passed()) << a;
    const auto* first = at_exponent(r, -1 - 2 * a);
    const auto* second = at_exponent(r, -1 - a);
    ASSERT_NE(first, nullptr);
    ASSERT_NE(second, nullptr);
    const double g1 = ff::rgamma(0.5 * (1 - 2 * a)), g2 = ff::rgamma(0.5 * (1 - a));
    if (a == 0.5) {
      EXPECT_EQ(first->output_coefficient, 0.0);
      EXPECT_EQ(first->matched_coefficient, 0.0);
      EXPECT_EQ(first->role, "annihilated");
    } else {
      EXPECT_LT(rel(first->output_coefficient, std::pow(4, a) * g1 * g1), 1e-13);
    }
    EXPECT_LT(rel(second->output_coefficient, std::pow(2, a) * q * g2 * g2), 1e-13);
  }
}

TEST(Verify, IterateEigenvalue) {
  const double a = 0.7, lambda = 1.1, c = 1.4;
  const auto r = ff::run_case("kg1d-iterate3", a, lambda, c);
  EXPECT_TRUE(r.passed());
  // Built from the registry: eigenvalue lambda^6 / c^{6a}.
  ff::EquationSpec eq{ff::HyperBesselOp::bessel_1d(), a,
                      std::pow(lambda, 6) / std::pow(c, 6 * a), {}, 3};
  std::vector<ff::SeriesTerm> t;
  const double p = lambda / std::pow(2 * c, a);
  for (int k = 0; k < 40; ++k) {
    t.push_back({std::pow(p, 2 * k) * std::pow(ff::rgamma(a * k + a), 2), 2 * a * k + 2 * a - 2});
  }
  const auto direct = ff::verify(eq, ff::SeriesSolution(t));
  EXPECT_LE(direct.max_rel_residual, 1e-12);
  EXPECT_TRUE(direct.precondition_failures.empty());
}

TEST(Verify, WrongEigenvalueFails) {
  const double a = 0.5;
  std::vector<ff::SeriesTerm> t;
  for (int k = 0; k < 20; ++k) {
    t.push_back({std::pow(0.5, 2 * k * a) * std::pow(ff::rgamma(a * k + a), 2), 2 * a * k + 2 * a - 2});
  }
  const ff::EquationSpec eq{ff::HyperBesselOp::bessel_1d(), a, 1.01, {}, 1};
  const auto r = ff::verify(eq, ff::SeriesSolution(t));
  EXPECT_GT(r.max_rel_residual, 1e-3);
  EXPECT_FALSE(r.passed());
  // A term below the Erdelyi-Kober domain is reported, not thrown.
  const auto bad = ff::verify(eq, ff::SeriesSolution({{1.0, -2.5}}));
  EXPECT_FALSE(bad.precondition_failures.empty());
  EXPECT_FALSE(bad.passed());
}

TEST(Cartesian, ClassicalValues) {
  const ff::GridPoint p{0.3, 0, 1};
  const double w = std::sqrt(1 - 0.09);
  EXPECT_LT(rel(ff::kg_solution_value(1, 1, 1, ff::SolutionKind::kHomogPlus, p),
                boost::math::cyl_bessel_i(0, w)),
            1e-13);
  EXPECT_LT(rel(ff::kg_solution_value(1, 1, 1, ff::SolutionKind::kHomogMinus, p),
                boost::math::cyl_bessel_j(0, w)),
            1e-13);
  // Third-order Bessel function of cbrt((ct + 2x)((ct - x)^2 - 3 y^2)).
  const ff::GridPoint q{0.1, 0.05, 1};
  const double v = std::cbrt((1 + 0.2) * (0.81 - 3 * 0.0025));
  double i03 = 0, term = 1;
  for (int k = 0; k < 30; ++k) {
    i03 += term;
    term *= std::pow(v / 3, 3) / std::pow(k + 1.0, 3);
  }
  EXPECT_LT(rel(ff::kg_solution_value(1, 1, 1, ff::SolutionKind::kThirdOrder, q), i03), 1e-13);
  EXPECT_LT(rel(ff::hyper_bessel(3, v), i03), 1e-13);
  EXPECT_THROW(ff::cyclic_variable(1, 1, {-0.6, 0, 1}), ff::DomainError);
  EXPECT_THROW(ff::kg_solution_value(1, 1, 1, ff::SolutionKind::kHomogPlus, {1.2, 0, 1}),
               ff::DomainError);
}

TEST(Cartesian, Grids) {
  std::vector<ff::GridPoint> line, plane;
  for (double x : {-0.6, -0.2, 0.0, 0.3, 0.7}) {
    for (double t : {0.8, 1.0, 1.5}) line.push_back({x, 0, t});
  }
  for (double x : {-0.3, 0.0, 0.2}) {
    for (double y : {-0.2, 0.1}) plane.push_back({x, y, 1.0});
  }
  for (double a : {0.3, 0.5, 0.7, 1.0}) {
    for (auto kind : {ff::SolutionKind::kHomogPlus, ff::SolutionKind::kHomogMinus,
                      ff::SolutionKind::kSecond, ff::SolutionKind::kOdd}) {
      const auto r = ff::verify_kg_cartesian(a, 1.2, 0.9, kind, line);
      EXPECT_TRUE(r.passed()) << a << " " << r.name << " " << r.max_rel_residual << " "
                              << r.max_pointwise_residual << " " << r.max_aux_residual;
      EXPECT_EQ(r.grid.size(), line.size());
    }
    for (auto kind : {ff::SolutionKind::kPlanar, ff::SolutionKind::kThirdOrder}) {
      const auto r = ff::verify_kg_cartesian(a, 1.2, 0.9, kind, plane);
      EXPECT_TRUE(r.passed()) << a << " " << r.name << " " << r.max_rel_residual << " "
                              << r.max_pointwise_residual << " "
                              << (r.precondition_failures.empty() ? "" : r.precondition_failures[0]);
    }
    for (int dim : {1, 2, 3, 5}) {
      EXPECT_TRUE(ff::verify_kg_cartesian(a, 1.2, 0.9, ff::SolutionKind::kNdim, plane, dim).passed());
    }
  }
  // The second solution also checks F = (1/2c) dG/dt by finite differences.
  const auto f = ff::verify_kg_cartesian(0.6, 1, 1, ff::SolutionKind::kSecond, line);
  EXPECT_GT(f.aux_tolerance, 0.0);
  EXPECT_LE(f.max_aux_residual, f.aux_tolerance);
  // Points outside the support are reported.
  const std::vector<ff::GridPoint> outside{{2.0, 0, 1}};
  const auto o = ff::verify_kg_cartesian(0.5, 1, 1, ff::SolutionKind::kHomogPlus, outside);
  EXPECT_FALSE(o.precondition_failures.empty());
  EXPECT_FALSE(o.passed());
}

TEST(Epd, OperationalSolution) {
  for (double a : {0.3, 0.6, 1.0}) {
    for (double t : {0.5, 2.0}) {
      EXPECT_LT(rel(ff::epd_operational(a, 0, t, 40),
                    std::pow(t, 2 * a - 2) * std::pow(ff::rgamma(a), 2)),
                1e-15);
    }
  }
  EXPECT_EQ(ff::epd_operational(1, 0, 3.7, 40), 1.0);
  EXPECT_NEAR(ff::epd_operational(1, 1, 2, 40), 2.2795853023360673, 1e-13);
  const auto r = ff::run_case("epd", 0.6);
  EXPECT_LE(r.max_rel_residual, 1e-11);
  ff::EquationSpec eq{ff::HyperBesselOp::epd(1.0), 0.6, 4.0, {}, 1};
  EXPECT_LE(ff::verify(eq, ff::epd_series(0.6, 2.0, 40)).max_rel_residual, 1e-11);
  EXPECT_THROW(ff::epd_operational(0.5, -1, 1, 40), ff::DomainError);
}

TEST(Witness, NonCommutation) {
  EXPECT_NEAR(ff::noncommutation_witness(0.5, ff::SeriesSolution({{1.0, 0.0}}), 1.0),
              0.5641895835477563, 1e-15);
  EXPECT_EQ(ff::noncommutation_witness(0.5, ff::SeriesSolution({{1.0, 1.0}}), 1.0), 0.0);
  // G starts at w^{2 a}: the boundary term is absent.
  std::vector<ff::SeriesTerm> g;
  for (int k = 1; k <= 20; ++k) g.push_back({std::pow(ff::rgamma(0.7 * k + 1), 2), 1.4 * k});
  EXPECT_EQ(ff::noncommutation_witness(0.7, ff::SeriesSolution(g), 0.8), 0.0);
  EXPECT_THROW(ff::noncommutation_witness(1.0, ff::SeriesSolution({{1.0, 0.0}}), 1.0),
               ff::DomainError);
  // The full commutator of D^a and d/dz on a constant is the same boundary term.
  const auto comm = ff::rl_commutator(0.5, ff::SeriesSolution({{1.0, 0.0}}));
  ASSERT_EQ(comm.size(), 1u);
  EXPECT_NEAR(comm.terms()[0].coefficient, -0.5 * ff::rgamma(0.5), 1e-15);
  // Terms vanishing at 0 commute, up to rounding in the Gamma ratios.
  for (const auto& t : ff::rl_commutator(0.5, ff::SeriesSolution({{1.0, 1.0}, {2.0, 2.4}})).terms()) {
    EXPECT_LT(std::fabs(t.coefficient), 1e-13);
  }
}

// Factorized Riemann-Liouville derivatives in z1, z2 with z1 z2 = w^2 / 4
// reproduce the w-space coefficients.
TEST(Factorized, MatchesOperatorCoefficients) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> ua(0.1, 1.0);
  std::uniform_int_distribution<int> uk(1, 12);
  for (int i = 0; i < 10; ++i) {
    const double a = ua(gen);
    const int k = uk(gen);
    const double b = a * k + a - 1;
    const double rl = ff::ek_monomial(1, 0, -a, b);  // Gamma(b + 1) / Gamma(b + 1 - a)
    const double z_space = rl * rl * std::pow(4.0, -(b - a));
    const auto act = ff::op_monomial(ff::HyperBesselOp::bessel_1d(), a, 2 * b);
    EXPECT_NEAR(act.exponent, 2 * (b - a), 1e-13);
    EXPECT_LT(rel(act.coefficient * std::pow(4.0, -b), z_space), 1e-13) << a << " " << k;
  }
}

}  // namespace
