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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fracflight/mcbride.hpp"

namespace fracflight {

// L^alpha applied `power` times to u equals eigenvalue * u + forcing.
struct EquationSpec {
  HyperBesselOp op;
  double alpha;
  double eigenvalue;
  std::vector<SeriesTerm> forcing;
  int power = 1;
};

struct LedgerEntry {
  double input_exponent = 0.0;  // exponent of the solution term (NaN if none)
  double output_exponent = 0.0;
  double output_coefficient = 0.0;   // coefficient of the operator image
  double matched_coefficient = 0.0;  // eigenvalue * u + forcing there
  double residual = 0.0;
  double relative_residual = 0.0;
  // "matched", "annihilated", "truncated" or "unmatched".
  std::string role;
};

struct PointResidual {
  double w = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // relative
  double value = 0.0;     // solution value at the point
};

struct ResidualReport {
  std::string name;
  double alpha = 0.0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  double max_pointwise_residual = 0.0;
  // Extra identity checked by some cases (e.g. F = (1/2c) dG/dt).
  double max_aux_residual = 0.0;
  double aux_tolerance = 0.0;
  bool precision_warning = false;
  std::vector<LedgerEntry> ledger;
  std::vector<PointResidual> grid;
  std::vector<std::string> precondition_failures;

  bool passed(double coefficient_tol = 1e-11, double pointwise_tol = 1e-9) const;
};

// Coefficient-space check of eq against s, plus a pointwise check at each
// w in `grid`. The right-hand side uses `reference` for u(w) when given and
// the series itself otherwise.
ResidualReport verify(const EquationSpec& eq, const SeriesSolution& s,
                      std::span<const double> grid = {},
                      const std::function<double(double)>& reference = {});

enum class SolutionKind {
  kHomogPlus,   // I_0-type solution, eigenvalue lambda^2
  kHomogMinus,  // J_0-type solution, eigenvalue -lambda^2
  kSecond,      // F = (1/2c) dG/dt, G checked with the constant forcing
  kOdd,         // odd-mixture solution H with its forcing
  kPlanar,      // 2D solution
  kNdim,        // N-dimensional solution
  kThirdOrder,  // cyclic planar motion with three directions
};

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;
};

// Maps each point to the series variable, certifies the series and reports
// the solution value per point. Points outside the support are listed as
// precondition failures.
ResidualReport verify_kg_cartesian(double alpha, double lambda, double c,
                                   SolutionKind kind,
                                   std::span<const GridPoint> points,
                                   int dim = 3);

// Closed-form value of the cartesian solution at a point.
double kg_solution_value(double alpha, double lambda, double c,
                         SolutionKind kind, const GridPoint& p, int dim = 3);

// Cyclic-motion variable w' = (lambda / c) cbrt((ct + 2x)((ct - x)^2 - 3y^2)),
// obtained from z1 = ct/2 + x, z2,3 = (ct - x)/sqrt(3) +- y, w = cbrt(z1 z2 z3)
// and w' = cbrt(6) lambda w / c.
double cyclic_variable(double lambda, double c, const GridPoint& p);

// f(k, t) = t^{2a-2} sum_j ((t/2)^a |k|)^{2j} / Gamma(a j + a)^2.
double epd_operational(double alpha, double multiplier, double t, int terms);
SeriesSolution epd_series(double alpha, double multiplier, int terms);

// Boundary term f(0) z^{-alpha} / Gamma(1 - alpha) separating d/dz D^alpha
// from D^alpha d/dz for a monomial series f in z.
double noncommutation_witness(double alpha, const SeriesSolution& f, double z);
// [d/dz, D^alpha] f computed termwise with Riemann-Liouville monomial rules.
SeriesSolution rl_commutator(double alpha, const SeriesSolution& f);

// Registry of named equations.
std::vector<std::string> verification_cases();
std::vector<double> verification_alphas();
ResidualReport run_case(const std::string& name, double alpha,
                        double lambda = 1.0, double c = 1.0, int terms = 40);

}  // namespace fracflight
