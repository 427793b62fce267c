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

#include "fracflight/pdecheck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracflight/errors.hpp"
#include "fracflight/flights.hpp"
#include "fracflight/specfun.hpp"

namespace fracflight {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same_exponent(double a, double b) {
  return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(a));
}

double relative(double diff, double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : diff / scale;
}

struct Image {
  double input_exponent;
  double coefficient;
  double exponent;
};

struct Expected {
  double exponent;
  double coefficient;
  bool used = false;
};

}  // namespace

bool ResidualReport::passed(double coefficient_tol, double pointwise_tol) const {
  if (!precondition_failures.empty()) return false;
  if (!(max_rel_residual <= coefficient_tol)) return false;
  if (!(max_pointwise_residual <= pointwise_tol)) return false;
  if (aux_tolerance > 0.0 && !(max_aux_residual <= aux_tolerance)) return false;
  return true;
}

ResidualReport verify(const EquationSpec& eq, const SeriesSolution& s,
                      std::span<const double> grid,
                      const std::function<double(double)>& reference) {
  if (eq.power < 1) throw DomainError("verify: operator power must be >= 1");
  ResidualReport rep;
  rep.alpha = eq.alpha;

  std::vector<Image> images;
  for (const auto& t : s.terms()) {
    if (t.coefficient != 0.0) images.push_back({t.exponent, t.coefficient, t.exponent});
  }
  for (int p = 0; p < eq.power; ++p) {
    std::vector<Image> next;
    for (const auto& im : images) {
      if (im.coefficient == 0.0) {
        rep.ledger.push_back({im.input_exponent, im.exponent, 0.0, 0.0, 0.0,
                              0.0, "annihilated"});
        continue;
      }
      try {
        const MonomialAction act = op_monomial(eq.op, eq.alpha, im.exponent);
        next.push_back({im.input_exponent, act.coefficient * im.coefficient,
                        act.exponent});
      } catch (const PreconditionError& e) {
        std::ostringstream msg;
        msg << "term with exponent " << im.input_exponent << ": " << e.what();
        rep.precondition_failures.push_back(msg.str());
      }
    }
    images = std::move(next);
  }

  std::vector<Expected> expected;
  auto add_expected = [&](double e, double c) {
    for (auto& x : expected) {
      if (same_exponent(x.exponent, e)) {
        x.coefficient += c;
        return;
      }
    }
    expected.push_back({e, c});
  };
  for (const auto& t : s.terms()) add_expected(t.exponent, eq.eigenvalue * t.coefficient);
  for (const auto& f : eq.forcing) add_expected(f.exponent, f.coefficient);

  double top_image = -std::numeric_limits<double>::infinity();
  for (const auto& im : images) top_image = std::max(top_image, im.exponent);

  for (const auto& im : images) {
    LedgerEntry le{im.input_exponent, im.exponent, im.coefficient, 0.0, 0.0, 0.0, ""};
    Expected* hit = nullptr;
    for (auto& x : expected) {
      if (!x.used && same_exponent(x.exponent, im.exponent)) {
        hit = &x;
        break;
      }
    }
    if (hit != nullptr) {
      hit->used = true;
      le.matched_coefficient = hit->coefficient;
      le.residual = std::fabs(im.coefficient - hit->coefficient);
      le.relative_residual = relative(le.residual, im.coefficient, hit->coefficient);
      le.role = im.coefficient == 0.0 && hit->coefficient == 0.0 ? "annihilated"
                                                                  : "matched";
    } else if (im.coefficient == 0.0) {
      le.role = "annihilated";
    } else {
      le.residual = std::fabs(im.coefficient);
      le.relative_residual = 1.0;
      le.role = "unmatched";
    }
    rep.ledger.push_back(le);
  }
  for (const auto& x : expected) {
    if (x.used) continue;
    LedgerEntry le{kNaN, x.exponent, 0.0, x.coefficient, 0.0, 0.0, ""};
    if (x.exponent > top_image && !same_exponent(x.exponent, top_image)) {
      le.role = "truncated";
    } else if (x.coefficient == 0.0) {
      le.role = "annihilated";
    } else {
      le.residual = std::fabs(x.coefficient);
      le.relative_residual = 1.0;
      le.role = "unmatched";
    }
    rep.ledger.push_back(le);
  }
  for (const auto& le : rep.ledger) {
    if (le.role == "truncated") continue;
    rep.max_abs_residual = std::max(rep.max_abs_residual, le.residual);
    rep.max_rel_residual = std::max(rep.max_rel_residual, le.relative_residual);
  }

  for (double w : grid) {
    PointResidual pr;
    pr.w = w;
    double lhs = 0.0;
    for (const auto& im : images) {
      if (im.coefficient != 0.0) lhs += im.coefficient * std::pow(w, im.exponent);
    }
    const double u = reference ? reference(w) : s.evaluate(w);
    double rhs = eq.eigenvalue * u;
    for (const auto& f : eq.forcing) {
      if (f.coefficient != 0.0) rhs += f.coefficient * std::pow(w, f.exponent);
    }
    pr.lhs = lhs;
    pr.rhs = rhs;
    pr.value = u;
    pr.residual = relative(std::fabs(lhs - rhs), lhs, rhs);
    rep.max_pointwise_residual = std::max(rep.max_pointwise_residual, pr.residual);
    rep.grid.push_back(pr);
  }
  return rep;
}

double cyclic_variable(double lambda, double c, const GridPoint& p) {
  const double ct = c * p.t;
  const double z1 = 0.5 * ct + p.x;
  const double z2 = (ct - p.x) / std::sqrt(3.0) + p.y;
  const double z3 = (ct - p.x) / std::sqrt(3.0) - p.y;
  if (!(z1 > 0.0 && z2 > 0.0 && z3 > 0.0)) {
    throw DomainError("point lies outside the cyclic-motion triangle");
  }
  const double w = std::cbrt(z1 * z2 * z3);
  return std::cbrt(6.0) * lambda * w / c;
}

double epd_operational(double alpha, double multiplier, double t, int terms) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("epd_operational: alpha must lie in (0, 1]");
  }
  if (!(multiplier >= 0.0) || !(t > 0.0) || terms < 1) {
    throw DomainError("epd_operational: need |k| >= 0, t > 0, K >= 1");
  }
  return epd_series(alpha, multiplier, terms).evaluate(t);
}

SeriesSolution epd_series(double alpha, double multiplier, int terms) {
  std::vector<SeriesTerm> out;
  for (int j = 0; j < terms; ++j) {
    const double g = rgamma(alpha * j + alpha);
    const double coef = std::pow(multiplier * std::pow(0.5, alpha), 2.0 * j) * g * g;
    if (j > 0 && coef == 0.0) break;
    out.push_back({coef, 2.0 * alpha * j + 2.0 * alpha - 2.0});
  }
  return SeriesSolution(std::move(out), VariableMap::kTime);
}

double noncommutation_witness(double alpha, const SeriesSolution& f, double z) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("noncommutation_witness: need 0 < alpha < 1");
  }
  if (!(z > 0.0)) throw DomainError("noncommutation_witness: need z > 0");
  double f0 = 0.0;
  for (const auto& t : f.terms()) {
    if (t.coefficient == 0.0) continue;
    if (t.exponent < 0.0) {
      throw DomainError("noncommutation_witness: f(0) is undefined");
    }
    if (t.exponent == 0.0) f0 = t.coefficient;
  }
  return f0 * std::pow(z, -alpha) * rgamma(1.0 - alpha);
}

SeriesSolution rl_commutator(double alpha, const SeriesSolution& f) {
  // D^a z^b = Gamma(b+1)/Gamma(b+1-a) z^{b-a}; d/dz z^b = b z^{b-1}.
  std::vector<SeriesTerm> out;
  for (const auto& t : f.terms()) {
    if (t.coefficient == 0.0) continue;
    const double b = t.exponent;
    if (!(b >= 0.0)) throw DomainError("rl_commutator: exponents must be >= 0");
    const double frac_then_d =
        gamma_real(b + 1.0) * rgamma(b + 1.0 - alpha) * (b - alpha);
    const double d_then_frac =
        b == 0.0 ? 0.0 : b * gamma_real(b) * rgamma(b - alpha);
    const double c = t.coefficient * (frac_then_d - d_then_frac);
    if (c != 0.0) out.push_back({c, b - alpha - 1.0});
  }
  return SeriesSolution(std::move(out), f.map());
}

namespace {

struct Case {
  EquationSpec eq;
  SeriesSolution s;
  std::function<double(double)> ref;
};

double sq(double v) { return v * v; }

Case kg1d_case(double a, double lambda, double c, int terms, double sign, int power) {
  const double p = lambda / std::pow(2.0 * c, a);
  const double q2 = sq(lambda / std::pow(c, a));
  std::vector<SeriesTerm> t;
  for (int k = 0; k < terms; ++k) {
    const double g = rgamma(a * k + a);
    t.push_back({std::pow(sign, k) * std::pow(p, 2.0 * k) * g * g,
                 2.0 * a * k + 2.0 * a - 2.0});
  }
  const MLParams ml(2.0, a, a);
  return {EquationSpec{HyperBesselOp::bessel_1d(), a, std::pow(sign * q2, power), {}, power},
          SeriesSolution(std::move(t), VariableMap::kLightCone1D),
          [=](double w) {
            return std::pow(w, 2.0 * a - 2.0) *
                   gen_beta_ml(ml, sign * p * p * std::pow(w, 2.0 * a));
          }};
}

Case second_case(double a, double lambda, double c, int terms) {
  const double p = lambda / std::pow(2.0 * c, a);
  const double q2 = sq(lambda / std::pow(c, a));
  std::vector<SeriesTerm> t;
  for (int k = 1; k <= terms; ++k) {
    const double g = rgamma(a * k + 1.0);
    t.push_back({std::pow(p, 2.0 * k) * g * g, 2.0 * a * k});
  }
  const MultiIndexML ml({a, a}, {a + 1.0, a + 1.0});
  return {EquationSpec{HyperBesselOp::bessel_1d(), a, q2, {{q2, 0.0}}, 1},
          SeriesSolution(std::move(t), VariableMap::kLightCone1D),
          [=](double w) {
            const double z = p * p * std::pow(w, 2.0 * a);
            return z * multi_index_ml(ml, z);
          }};
}

Case odd_case(double a, double lambda, double c, int terms) {
  const double p = lambda / std::pow(2.0 * c, a);
  const double q = lambda / std::pow(c, a);
  std::vector<SeriesTerm> t;
  for (int k = 0; k < terms; ++k) {
    const double g = rgamma(a * k + 0.5 * (1.0 + a));
    t.push_back({std::pow(p, 2.0 * k + 1.0) * g * g, 2.0 * a * k + a - 1.0});
  }
  const double gf = rgamma(0.5 * (1.0 - a));
  const MLParams ml(2.0, a, 0.5 * (1.0 + a));
  return {EquationSpec{HyperBesselOp::bessel_1d(), a, q * q,
                       {{std::pow(2.0, a) * q * gf * gf, -a - 1.0}}, 1},
          SeriesSolution(std::move(t), VariableMap::kLightCone1D),
          [=](double w) {
            return p * std::pow(w, a - 1.0) *
                   gen_beta_ml(ml, p * p * std::pow(w, 2.0 * a));
          }};
}

Case planar_case(double a, double lambda, double c, int terms) {
  const double q = lambda / std::pow(c, a);
  std::vector<SeriesTerm> t;
  for (int k = 0; k < terms; ++k) {
    t.push_back({std::pow(q, 2.0 * k + 2.0) * rgamma(2.0 * a * k + 2.0 * a),
                 2.0 * a * k + 2.0 * a - 2.0});
  }
  return {EquationSpec{HyperBesselOp::bessel_2d(), a, q * q, {}, 1},
          SeriesSolution(std::move(t), VariableMap::kLightCone2D),
          [=](double w) {
            return q * q * std::pow(w, 2.0 * a - 2.0) *
                   mittag_leffler(2.0 * a, 2.0 * a, q * q * std::pow(w, 2.0 * a));
          }};
}

Case planar_odd_case(double a, double lambda, double c, int terms) {
  const double q = lambda / std::pow(c, a);
  std::vector<SeriesTerm> t;
  for (int k = 0; k < terms; ++k) {
    t.push_back({std::pow(q, 2.0 * k + 1.0) * rgamma(2.0 * a * k + a),
                 2.0 * a * k + a - 2.0});
  }
  return {EquationSpec{HyperBesselOp::bessel_2d(), a, q * q,
                       {{q * rgamma(-a), -a - 2.0}}, 1},
          SeriesSolution(std::move(t), VariableMap::kLightCone2D),
          [=](double w) {
            return q * std::pow(w, a - 2.0) *
                   mittag_leffler(2.0 * a, a, q * q * std::pow(w, 2.0 * a));
          }};
}

Case planar_mixture_case(double a, double lambda, double c, int terms) {
  const double q = lambda / std::pow(c, a);
  std::vector<SeriesTerm> t;
  for (int k = 1; k <= 2 * terms; ++k) {
    t.push_back({std::pow(q, k) * rgamma(k * a), k * a - 2.0});
  }
  return {EquationSpec{HyperBesselOp::bessel_2d(), a, q * q,
                       {{q * rgamma(-a), -a - 2.0}}, 1},
          SeriesSolution(std::move(t), VariableMap::kLightCone2D),
          [=](double w) {
            return std::pow(w, -2.0) * mittag_leffler(a, 0.0, q * std::pow(w, a));
          }};
}

Case projection_case(double a, double lambda, double c, int terms) {
  const double p = lambda / std::pow(2.0 * c, a);
  const double q = lambda / std::pow(c, a);
  std::vector<SeriesTerm> t;
  for (int k = 0; k < 2 * terms; ++k) {
    const double g = rgamma(0.5 * (a * k + 1.0));
    t.push_back({std::pow(p, k) * g * g, a * k - 1.0});
  }
  const double g1 = rgamma(0.5 * (1.0 - 2.0 * a));
  const double g2 = rgamma(0.5 * (1.0 - a));
  const MLParams ml(2.0, 0.5 * a, 0.5);
  return {EquationSpec{HyperBesselOp::bessel_1d(), a, q * q,
                       {{std::pow(4.0, a) * g1 * g1, -1.0 - 2.0 * a},
                        {std::pow(2.0, a) * q * g2 * g2, -1.0 - a}},
                       1},
          SeriesSolution(std::move(t), VariableMap::kLightCone1D),
          [=](double w) { return gen_beta_ml(ml, p * std::pow(w, a)) / w; }};
}

Case ndim_case(int dim, double a, double lambda, double c, int terms) {
  const double q = lambda / std::pow(c, a);
  return {EquationSpec{HyperBesselOp::bessel_nd(dim), a, q * q, {}, 1},
          ndim_series(dim, a, lambda, c, terms),
          [=](double w) { return ndim_solution(dim, a, lambda, c, w); }};
}

// f(kappa w) with f(w) = w^{n a - n} sum (w/n)^{n a k} / Gamma(a k + a)^n.
Case hyper_case(int n, double a, double kappa, int terms) {
  std::vector<SeriesTerm> t;
  for (int k = 0; k < terms; ++k) {
    const double e = n * a * k + n * a - n;
    const double lg = e * std::log(kappa) - n * a * k * std::log(double(n)) -
                      n * lgamma_signed(a * k + a).log_abs;
    t.push_back({std::exp(lg), e});
  }
  const MLParams ml(n, a, a);
  return {EquationSpec{HyperBesselOp::hyper_bessel(n), a, std::pow(kappa, n * a), {}, 1},
          SeriesSolution(std::move(t), VariableMap::kPlain),
          [=](double w) {
            const double v = kappa * w;
            return std::pow(v, n * a - n) * gen_beta_ml(ml, std::pow(v / n, n * a));
          }};
}

Case epd_case(double a, double multiplier, int terms) {
  const MLParams ml(2.0, a, a);
  return {EquationSpec{HyperBesselOp::epd(1.0), a, multiplier * multiplier, {}, 1},
          epd_series(a, multiplier, terms), [=](double t) {
            return std::pow(t, 2.0 * a - 2.0) *
                   gen_beta_ml(ml, sq(multiplier * std::pow(0.5 * t, a)));
          }};
}

Case build_case(const std::string& name, double a, double lambda, double c,
                int terms) {
  if (name == "kg1d") return kg1d_case(a, lambda, c, terms, 1.0, 1);
  if (name == "kg1d-minus") return kg1d_case(a, lambda, c, terms, -1.0, 1);
  if (name == "kg1d-iterate2") return kg1d_case(a, lambda, c, terms, 1.0, 2);
  if (name == "kg1d-iterate3") return kg1d_case(a, lambda, c, terms, 1.0, 3);
  if (name == "kg1d-second") return second_case(a, lambda, c, terms);
  if (name == "kg1d-odd") return odd_case(a, lambda, c, terms);
  if (name == "kg2d") return planar_case(a, lambda, c, terms);
  if (name == "kg2d-odd") return planar_odd_case(a, lambda, c, terms);
  if (name == "kg2d-mixture") return planar_mixture_case(a, lambda, c, terms);
  if (name == "projection") return projection_case(a, lambda, c, terms);
  if (name.rfind("kgnd-", 0) == 0) {
    return ndim_case(std::stoi(name.substr(5)), a, lambda, c, terms);
  }
  if (name.rfind("hyperbessel-", 0) == 0) {
    return hyper_case(std::stoi(name.substr(12)), a, 1.0, terms);
  }
  if (name == "third-order") {
    return hyper_case(3, a, std::cbrt(6.0) * lambda / c, terms);
  }
  if (name == "epd") return epd_case(a, 2.0, terms);
  throw DomainError("unknown verification case: " + name);
}

const std::vector<double> kGrid = {0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0};

}  // namespace

std::vector<std::string> verification_cases() {
  return {"kg1d",          "kg1d-minus",    "kg1d-iterate2", "kg1d-iterate3",
          "kg1d-second",   "kg1d-odd",      "kg2d",          "kg2d-odd",
          "kg2d-mixture",  "projection",    "kgnd-1",        "kgnd-2",
          "kgnd-3",        "kgnd-5",        "hyperbessel-2", "hyperbessel-3",
          "hyperbessel-4", "third-order",   "epd"};
}

std::vector<double> verification_alphas() { return {0.3, 0.5, 0.7, 1.0}; }

ResidualReport run_case(const std::string& name, double alpha, double lambda,
                        double c, int terms) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("run_case: alpha must lie in (0, 1]");
  }
  if (!(lambda > 0.0) || !(c > 0.0)) {
    throw DomainError("run_case: lambda and c must be positive");
  }
  if (terms < 2) throw DomainError("run_case: need at least 2 terms");
  // Grow the truncation until the last term is negligible on the grid.
  Case cs = build_case(name, alpha, lambda, c, terms);
  const double w_max = kGrid.back();
  for (int k = terms; k < 1000; k *= 2) {
    const auto& last = cs.s.terms().back();
    const double tail = std::fabs(last.coefficient) * std::pow(w_max, last.exponent);
    if (tail <= 1e-17 * std::fabs(cs.s.evaluate(w_max))) break;
    cs = build_case(name, alpha, lambda, c, 2 * k);
  }
  ResidualReport r = verify(cs.eq, cs.s, kGrid, cs.ref);
  r.name = name;
  return r;
}

// --- Cartesian front end ----------------------------------------------------

namespace {

double light_cone_w(double c, const GridPoint& p, bool planar) {
  const double ct = c * p.t;
  const double r = planar ? std::hypot(p.x, p.y) : std::fabs(p.x);
  if (!(p.t > 0.0) || !(r < ct)) {
    throw DomainError("point lies outside the light cone");
  }
  return std::sqrt((ct - r) * (ct + r));
}

double series_variable(double lambda, double c, SolutionKind kind,
                       const GridPoint& p) {
  switch (kind) {
    case SolutionKind::kPlanar:
    case SolutionKind::kNdim:
      return light_cone_w(c, p, true);
    case SolutionKind::kThirdOrder:
      return cyclic_variable(lambda, c, p);
    default:
      return light_cone_w(c, p, false);
  }
}

Case kind_case(double a, double lambda, double c, SolutionKind kind, int dim) {
  constexpr int terms = 40;
  switch (kind) {
    case SolutionKind::kHomogPlus:
      return kg1d_case(a, lambda, c, terms, 1.0, 1);
    case SolutionKind::kHomogMinus:
      return kg1d_case(a, lambda, c, terms, -1.0, 1);
    case SolutionKind::kSecond:
      return second_case(a, lambda, c, terms);
    case SolutionKind::kOdd:
      return odd_case(a, lambda, c, terms);
    case SolutionKind::kPlanar:
      return planar_case(a, lambda, c, terms);
    case SolutionKind::kNdim:
      return ndim_case(dim, a, lambda, c, terms);
    case SolutionKind::kThirdOrder:
      return hyper_case(3, a, 1.0, terms);
  }
  throw DomainError("unknown solution kind");
}

const char* kind_name(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::kHomogPlus: return "homog_plus";
    case SolutionKind::kHomogMinus: return "homog_minus";
    case SolutionKind::kSecond: return "second";
    case SolutionKind::kOdd: return "odd";
    case SolutionKind::kPlanar: return "planar";
    case SolutionKind::kNdim: return "ndim";
    case SolutionKind::kThirdOrder: return "third_order";
  }
  return "unknown";
}

// G(x, t) of the second solution, F = (1/2c) dG/dt.
double second_g(double a, double lambda, double c, double x, double t) {
  const double ct = c * t;
  const double w2 = (ct - x) * (ct + x);
  const double p = lambda / std::pow(2.0 * c, a);
  const double z = p * p * std::pow(w2, a);
  return z * multi_index_ml(MultiIndexML({a, a}, {a + 1.0, a + 1.0}), z);
}

}  // namespace

double kg_solution_value(double a, double lambda, double c, SolutionKind kind,
                         const GridPoint& pt, int dim) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("alpha must lie in (0, 1]");
  const double w = series_variable(lambda, c, kind, pt);
  const double p = lambda / std::pow(2.0 * c, a);
  switch (kind) {
    case SolutionKind::kSecond: {
      // ct sum_{k>=1} p^{2k} w^{2ak-2} / (Gamma(ak+1) Gamma(ak))
      const double z = p * p * std::pow(w, 2.0 * a);
      return c * pt.t / (w * w) *
             multi_index_ml(MultiIndexML({a, a}, {1.0, 0.0}), z);
    }
    case SolutionKind::kThirdOrder: {
      const MLParams ml(3.0, a, a);
      const double v = w / 3.0;
      return std::pow(v, 3.0 * a - 3.0) * gen_beta_ml(ml, std::pow(v, 3.0 * a));
    }
    default:
      return kind_case(a, lambda, c, kind, dim).ref(w);
  }
}

ResidualReport verify_kg_cartesian(double alpha, double lambda, double c,
                                   SolutionKind kind,
                                   std::span<const GridPoint> points, int dim) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("verify_kg_cartesian: alpha must lie in (0, 1]");
  }
  if (!(lambda > 0.0) || !(c > 0.0)) {
    throw DomainError("verify_kg_cartesian: lambda and c must be positive");
  }
  const Case cs = kind_case(alpha, lambda, c, kind, dim);
  std::vector<double> ws;
  std::vector<GridPoint> kept;
  std::vector<std::string> failures;
  for (const auto& p : points) {
    try {
      ws.push_back(series_variable(lambda, c, kind, p));
      kept.push_back(p);
    } catch (const DomainError& e) {
      std::ostringstream msg;
      msg << "point (" << p.x << ", " << p.y << ", " << p.t << "): " << e.what();
      failures.push_back(msg.str());
    }
  }
  ResidualReport r = verify(cs.eq, cs.s, ws, cs.ref);
  r.name = kind_name(kind);
  for (auto& f : failures) r.precondition_failures.push_back(f);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    r.grid[i].value = kg_solution_value(alpha, lambda, c, kind, kept[i], dim);
  }
  if (kind == SolutionKind::kSecond) {
    // F against a fourth-order central difference of G in t.
    r.aux_tolerance = 1e-7;
    for (const auto& p : kept) {
      // G ~ w^{2a} is not smooth at the cone; keep the stencil well inside it.
      const double h = std::min(1e-3 * p.t, 1e-2 * (p.t - std::fabs(p.x) / c));
      if (!(std::fabs(p.x) < c * (p.t - 2.0 * h))) continue;
      auto g = [&](double tt) { return second_g(alpha, lambda, c, p.x, tt); };
      const double dg =
          (g(p.t - 2 * h) - 8 * g(p.t - h) + 8 * g(p.t + h) - g(p.t + 2 * h)) /
          (12.0 * h);
      const double f = kg_solution_value(alpha, lambda, c, kind, p, dim);
      r.max_aux_residual =
          std::max(r.max_aux_residual, relative(std::fabs(f - dg / (2.0 * c)), f, dg / (2.0 * c)));
    }
  }
  return r;
}

}  // namespace fracflight
