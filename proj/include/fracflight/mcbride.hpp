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

#include <cstddef>
#include <vector>

#include "fracflight/quadrature.hpp"

namespace fracflight {

// L = x^{a_1} D x^{a_2} ... x^{a_n} D x^{a_{n+1}} with the derived constants
// a = sum a_k, m = |a - n| and b_k = (sum_{i>k} a_i + k - n) / m.
class HyperBesselOp {
 public:
  HyperBesselOp(int n, std::vector<double> a);

  // d^2/dw^2 + (1/w) d/dw
  static HyperBesselOp bessel_1d();
  // d^2/dw^2 + (2/w) d/dw
  static HyperBesselOp bessel_2d();
  // d^2/dw^2 + (N/w) d/dw
  static HyperBesselOp bessel_nd(int dim);
  // w^{-2} d/dw + 3 w^{-1} d^2/dw^2 + d^3/dw^3
  static HyperBesselOp third_order();
  // w^{-n} (w d/dw)^n
  static HyperBesselOp hyper_bessel(int n);
  // t^{-chi} d/dt t^{chi} d/dt
  static HyperBesselOp epd(double chi);

  int order() const { return n_; }
  const std::vector<double>& coefficients() const { return a_; }
  double a_sum() const { return a_sum_; }
  double m() const { return m_; }
  const std::vector<double>& b() const { return b_; }

 private:
  int n_;
  std::vector<double> a_;
  double a_sum_;
  double m_;
  std::vector<double> b_;
};

// Action of an operator on a single power: x^beta -> coefficient x^exponent.
struct MonomialAction {
  double coefficient = 0.0;
  double exponent = 0.0;
};

// How the series variable w relates to physical coordinates.
enum class VariableMap {
  kPlain,        // w itself
  kLightCone1D,  // w = sqrt(c^2 t^2 - x^2)
  kLightCone2D,  // w = sqrt(c^2 t^2 - x^2 - y^2)
  kLightConeND,  // w = sqrt(c^2 t^2 - |x|^2)
  kCyclic3,      // w' = (lambda / c) cbrt((ct + 2x)((ct - x)^2 - 3 y^2))
  kTime,         // w = t
};

struct SeriesTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

// Finite formal series sum_k c_k w^{e_k}; exponents strictly increasing.
class SeriesSolution {
 public:
  SeriesSolution() = default;
  explicit SeriesSolution(std::vector<SeriesTerm> terms,
                          VariableMap map = VariableMap::kPlain);

  const std::vector<SeriesTerm>& terms() const { return terms_; }
  VariableMap map() const { return map_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Value at w > 0.
  double evaluate(double w) const;
  // Smallest exponent carrying a nonzero coefficient.
  double leading_exponent() const;

 private:
  std::vector<SeriesTerm> terms_;
  VariableMap map_ = VariableMap::kPlain;
};

// Gamma(eta + beta/m + 1) / Gamma(alpha + eta + 1 + beta/m), the factor by
// which I_m^{eta,alpha} multiplies x^beta. Throws PreconditionError when
// eta + beta/m + 1 <= 0.
double ek_monomial(double m, double eta, double alpha, double beta);

// I_m^{eta,alpha} f at x for alpha > 0, by quadrature. `f_power_at_zero`
// is an optional hint p for f(u) ~ u^p near 0 used to flatten that end.
double ek_integral(double m, double eta, double alpha, const RealFn& f,
                   double x, double f_power_at_zero = 0.0);

// I_m^{eta,alpha} f for -1 < alpha <= 0 through one step of
// (eta+alpha+1) I^{eta,alpha+1} f + (1/m) I^{eta,alpha+1}(x f').
double ek_negative_order(double m, double eta, double alpha, const RealFn& f,
                         const RealFn& fprime, double x,
                         double f_power_at_zero = 0.0);

// I_m^alpha x^beta in the normalization
// I_m^alpha f = m / Gamma(alpha) int_0^x (x^m - u^m)^{alpha-1} u^{m-1} f du.
MonomialAction kober_monomial(double m, double alpha, double beta);

// L^alpha x^beta = m^{n alpha} prod_k Gamma(b_k+beta/m+1) /
// Gamma(-alpha+b_k+1+beta/m) x^{beta - m alpha}.
MonomialAction op_monomial(const HyperBesselOp& op, double alpha, double beta);

// Termwise op_monomial; zero coefficients dropped. A failing term raises
// PreconditionError naming its exponent.
SeriesSolution apply_to_series(const HyperBesselOp& op, double alpha,
                               const SeriesSolution& s);

}  // namespace fracflight
