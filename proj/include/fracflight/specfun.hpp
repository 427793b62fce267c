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
#include <vector>

namespace fracflight {

// log|x| together with the sign of x; sign == 0 means x is exactly zero.
struct SignedLog {
  double log_abs;
  int sign;
};

// One term of a series in log form. A term with pole == true is an exact
// zero produced by the reciprocal-Gamma convention; it neither contributes
// nor advances the stopping rule. sign == 0 without pole is an ordinary
// zero (e.g. z == 0) and does count as a small term.
struct LogTerm {
  double log_abs = 0.0;
  int sign = 0;
  bool pole = false;

  static LogTerm zero() { return {0.0, 0, false}; }
  static LogTerm poled() { return {0.0, 0, true}; }
};

struct SeriesPolicy {
  double rel_tol = 1e-16;
  int consecutive_small = 3;
  int max_terms = 10000;
  // Sum of |terms| over |sum| above which the result is flagged.
  double condition_warning = 1e8;
};

// Result of a series summation. The value is sign * exp(log_abs), which
// lets callers combine very large sums without overflow.
struct SeriesSum {
  double log_abs = 0.0;
  int sign = 0;
  int terms = 0;
  double condition = 1.0;
  bool precision_warning = false;

  double value() const;
};

// Sums term(0), term(1), ... under `policy`. Terms are rescaled against the
// running maximum so that sums far outside the double range stay finite in
// log form. Throws ConvergenceError when the cap is reached.
SeriesSum sum_log_series(const std::function<LogTerm(int)>& term,
                         const SeriesPolicy& policy = {});

// --- Gamma -----------------------------------------------------------------

bool is_gamma_pole(double x);

// Gamma(x) on the real line. Throws PoleError at 0, -1, -2, ...
double gamma_real(double x);

// 1/Gamma(x), exactly 0 at the poles.
double rgamma(double x);

// log|Gamma(x)| with the sign of Gamma(x). At a pole returns
// {+inf, 0}.
SignedLog lgamma_signed(double x);

// sin(pi x) with exact zeros at the integers.
double sin_pi(double x);

// log(z^k) term helper: returns the signed log of z^k (k >= 0).
SignedLog log_power(double z, int k);

// --- Mittag-Leffler family -------------------------------------------------

struct MLParams {
  double beta_power;  // outer exponent of the Gamma
  double nu;          // inner order
  double gamma_shift;

  MLParams(double beta_power, double nu, double gamma_shift);
};

struct MultiIndexML {
  std::vector<double> rhos;
  std::vector<double> mus;

  MultiIndexML(std::vector<double> rhos, std::vector<double> mus);
};

// E_{alpha,beta}(z) = sum z^k / Gamma(alpha k + beta).
double mittag_leffler(double alpha, double beta, double z);
SeriesSum mittag_leffler_sum(double alpha, double beta, double z);

// sum z^k / Gamma(nu k + gamma)^beta_power.
double gen_beta_ml(const MLParams& p, double z);
SeriesSum gen_beta_ml_sum(const MLParams& p, double z);

// sum z^k / prod_j Gamma(k rho_j + mu_j).
double multi_index_ml(const MultiIndexML& p, double z);
SeriesSum multi_index_ml_sum(const MultiIndexML& p, double z);

// I_{0,n}(x) = sum (x/n)^{nk} / (k!)^n.
double hyper_bessel(int n, double x);

}  // namespace fracflight
