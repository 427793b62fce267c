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

namespace fracflight {

using RealFn = std::function<double(double)>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
  // Reported error above max(fail_abs, fail_rel * |value|) raises
  // QuadratureError.
  double fail_abs = 1e-9;
  double fail_rel = 1e-9;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (10/21 point) quadrature on [a, b].
QuadResult integrate(const RealFn& f, double a, double b,
                     const QuadOptions& opts = {});

// Integrates f over [a, b] where f behaves like (x-a)^p near a and like
// (b-x)^q near b, p, q > -1. Each half of the interval is mapped through
// x - a = h v^{1/(p+1)} (resp. b - x = h v^{1/(q+1)}), which turns a pure
// power into a constant, and then passed to integrate().
QuadResult integrate_endpoint_powers(const RealFn& f, double a, double b,
                                     double p, double q,
                                     const QuadOptions& opts = {});

}  // namespace fracflight
