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

#include "fracflight/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "fracflight/errors.hpp"

namespace fracflight {
namespace {

// Kronrod abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

double eval(const RealFn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw QuadratureError("integrand is not finite at x = " +
                          std::to_string(x));
  }
  return y;
}

Segment gk21(const RealFn& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 21> fv{};
  fv[10] = eval(f, center);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv[j] = eval(f, center - dx);
    fv[20 - j] = eval(f, center + dx);
  }
  double resk = kWgk[10] * fv[10];
  double resg = 0.0;
  double resabs = kWgk[10] * std::fabs(fv[10]);
  for (int j = 0; j < 10; ++j) {
    const double pair = fv[j] + fv[20 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::fabs(fv[j]) + std::fabs(fv[20 - j]));
    if (j % 2 == 1) resg += kWg[j / 2] * pair;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[10] * std::fabs(fv[10] - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::fabs(fv[j] - mean) + std::fabs(fv[20 - j] - mean));
  }
  resasc *= std::fabs(half);
  resabs *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return {a, b, resk * half, err};
}

}  // namespace

QuadResult integrate(const RealFn& f, double a, double b,
                     const QuadOptions& opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: limits must be finite");
  }
  QuadResult out;
  if (a == b) return out;
  std::priority_queue<Segment> heap;
  heap.push(gk21(f, a, b));
  out.evaluations = 21;
  double value = heap.top().value;
  double error = heap.top().error;
  int intervals = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::fabs(value)) &&
         intervals < opts.max_intervals) {
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      break;  // no room left to bisect
    }
    heap.pop();
    const Segment left = gk21(f, worst.a, mid);
    const Segment right = gk21(f, mid, worst.b);
    out.evaluations += 42;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-sum from the pieces to shed drift from the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  out.value = value;
  out.error = error;
  if (error > std::max(opts.fail_abs, opts.fail_rel * std::fabs(value))) {
    throw QuadratureError("quadrature error estimate " + std::to_string(error) +
                          " above target after " + std::to_string(intervals) +
                          " intervals");
  }
  return out;
}

QuadResult integrate_endpoint_powers(const RealFn& f, double a, double b,
                                     double p, double q,
                                     const QuadOptions& opts) {
  if (!(p > -1.0) || !(q > -1.0)) {
    throw DomainError("integrate_endpoint_powers: exponents must exceed -1");
  }
  if (!(b > a)) throw DomainError("integrate_endpoint_powers: need a < b");
  const double mid = 0.5 * (a + b);
  const double h = mid - a;
  const double ep = 1.0 / (p + 1.0);
  const double eq = 1.0 / (q + 1.0);
  // The gap g to the endpoint is exact in v, but a +- g rounds. f is then
  // evaluated at the nearest representable point and corrected by its
  // leading power (g / g_actual)^p.
  const RealFn left = [&](double v) {
    const double g = h * std::pow(v, ep);
    double x = a + g;
    if (!(x > a)) x = std::nextafter(a, b);
    const double scale = p == 0.0 ? 1.0 : std::pow(g / (x - a), p);
    return f(x) * scale * h * ep * std::pow(v, ep - 1.0);
  };
  const RealFn right = [&](double v) {
    const double g = h * std::pow(v, eq);
    double x = b - g;
    if (!(x < b)) x = std::nextafter(b, a);
    const double scale = q == 0.0 ? 1.0 : std::pow(g / (b - x), q);
    return f(x) * scale * h * eq * std::pow(v, eq - 1.0);
  };
  const QuadResult l = integrate(left, 0.0, 1.0, opts);
  const QuadResult r = integrate(right, 0.0, 1.0, opts);
  return {l.value + r.value, l.error + r.error, l.evaluations + r.evaluations};
}

}  // namespace fracflight
