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

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracflight/errors.hpp"
#include "fracflight/quadrature.hpp"

namespace ff = fracflight;

namespace {

TEST(Quadrature, SmoothIntegrands) {
  EXPECT_NEAR(ff::integrate([](double x) { return std::sin(x); }, 0, std::numbers::pi).value,
              2.0, 1e-13);
  EXPECT_NEAR(ff::integrate([](double x) { return std::exp(-x * x); }, -6, 6).value,
              std::sqrt(std::numbers::pi), 1e-13);
  EXPECT_NEAR(ff::integrate([](double x) { return x; }, 1, 1).value, 0.0, 0.0);
}

TEST(Quadrature, EndpointPowers) {
  const double p = -0.5, q = -0.7;
  const auto r = ff::integrate_endpoint_powers(
      [&](double x) { return std::pow(x, p) * std::pow(1 - x, q); }, 0, 1, p, q);
  EXPECT_NEAR(r.value, boost::math::beta(0.5, 0.3), 1e-10);
  // Near -1 the gap to x = 1 falls below an ulp long before the mass does.
  const auto hard = ff::integrate_endpoint_powers(
      [](double x) { return std::pow(1 - x, -0.9); }, 0, 1, 0, -0.9);
  EXPECT_NEAR(hard.value, 10.0, 1e-8);
  // Substituting u = 2 - x gives 4 sqrt2 - (4/3) sqrt2.
  const auto s = ff::integrate_endpoint_powers(
      [](double x) { return x / std::sqrt(2 - x); }, 0, 2, 0, -0.5);
  EXPECT_NEAR(s.value, 8.0 / 3.0 * std::sqrt(2.0), 1e-11);
}

TEST(Quadrature, FailuresRaise) {
  EXPECT_THROW(ff::integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0, 1),
               ff::QuadratureError);
  ff::QuadOptions few;
  few.max_intervals = 3;
  EXPECT_THROW(ff::integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1, few),
               ff::QuadratureError);
}

}  // namespace
