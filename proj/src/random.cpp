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

#include "fracflight/random.hpp"

#include <cmath>

#include "fracflight/errors.hpp"

namespace fracflight {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::for_block(std::uint64_t master, std::uint64_t block) {
  return Rng(splitmix64(splitmix64(master) ^ splitmix64(block + 1)));
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

namespace {

double marsaglia_tsang(Rng& rng, double shape) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

void check_shape(double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw DomainError("gamma variate: shape must be positive");
  }
}

}  // namespace

double sample_gamma(Rng& rng, double shape) {
  check_shape(shape);
  if (shape >= 1.0) return marsaglia_tsang(rng, shape);
  const double g = marsaglia_tsang(rng, shape + 1.0);
  return g * std::pow(rng.uniform(), 1.0 / shape);
}

double sample_log_gamma(Rng& rng, double shape) {
  check_shape(shape);
  if (shape >= 1.0) return std::log(marsaglia_tsang(rng, shape));
  const double g = marsaglia_tsang(rng, shape + 1.0);
  return std::log(g) + std::log(rng.uniform()) / shape;
}

double sample_beta(Rng& rng, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("sample_beta: shapes must be positive");
  }
  if (a >= 1.0 && b >= 1.0) {
    const double x = marsaglia_tsang(rng, a);
    const double y = marsaglia_tsang(rng, b);
    return x / (x + y);
  }
  const double lx = sample_log_gamma(rng, a);
  const double ly = sample_log_gamma(rng, b);
  // x / (x + y) = 1 / (1 + exp(ly - lx))
  return 1.0 / (1.0 + std::exp(ly - lx));
}

unsigned sample_binomial(Rng& rng, unsigned n, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("sample_binomial: p must lie in [0, 1]");
  }
  unsigned k = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (rng.uniform() < p) ++k;
  }
  return k;
}

}  // namespace fracflight
