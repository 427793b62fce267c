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

#include <vector>

#include "fracflight/random.hpp"

namespace fracflight {

struct EvenOddMass {
  double even = 0.0;
  double odd = 0.0;
};

// P{N = k} = (lambda t^alpha)^k / (Gamma(alpha k + 1) E_{alpha,1}(lambda t^alpha)).
class FracPoissonLaw {
 public:
  FracPoissonLaw(double alpha, double lambda, double t);

  double alpha() const { return alpha_; }
  double lambda() const { return lambda_; }
  double t() const { return t_; }
  // z = lambda t^alpha
  double rate_argument() const { return z_; }
  // log E_{alpha,1}(z)
  double log_normalizer() const { return log_e_; }

  double pmf(unsigned k) const;
  double log_pmf(unsigned k) const;
  // E_{alpha,1}(u z) / E_{alpha,1}(z), |u| <= 1.
  double pgf(double u) const;
  EvenOddMass even_odd_mass() const;

  // Inverse-CDF draw from the cached cumulative table.
  unsigned sample(Rng& rng) const;

  // Largest k in the cumulative table and the mass beyond it.
  unsigned table_cap() const { return static_cast<unsigned>(cum_.size() - 1); }
  double table_tail() const { return 1.0 - cum_.back(); }
  const std::vector<double>& cumulative() const { return cum_; }

 private:
  double alpha_, lambda_, t_, z_, log_e_;
  std::vector<double> cum_;
};

}  // namespace fracflight
