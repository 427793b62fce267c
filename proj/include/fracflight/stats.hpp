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

// One-sample Kolmogorov-Smirnov distance. `cdf` is P(X <= x); `cdf_left`
// is P(X < x) and only differs from `cdf` at atoms. When omitted the law is
// taken to be continuous.
double ks_one_sample(std::vector<double> samples,
                     const std::function<double(double)>& cdf,
                     const std::function<double(double)>& cdf_left = {});

// Two-sample Kolmogorov-Smirnov distance; ties are handled exactly.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// CDF of a law with an absolutely continuous part on (lo, hi) plus optional
// atoms at lo and hi, tabulated by quadrature on a cosine-clustered grid.
// The density may blow up like (x-lo)^p_lo and (hi-x)^p_hi.
class TabulatedCdf {
 public:
  TabulatedCdf(const std::function<double(double)>& density, double lo,
               double hi, double p_lo, double p_hi, double atom_lo,
               double atom_hi, int cells = 2000);

  double operator()(double x) const;
  double left_limit(double x) const;
  double ac_mass() const { return cum_.back(); }
  double total_mass() const { return cum_.back() + atom_lo_ + atom_hi_; }

 private:
  double ac_at(double x) const;

  double lo_, hi_, atom_lo_, atom_hi_;
  std::vector<double> theta_;
  std::vector<double> cum_;
};

}  // namespace fracflight
