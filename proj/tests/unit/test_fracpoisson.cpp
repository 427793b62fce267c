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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <vector>

#include "fracflight/errors.hpp"
#include "fracflight/fracpoisson.hpp"
#include "fracflight/random.hpp"
#include "fracflight/specfun.hpp"

namespace ff = fracflight;

namespace {

double poisson(double mu, unsigned k) {
  return std::exp(-mu + k * std::log(mu) - std::lgamma(k + 1.0));
}

TEST(FracPoisson, Examples) {
  EXPECT_NEAR(ff::FracPoissonLaw(1, 1, 1).pmf(0), 0.3678794412, 1e-10);
  EXPECT_NEAR(ff::FracPoissonLaw(1, 2, 1.5).pmf(3), poisson(3.0, 3), 1e-14);
  // mpmath, 40 digits: tests/oracle/series_oracle.py
  EXPECT_NEAR(ff::FracPoissonLaw(0.6, 1, 1).pmf(2), 0.21362241841192009321, 1e-14);
  const ff::FracPoissonLaw law(0.4, 2, 3);
  EXPECT_NEAR(law.pmf(0), 1.0 / ff::mittag_leffler(0.4, 1, 2 * std::pow(3, 0.4)), 1e-15);
  EXPECT_NEAR(std::exp(law.log_pmf(5)), law.pmf(5), 1e-16);
}

TEST(FracPoisson, Validation) {
  EXPECT_THROW(ff::FracPoissonLaw(0, 1, 1), ff::DomainError);
  EXPECT_THROW(ff::FracPoissonLaw(1.2, 1, 1), ff::DomainError);
  EXPECT_THROW(ff::FracPoissonLaw(0.5, 0, 1), ff::DomainError);
  EXPECT_THROW(ff::FracPoissonLaw(0.5, 1, -1), ff::DomainError);
  EXPECT_THROW(ff::FracPoissonLaw(0.5, 1, 1).pgf(1.5), ff::DomainError);
  // t = 0: all mass at zero.
  const ff::FracPoissonLaw z(0.5, 1, 0);
  EXPECT_EQ(z.pmf(0), 1.0);
  EXPECT_EQ(z.pmf(1), 0.0);
}

TEST(FracPoisson, Normalization) {
  for (double a : {0.1, 0.3, 0.6, 1.0}) {
    for (double lt : {0.2, 1.0, 5.0, 20.0}) {
      // Direct summation needs roughly exp(log(z)/alpha) terms.
      if ((a < 0.2 && lt > 1.0) || (a < 0.5 && lt > 5.0)) continue;
      const ff::FracPoissonLaw law(a, lt, 1.0);
      double s = 0;
      for (unsigned k = 0; k <= law.table_cap(); ++k) s += law.pmf(k);
      EXPECT_NEAR(s, 1.0, 1e-10) << a << " " << lt;
      EXPECT_LT(law.table_tail(), 1e-12);
    }
  }
}

TEST(FracPoisson, UnreachableNormalizerRaises) {
  // 20^k / Gamma(k/10 + 1) peaks far past the term cap.
  EXPECT_THROW(ff::FracPoissonLaw(0.1, 20, 1), ff::ConvergenceError);
}

TEST(FracPoisson, PgfIsPowerSeries) {
  for (double a : {0.3, 0.7, 1.0}) {
    const ff::FracPoissonLaw law(a, 1.5, 1.2);
    for (double u : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      double s = 0;
      for (unsigned k = 0; k <= law.table_cap() + 20; ++k) s += law.pmf(k) * std::pow(u, k);
      EXPECT_NEAR(law.pgf(u), s, 1e-10) << a << " " << u;
    }
  }
  EXPECT_NEAR(ff::FracPoissonLaw(1, 1, 2).pgf(0.3), std::exp(2 * (0.3 - 1)), 1e-14);
  EXPECT_EQ(ff::FracPoissonLaw(0.5, 1, 1).pgf(1.0), 1.0);
  EXPECT_NEAR(ff::FracPoissonLaw(0.5, 1, 1).pgf(0.0), ff::FracPoissonLaw(0.5, 1, 1).pmf(0),
              1e-16);
}

TEST(FracPoisson, EvenOddSplit) {
  const auto eo = ff::FracPoissonLaw(1, 1, 1).even_odd_mass();
  EXPECT_NEAR(eo.even, std::exp(-1.0) * std::cosh(1.0), 1e-14);
  EXPECT_NEAR(eo.odd, std::exp(-1.0) * std::sinh(1.0), 1e-14);
  for (double a : {0.2, 0.5, 0.9}) {
    const ff::FracPoissonLaw law(a, 1, 1);
    const auto m = law.even_odd_mass();
    EXPECT_NEAR(m.even + m.odd, 1.0, 1e-12);
    double even = 0, odd = 0;
    for (unsigned k = 0; k <= law.table_cap(); ++k) (k % 2 ? odd : even) += law.pmf(k);
    EXPECT_NEAR(m.even, even, 1e-10);
    EXPECT_NEAR(m.odd, odd, 1e-10);
  }
}

TEST(FracPoisson, WeightedPoissonIdentity) {
  // pmf(k) is proportional to Poisson(z) weighted by k! / Gamma(alpha k + 1).
  const double a = 0.65, z = 1.7;
  const ff::FracPoissonLaw law(a, z, 1.0);
  double norm = 0;
  for (unsigned k = 0; k < 80; ++k) {
    norm += poisson(z, k) * std::tgamma(k + 1.0) / std::tgamma(a * k + 1);
  }
  for (unsigned k = 0; k < 10; ++k) {
    const double w = poisson(z, k) * std::tgamma(k + 1.0) / std::tgamma(a * k + 1) / norm;
    EXPECT_NEAR(law.pmf(k), w, 1e-14) << k;
  }
}

TEST(FracPoisson, ZeroProbabilityAges) {
  for (double a : {0.3, 0.8}) {
    double prev = 1.0;
    for (double t = 0.0; t <= 5.0; t += 0.25) {
      const double p0 = ff::FracPoissonLaw(a, 1.0, t).pmf(0);
      EXPECT_LE(p0, prev);
      prev = p0;
    }
  }
}

TEST(FracPoisson, SamplerMeanAtAlphaOne) {
  const ff::FracPoissonLaw law(1, 2, 1.5);
  const auto xs = ff::parallel_draws<unsigned>(1000000, 17, 4,
                                               [&](ff::Rng& r) { return law.sample(r); });
  double m = 0;
  for (unsigned x : xs) m += x;
  m /= xs.size();
  EXPECT_NEAR(m, 3.0, 3 * std::sqrt(3.0 / xs.size()));
}

TEST(FracPoisson, SamplerChiSquare) {
  const ff::FracPoissonLaw law(0.7, 1, 1);
  const int n = 100000;
  std::vector<double> counts(14, 0.0);
  ff::Rng r(42);
  for (int i = 0; i < n; ++i) counts[std::min(law.sample(r), 13u)] += 1;
  double chi2 = 0, tail = 1.0;
  for (unsigned k = 0; k <= 12; ++k) {
    const double e = n * law.pmf(k);
    tail -= law.pmf(k);
    chi2 += (counts[k] - e) * (counts[k] - e) / e;
  }
  // The tail cell is too thin for chi-square; it only has to be tiny.
  EXPECT_LT(counts[13], n * tail + 5 * std::sqrt(n * tail) + 5);
  const boost::math::chi_squared_distribution<> d(12);
  EXPECT_LT(chi2, quantile(d, 0.999));
}

TEST(FracPoisson, SamplerDeterministic) {
  const ff::FracPoissonLaw law(0.5, 3, 2);
  ff::Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(law.sample(a), law.sample(b));
}

}  // namespace
