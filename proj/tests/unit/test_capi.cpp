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

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "fracflight/fracflight.h"

namespace {

double square(double x, void*) { return x * x; }
double twice(double x, void*) { return 2 * x; }

TEST(CApi, VersionAndStatusNames) {
  EXPECT_NE(std::string(ff_version()), "");
  EXPECT_STREQ(ff_status_name(FF_OK), "ok");
  EXPECT_STREQ(ff_shape_name(FF_UNIFORM), "uniform");
}

TEST(CApi, SpecialFunctions) {
  double v = 0;
  ASSERT_EQ(ff_gamma(4.0, &v), FF_OK);
  EXPECT_EQ(v, 6.0);
  EXPECT_EQ(ff_gamma(-1.0, &v), FF_ERR_POLE);
  EXPECT_NE(std::string(ff_last_error()), "");
  ASSERT_EQ(ff_rgamma(-1.0, &v), FF_OK);
  EXPECT_EQ(v, 0.0);
  ASSERT_EQ(ff_mittag_leffler(1, 1, 1, &v), FF_OK);
  EXPECT_NEAR(v, std::exp(1.0), 1e-14);
  ASSERT_EQ(ff_gen_beta_ml(2, 1, 1, 1, &v), FF_OK);
  EXPECT_NEAR(v, 2.2795853023360673, 1e-13);
  const double rhos[] = {1, 1}, mus[] = {1, 1};
  ASSERT_EQ(ff_multi_index_ml(2, rhos, mus, 0.25, &v), FF_OK);
  EXPECT_NEAR(v, 1.2660658777520082, 1e-13);
  ASSERT_EQ(ff_hyper_bessel(2, 1, &v), FF_OK);
  EXPECT_NEAR(v, 1.2660658777520082, 1e-13);
  EXPECT_EQ(ff_mittag_leffler(1, 1, 1, nullptr), FF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(ff_multi_index_ml(0, rhos, mus, 0.25, &v), FF_ERR_DOMAIN);
}

TEST(CApi, Operators) {
  ff_operator* op = nullptr;
  ASSERT_EQ(ff_operator_third_order(&op), FF_OK);
  int order = 0;
  double m = 0, b[3];
  ASSERT_EQ(ff_operator_info(op, &order, &m, b), FF_OK);
  EXPECT_EQ(order, 3);
  EXPECT_EQ(m, 3.0);
  double c = 0, e = 0;
  ASSERT_EQ(ff_operator_monomial(op, 1, 3, &c, &e), FF_OK);
  EXPECT_NEAR(c, 27, 1e-12);
  EXPECT_EQ(e, 0.0);
  EXPECT_EQ(ff_operator_monomial(op, 1, -4, &c, &e), FF_ERR_PRECONDITION);
  ff_operator_free(op);
  const double a[] = {1, 1, 0};
  EXPECT_EQ(ff_operator_create(2, a, &op), FF_ERR_DOMAIN);
  ASSERT_EQ(ff_operator_bessel_nd(3, &op), FF_OK);
  ff_operator_free(op);
  ff_operator_free(nullptr);

  ASSERT_EQ(ff_ek_monomial(2, 0, 1, 2, &c), FF_OK);
  EXPECT_DOUBLE_EQ(c, 0.5);
  ASSERT_EQ(ff_kober_monomial(2, 0.5, 1, &c, &e), FF_OK);
  EXPECT_EQ(e, 2.0);
  double q = 0;
  ASSERT_EQ(ff_ek_integral(2, 0, 0.7, square, nullptr, 1.5, 2, &q), FF_OK);
  ASSERT_EQ(ff_ek_monomial(2, 0, 0.7, 2, &c), FF_OK);
  EXPECT_NEAR(q, c * 2.25, 1e-9);
  ASSERT_EQ(ff_ek_negative_order(2, 0, -0.3, square, twice, nullptr, 1.5, 2, &q), FF_OK);
  ASSERT_EQ(ff_ek_monomial(2, 0, -0.3, 2, &c), FF_OK);
  EXPECT_NEAR(q, c * 2.25, 1e-8);
}

TEST(CApi, FractionalPoisson) {
  ff_fpp* p = nullptr;
  ASSERT_EQ(ff_fpp_create(0.6, 1, 1, &p), FF_OK);
  double v = 0, even = 0, odd = 0;
  ASSERT_EQ(ff_fpp_pmf(p, 2, &v), FF_OK);
  EXPECT_NEAR(v, 0.21362241841192009321, 1e-14);
  ASSERT_EQ(ff_fpp_pgf(p, 1, &v), FF_OK);
  EXPECT_EQ(v, 1.0);
  ASSERT_EQ(ff_fpp_even_odd(p, &even, &odd), FF_OK);
  EXPECT_NEAR(even + odd, 1, 1e-12);
  std::vector<unsigned> a(3000), b(3000);
  ASSERT_EQ(ff_fpp_sample(p, 42, a.size(), 1, a.data()), FF_OK);
  ASSERT_EQ(ff_fpp_sample(p, 42, b.size(), 4, b.data()), FF_OK);
  EXPECT_EQ(a, b);
  ff_fpp_free(p);
  EXPECT_EQ(ff_fpp_create(1.5, 1, 1, &p), FF_ERR_DOMAIN);
  EXPECT_EQ(ff_fpp_create(0.5, 1, 1, nullptr), FF_ERR_INVALID_ARGUMENT);
}

TEST(CApi, Telegraph) {
  ff_telegraph* tel = nullptr;
  ASSERT_EQ(ff_telegraph_create(1, 1, 1, 1, &tel), FF_OK);
  double ac = 0, s = 0, v = 0;
  ASSERT_EQ(ff_telegraph_density(tel, 0, &ac, &s), FF_OK);
  EXPECT_NEAR(ac, std::exp(-1.0) / 2 * (1.2660658777520082 + 0.5651591039924851), 1e-13);
  EXPECT_NEAR(s, std::exp(-1.0) / 2, 1e-15);
  ASSERT_EQ(ff_telegraph_conditional(tel, 1, 0.3, &v), FF_OK);
  EXPECT_NEAR(v, 0.5, 1e-15);
  ASSERT_EQ(ff_telegraph_beta_shape(tel, 3, &v), FF_OK);
  EXPECT_EQ(v, 2.0);
  EXPECT_EQ(ff_telegraph_conditional(tel, 1, 1.5, &v), FF_ERR_DOMAIN);
  std::vector<double> xs(2000);
  ASSERT_EQ(ff_telegraph_sample(tel, 7, xs.size(), 2, xs.data()), FF_OK);
  for (double x : xs) EXPECT_LE(std::fabs(x), 1.0);
  ASSERT_EQ(ff_telegraph_sample_given(tel, 0, 7, 10, 1, xs.data()), FF_OK);
  EXPECT_EQ(std::fabs(xs[0]), 1.0);
  ff_telegraph_free(tel);

  ff_shape sh;
  ASSERT_EQ(ff_shape_classify(1.0 / 3, 3, FF_EVEN, 1e-12, &sh), FF_OK);
  EXPECT_EQ(sh, FF_UNIFORM);
  ASSERT_EQ(ff_shape_classify(0.2, 1, FF_ODD, 1e-12, &sh), FF_OK);
  EXPECT_EQ(sh, FF_ARCSINE);
  ASSERT_EQ(ff_shape_exponent(1, 3, FF_EVEN, &v), FF_OK);
  EXPECT_EQ(v, 2.0);
  EXPECT_EQ(ff_shape_classify(0.5, 0, FF_EVEN, 1e-12, &sh), FF_ERR_DOMAIN);
}

TEST(CApi, PlanarAndThinned) {
  ff_planar* pl = nullptr;
  ASSERT_EQ(ff_planar_create(1, 1, 1, 1, &pl), FF_OK);
  double ac = 0, bm = 0, v = 0, interior = 0;
  ASSERT_EQ(ff_planar_density(pl, 0.5, 0, &ac, &bm), FF_OK);
  const double w = std::sqrt(0.75);
  EXPECT_NEAR(ac, 1 / (2 * M_PI) * std::exp(-1 + w) / w, 1e-13);
  ASSERT_EQ(ff_planar_radial(pl, 0.5, &v), FF_OK);
  EXPECT_EQ(v, ac);
  ASSERT_EQ(ff_planar_masses(pl, &bm, &interior), FF_OK);
  EXPECT_NEAR(bm + interior, 1, 1e-15);
  ASSERT_EQ(ff_planar_conditional(pl, 2, 0.1, 0.1, &v), FF_OK);
  EXPECT_NEAR(v, 1 / M_PI, 1e-15);
  ASSERT_EQ(ff_planar_projection(pl, 0.2, &v), FF_OK);
  EXPECT_GT(v, 0);
  std::vector<double> xy(2000);
  ASSERT_EQ(ff_planar_sample(pl, 3, 1000, 4, xy.data()), FF_OK);
  for (int i = 0; i < 1000; ++i) EXPECT_LE(std::hypot(xy[2 * i], xy[2 * i + 1]), 1 + 1e-15);
  ASSERT_EQ(ff_planar_sample_given(pl, 0, 3, 10, 1, xy.data()), FF_OK);
  EXPECT_NEAR(std::hypot(xy[0], xy[1]), 1, 1e-15);
  ff_planar_free(pl);

  ff_thinned_spec spec{4, 1.0, 1.0, 1.0, FF_MIX_HOMOGENEOUS};
  ASSERT_EQ(ff_thinned_mean_density(&spec, 0.3, 0, &v), FF_OK);
  EXPECT_NEAR(v, 4 / (2 * M_PI) * (1 - 0.09), 1e-14);
  ASSERT_EQ(ff_thinned_boundary_mass(&spec, 2, &v), FF_OK);
  EXPECT_NEAR(v, std::exp(-2.0), 1e-15);  // no thinning: exp(-lambda t)
  ASSERT_EQ(ff_thinned_density(&spec, 1, 0.5, 0, &v), FF_OK);
  EXPECT_NEAR(v, 1 / (2 * M_PI) * std::exp(-1 + w) / w, 1e-13);
  ASSERT_EQ(ff_thinned_sample(&spec, 1, 9, 500, 2, xy.data()), FF_OK);
  spec.alpha = 2;
  EXPECT_EQ(ff_thinned_mean_density(&spec, 0.3, 0, &v), FF_ERR_DOMAIN);
}

TEST(CApi, Flights) {
  ff_flight* f = nullptr;
  ASSERT_EQ(ff_flight_create_4d(2, 1, 1, 1, &f), FF_OK);
  int dim = 0;
  double v = 0;
  ASSERT_EQ(ff_flight_dimension(f, &dim), FF_OK);
  EXPECT_EQ(dim, 4);
  ASSERT_EQ(ff_flight_density_radial(f, 0.5, &v), FF_OK);
  const double y = 0.75;
  EXPECT_NEAR(v, std::exp(-1 + y) * (y + 2) / (M_PI * M_PI), 1e-12);
  ASSERT_EQ(ff_flight_conditional_radial(f, 1, 0.2, &v), FF_OK);
  EXPECT_NEAR(v, 2 / (M_PI * M_PI), 1e-14);
  ASSERT_EQ(ff_flight_boundary_mass(f, &v), FF_OK);
  EXPECT_NEAR(v, std::exp(-1.0), 1e-15);
  std::vector<double> pts(400);
  ASSERT_EQ(ff_flight_sample(f, 5, 100, 2, pts.data()), FF_OK);
  ff_flight_free(f);

  ASSERT_EQ(ff_flight_create_fractional(3, 0.5, 1, 1, 1, &f), FF_OK);
  EXPECT_EQ(ff_flight_sample(f, 5, 100, 2, pts.data()), FF_ERR_DOMAIN);
  ASSERT_EQ(ff_flight_sample_given(f, 2, 5, 100, 2, pts.data()), FF_OK);
  EXPECT_EQ(ff_flight_density_radial(f, 0.5, &v), FF_ERR_DOMAIN);
  ff_flight_free(f);
  EXPECT_EQ(ff_flight_create_4d(0.5, 1, 1, 1, &f), FF_ERR_DOMAIN);
  ASSERT_EQ(ff_ndim_solution(1, 1, 1, 1, 0.5, &v), FF_OK);
  EXPECT_NEAR(v, 1.0634833707413236, 1e-13);  // I_0(0.5)
}

TEST(CApi, Verification) {
  char* json = nullptr;
  int passed = 0;
  ASSERT_EQ(ff_verify_cases(&json), FF_OK);
  EXPECT_NE(std::strstr(json, "\"kg1d\""), nullptr);
  ff_string_free(json);
  ASSERT_EQ(ff_verify_case("kg1d", 0.5, 1, 1, 40, &json, &passed), FF_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(std::strstr(json, "\"ledger\""), nullptr);
  ff_string_free(json);
  EXPECT_EQ(ff_verify_case("nope", 0.5, 1, 1, 40, &json, &passed), FF_ERR_DOMAIN);
  ASSERT_EQ(ff_verify_all(1, 1, 40, &json, &passed), FF_OK);
  EXPECT_EQ(passed, 1);
  ff_string_free(json);
  const double xyt[] = {0.3, 0, 1, -0.2, 0, 1.5};
  ASSERT_EQ(ff_verify_cartesian(1, 1, 1, FF_SOL_HOMOG_PLUS, xyt, 2, 3, &json, &passed), FF_OK);
  EXPECT_EQ(passed, 1);
  ff_string_free(json);
  double v = 0;
  ASSERT_EQ(ff_kg_solution(1, 1, 1, FF_SOL_HOMOG_MINUS, 0.3, 0, 1, 3, &v), FF_OK);
  EXPECT_NEAR(v, 0.785116600236962, 1e-13);  // J_0(sqrt(0.91)), mpmath
  ASSERT_EQ(ff_epd_operational(1, 1, 2, 40, &v), FF_OK);
  EXPECT_NEAR(v, 2.2795853023360673, 1e-13);
  const double coefs[] = {1}, exps[] = {0};
  ASSERT_EQ(ff_noncommutation_witness(0.5, 1, coefs, exps, 1, &v), FF_OK);
  EXPECT_NEAR(v, 0.5641895835477563, 1e-15);
  EXPECT_EQ(ff_verify_case(nullptr, 0.5, 1, 1, 40, &json, &passed), FF_ERR_INVALID_ARGUMENT);
}

}  // namespace
