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

/* C interface to fracflight. Every call returns an ff_status; on failure the
 * message is available from ff_last_error() on the calling thread. Objects
 * are opaque and owned by the caller. Strings returned through char** must be
 * released with ff_string_free. */
#ifndef FRACFLIGHT_FRACFLIGHT_H_
#define FRACFLIGHT_FRACFLIGHT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FRACFLIGHT_BUILDING)
#    define FF_API __declspec(dllexport)
#  else
#    define FF_API __declspec(dllimport)
#  endif
#else
#  define FF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ff_status {
  FF_OK = 0,
  FF_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown name */
  FF_ERR_DOMAIN = 2,
  FF_ERR_POLE = 3,
  FF_ERR_PRECONDITION = 4,
  FF_ERR_CONVERGENCE = 5,
  FF_ERR_QUADRATURE = 6,
  FF_ERR_INTERNAL = 7
} ff_status;

typedef enum ff_parity { FF_EVEN = 0, FF_ODD = 1 } ff_parity;
typedef enum ff_shape { FF_ARCSINE = 0, FF_UNIFORM = 1, FF_BELL = 2 } ff_shape;
typedef enum ff_mixing { FF_MIX_FRACTIONAL = 0, FF_MIX_HOMOGENEOUS = 1 } ff_mixing;
typedef enum ff_solution_kind {
  FF_SOL_HOMOG_PLUS = 0,
  FF_SOL_HOMOG_MINUS = 1,
  FF_SOL_SECOND = 2,
  FF_SOL_ODD = 3,
  FF_SOL_PLANAR = 4,
  FF_SOL_NDIM = 5,
  FF_SOL_THIRD_ORDER = 6
} ff_solution_kind;

typedef double (*ff_real_fn)(double x, void* user);

FF_API const char* ff_last_error(void);
FF_API const char* ff_version(void);
FF_API const char* ff_status_name(ff_status s);
FF_API void ff_string_free(char* s);

/* Special functions. */
FF_API ff_status ff_gamma(double x, double* out);
FF_API ff_status ff_rgamma(double x, double* out);
FF_API ff_status ff_mittag_leffler(double alpha, double beta, double z, double* out);
/* sum z^k / Gamma(nu k + shift)^power */
FF_API ff_status ff_gen_beta_ml(double power, double nu, double shift, double z,
                                double* out);
/* sum z^k / prod_j Gamma(rho_j k + mu_j) */
FF_API ff_status ff_multi_index_ml(size_t count, const double* rhos,
                                   const double* mus, double z, double* out);
FF_API ff_status ff_hyper_bessel(int n, double x, double* out);

/* Hyper-Bessel operators and Erdelyi-Kober integrals. */
typedef struct ff_operator ff_operator;
FF_API ff_status ff_operator_create(int n, const double* a, ff_operator** out);
FF_API ff_status ff_operator_bessel_nd(int dim, ff_operator** out);
FF_API ff_status ff_operator_hyper_bessel(int n, ff_operator** out);
FF_API ff_status ff_operator_third_order(ff_operator** out);
FF_API ff_status ff_operator_epd(double chi, ff_operator** out);
FF_API void ff_operator_free(ff_operator* op);
/* b must hold `order` entries; pass NULL to query order and m only. */
FF_API ff_status ff_operator_info(const ff_operator* op, int* order, double* m,
                                  double* b);
FF_API ff_status ff_operator_monomial(const ff_operator* op, double alpha,
                                      double beta, double* coefficient,
                                      double* exponent);
FF_API ff_status ff_kober_monomial(double m, double alpha, double beta,
                                   double* coefficient, double* exponent);
FF_API ff_status ff_ek_monomial(double m, double eta, double alpha, double beta,
                                double* out);
FF_API ff_status ff_ek_integral(double m, double eta, double alpha, ff_real_fn f,
                                void* user, double x, double f_power_at_zero,
                                double* out);
FF_API ff_status ff_ek_negative_order(double m, double eta, double alpha,
                                      ff_real_fn f, ff_real_fn fprime,
                                      void* user, double x,
                                      double f_power_at_zero, double* out);

/* Fractional Poisson counting law. */
typedef struct ff_fpp ff_fpp;
FF_API ff_status ff_fpp_create(double alpha, double lambda, double t, ff_fpp** out);
FF_API void ff_fpp_free(ff_fpp* p);
FF_API ff_status ff_fpp_pmf(const ff_fpp* p, unsigned k, double* out);
FF_API ff_status ff_fpp_pgf(const ff_fpp* p, double u, double* out);
FF_API ff_status ff_fpp_even_odd(const ff_fpp* p, double* even, double* odd);
FF_API ff_status ff_fpp_sample(const ff_fpp* p, uint64_t seed, size_t count,
                               unsigned workers, unsigned* out);

/* Telegraph-type process on [-ct, ct]. */
typedef struct ff_telegraph ff_telegraph;
FF_API ff_status ff_telegraph_create(double alpha, double lambda, double c,
                                     double t, ff_telegraph** out);
FF_API void ff_telegraph_free(ff_telegraph* p);
FF_API ff_status ff_telegraph_density(const ff_telegraph* p, double x,
                                      double* ac, double* singular_each);
FF_API ff_status ff_telegraph_conditional(const ff_telegraph* p, unsigned n,
                                          double x, double* out);
FF_API ff_status ff_telegraph_beta_shape(const ff_telegraph* p, unsigned n,
                                         double* out);
FF_API ff_status ff_telegraph_singular_weight(const ff_telegraph* p, double* out);
FF_API ff_status ff_telegraph_sample(const ff_telegraph* p, uint64_t seed,
                                     size_t count, unsigned workers, double* out);
FF_API ff_status ff_telegraph_sample_given(const ff_telegraph* p, unsigned n,
                                           uint64_t seed, size_t count,
                                           unsigned workers, double* out);
FF_API ff_status ff_shape_exponent(double alpha, unsigned k, ff_parity parity,
                                   double* out);
FF_API ff_status ff_shape_classify(double alpha, unsigned k, ff_parity parity,
                                   double tol, ff_shape* out);
FF_API const char* ff_shape_name(ff_shape s);

/* Planar motion in the disc of radius ct. Samples are (x, y) pairs. */
typedef struct ff_planar ff_planar;
FF_API ff_status ff_planar_create(double alpha, double lambda, double c,
                                  double t, ff_planar** out);
FF_API void ff_planar_free(ff_planar* p);
FF_API ff_status ff_planar_density(const ff_planar* p, double x, double y,
                                   double* ac, double* boundary_mass);
FF_API ff_status ff_planar_conditional(const ff_planar* p, unsigned n, double x,
                                       double y, double* out);
FF_API ff_status ff_planar_radial(const ff_planar* p, double r, double* out);
FF_API ff_status ff_planar_masses(const ff_planar* p, double* boundary,
                                  double* interior);
FF_API ff_status ff_planar_projection(const ff_planar* p, double x, double* out);
FF_API ff_status ff_planar_sample(const ff_planar* p, uint64_t seed, size_t count,
                                  unsigned workers, double* xy);
FF_API ff_status ff_planar_sample_given(const ff_planar* p, unsigned n,
                                        uint64_t seed, size_t count,
                                        unsigned workers, double* xy);

/* Planar motion with n directions, binomially thinned changes. */
typedef struct ff_thinned_spec {
  unsigned n;
  double alpha;
  double c;
  double t;
  ff_mixing mixing;
} ff_thinned_spec;
FF_API ff_status ff_thinned_mean_density(const ff_thinned_spec* s, double x,
                                         double y, double* out);
FF_API ff_status ff_thinned_density(const ff_thinned_spec* s, double lambda,
                                    double x, double y, double* out);
FF_API ff_status ff_thinned_boundary_mass(const ff_thinned_spec* s,
                                          double lambda, double* out);
FF_API ff_status ff_thinned_sample(const ff_thinned_spec* s, double lambda,
                                   uint64_t seed, size_t count,
                                   unsigned workers, double* xy);

/* Random flights. Samples hold `dim` coordinates per draw. */
typedef struct ff_flight ff_flight;
FF_API ff_status ff_flight_create_fractional(int dim, double alpha, double lambda,
                                             double c, double t, ff_flight** out);
FF_API ff_status ff_flight_create_4d(double alpha, double lambda, double c,
                                     double t, ff_flight** out);
FF_API void ff_flight_free(ff_flight* f);
FF_API ff_status ff_flight_dimension(const ff_flight* f, int* dim);
FF_API ff_status ff_flight_density_radial(const ff_flight* f, double r, double* out);
FF_API ff_status ff_flight_conditional_radial(const ff_flight* f, unsigned k,
                                              double r, double* out);
FF_API ff_status ff_flight_boundary_mass(const ff_flight* f, double* out);
FF_API ff_status ff_flight_sample(const ff_flight* f, uint64_t seed, size_t count,
                                  unsigned workers, double* out);
FF_API ff_status ff_flight_sample_given(const ff_flight* f, unsigned k,
                                        uint64_t seed, size_t count,
                                        unsigned workers, double* out);
FF_API ff_status ff_ndim_solution(int dim, double alpha, double lambda, double c,
                                  double w, double* out);

/* Residual engine. Reports are JSON documents. */
FF_API ff_status ff_verify_cases(char** json);
FF_API ff_status ff_verify_case(const char* name, double alpha, double lambda,
                                double c, int terms, char** json, int* passed);
/* Every registered case at every registered alpha. */
FF_API ff_status ff_verify_all(double lambda, double c, int terms, char** json,
                               int* passed);
/* xyt holds count (x, y, t) triples. */
FF_API ff_status ff_verify_cartesian(double alpha, double lambda, double c,
                                     ff_solution_kind kind, const double* xyt,
                                     size_t count, int dim, char** json,
                                     int* passed);
FF_API ff_status ff_kg_solution(double alpha, double lambda, double c,
                                ff_solution_kind kind, double x, double y,
                                double t, int dim, double* out);
FF_API ff_status ff_epd_operational(double alpha, double multiplier, double t,
                                    int terms, double* out);
/* Monomial series f(z) = sum coef_i z^{exp_i}. */
FF_API ff_status ff_noncommutation_witness(double alpha, size_t count,
                                           const double* coefs,
                                           const double* exps, double z,
                                           double* out);

#ifdef __cplusplus
}
#endif

#endif  // FRACFLIGHT_FRACFLIGHT_H_
