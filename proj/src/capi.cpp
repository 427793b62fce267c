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

#include "fracflight/fracflight.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracflight/errors.hpp"
#include "fracflight/flights.hpp"
#include "fracflight/fracpoisson.hpp"
#include "fracflight/mcbride.hpp"
#include "fracflight/pdecheck.hpp"
#include "fracflight/planar.hpp"
#include "fracflight/random.hpp"
#include "fracflight/specfun.hpp"
#include "fracflight/telegraph.hpp"
#include "fracflight/version.hpp"

namespace ff = fracflight;
using nlohmann::json;

struct ff_operator {
  ff::HyperBesselOp op;
};
struct ff_fpp {
  ff::FracPoissonLaw law;
};
struct ff_telegraph {
  ff::TelegraphLaw law;
};
struct ff_planar {
  ff::PlanarLaw law;
};
struct ff_flight {
  ff::FlightLaw law;
};

namespace {

thread_local std::string g_last_error;

ff_status fail(ff_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

template <class F>
ff_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return FF_OK;
  } catch (const ff::PoleError& e) {
    return fail(FF_ERR_POLE, e.what());
  } catch (const ff::PreconditionError& e) {
    return fail(FF_ERR_PRECONDITION, e.what());
  } catch (const ff::ConvergenceError& e) {
    return fail(FF_ERR_CONVERGENCE, e.what());
  } catch (const ff::QuadratureError& e) {
    return fail(FF_ERR_QUADRATURE, e.what());
  } catch (const ff::DomainError& e) {
    return fail(FF_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FF_ERR_INTERNAL, "unknown exception");
  }
}

template <class... P>
void require(P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw std::invalid_argument("null pointer argument");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// NaN and infinities are not valid JSON numbers; they become null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json report_json(const ff::ResidualReport& r, bool passed) {
  json ledger = json::array();
  for (const auto& le : r.ledger) {
    ledger.push_back({{"input_exponent", num(le.input_exponent)},
                      {"output_exponent", num(le.output_exponent)},
                      {"output_coefficient", num(le.output_coefficient)},
                      {"matched_coefficient", num(le.matched_coefficient)},
                      {"residual", num(le.residual)},
                      {"relative_residual", num(le.relative_residual)},
                      {"role", le.role}});
  }
  json grid = json::array();
  for (const auto& p : r.grid) {
    grid.push_back({{"w", num(p.w)},
                    {"lhs", num(p.lhs)},
                    {"rhs", num(p.rhs)},
                    {"residual", num(p.residual)},
                    {"value", num(p.value)}});
  }
  json out = {{"name", r.name},
              {"alpha", r.alpha},
              {"passed", passed},
              {"max_abs_residual", num(r.max_abs_residual)},
              {"max_rel_residual", num(r.max_rel_residual)},
              {"max_pointwise_residual", num(r.max_pointwise_residual)},
              {"precondition_failures", r.precondition_failures},
              {"ledger", ledger},
              {"grid", grid}};
  if (r.aux_tolerance > 0.0) {
    out["max_aux_residual"] = num(r.max_aux_residual);
    out["aux_tolerance"] = r.aux_tolerance;
  }
  return out;
}

template <class T, class Draw>
void fill_samples(uint64_t seed, size_t count, unsigned workers, T* out,
                  Draw&& draw) {
  const auto v = ff::parallel_draws<T>(count, seed, workers, draw);
  std::copy(v.begin(), v.end(), out);
}

// Draws `width` doubles per sample.
template <std::size_t Width, class Draw>
void fill_tuples(uint64_t seed, size_t count, unsigned workers, double* out,
                 Draw&& draw) {
  using Tuple = std::array<double, Width>;
  const auto v = ff::parallel_draws<Tuple>(count, seed, workers, draw);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::copy(v[i].begin(), v[i].end(), out + Width * i);
  }
}

ff::Parity to_parity(ff_parity p) {
  if (p != FF_EVEN && p != FF_ODD) throw std::invalid_argument("unknown parity");
  return p == FF_EVEN ? ff::Parity::kEven : ff::Parity::kOdd;
}

ff::ThinnedMotionSpec to_spec(const ff_thinned_spec* s) {
  require(s);
  if (s->mixing != FF_MIX_FRACTIONAL && s->mixing != FF_MIX_HOMOGENEOUS) {
    throw std::invalid_argument("unknown mixing law");
  }
  return {s->n, s->alpha, s->c, s->t,
          s->mixing == FF_MIX_FRACTIONAL ? ff::Mixing::kFractional
                                         : ff::Mixing::kHomogeneous};
}

ff::SolutionKind to_kind(ff_solution_kind k) {
  switch (k) {
    case FF_SOL_HOMOG_PLUS: return ff::SolutionKind::kHomogPlus;
    case FF_SOL_HOMOG_MINUS: return ff::SolutionKind::kHomogMinus;
    case FF_SOL_SECOND: return ff::SolutionKind::kSecond;
    case FF_SOL_ODD: return ff::SolutionKind::kOdd;
    case FF_SOL_PLANAR: return ff::SolutionKind::kPlanar;
    case FF_SOL_NDIM: return ff::SolutionKind::kNdim;
    case FF_SOL_THIRD_ORDER: return ff::SolutionKind::kThirdOrder;
  }
  throw std::invalid_argument("unknown solution kind");
}

template <class Handle, class Make>
ff_status create(Handle** out, Make&& make) {
  return guard([&] {
    require(out);
    *out = nullptr;
    *out = new Handle{make()};
  });
}

}  // namespace

extern "C" {

const char* ff_last_error(void) { return g_last_error.c_str(); }

const char* ff_version(void) { return ff::kVersion; }

const char* ff_status_name(ff_status s) {
  switch (s) {
    case FF_OK: return "ok";
    case FF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FF_ERR_DOMAIN: return "domain error";
    case FF_ERR_POLE: return "pole";
    case FF_ERR_PRECONDITION: return "precondition failed";
    case FF_ERR_CONVERGENCE: return "no convergence";
    case FF_ERR_QUADRATURE: return "quadrature failure";
    case FF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ff_string_free(char* s) { std::free(s); }

// --- special functions -------------------------------------------------------

ff_status ff_gamma(double x, double* out) {
  return guard([&] { require(out); *out = ff::gamma_real(x); });
}

ff_status ff_rgamma(double x, double* out) {
  return guard([&] { require(out); *out = ff::rgamma(x); });
}

ff_status ff_mittag_leffler(double alpha, double beta, double z, double* out) {
  return guard([&] { require(out); *out = ff::mittag_leffler(alpha, beta, z); });
}

ff_status ff_gen_beta_ml(double power, double nu, double shift, double z,
                         double* out) {
  return guard([&] {
    require(out);
    *out = ff::gen_beta_ml(ff::MLParams(power, nu, shift), z);
  });
}

ff_status ff_multi_index_ml(size_t count, const double* rhos, const double* mus,
                            double z, double* out) {
  return guard([&] {
    require(rhos, mus, out);
    ff::MultiIndexML p({rhos, rhos + count}, {mus, mus + count});
    *out = ff::multi_index_ml(p, z);
  });
}

ff_status ff_hyper_bessel(int n, double x, double* out) {
  return guard([&] { require(out); *out = ff::hyper_bessel(n, x); });
}

// --- operators ---------------------------------------------------------------

ff_status ff_operator_create(int n, const double* a, ff_operator** out) {
  return create(out, [&] {
    require(a);
    if (n < 1) throw ff::DomainError("operator order must be >= 1");
    return ff::HyperBesselOp(n, std::vector<double>(a, a + n + 1));
  });
}

ff_status ff_operator_bessel_nd(int dim, ff_operator** out) {
  return create(out, [&] { return ff::HyperBesselOp::bessel_nd(dim); });
}

ff_status ff_operator_hyper_bessel(int n, ff_operator** out) {
  return create(out, [&] { return ff::HyperBesselOp::hyper_bessel(n); });
}

ff_status ff_operator_third_order(ff_operator** out) {
  return create(out, [] { return ff::HyperBesselOp::third_order(); });
}

ff_status ff_operator_epd(double chi, ff_operator** out) {
  return create(out, [&] { return ff::HyperBesselOp::epd(chi); });
}

void ff_operator_free(ff_operator* op) { delete op; }

ff_status ff_operator_info(const ff_operator* op, int* order, double* m,
                           double* b) {
  return guard([&] {
    require(op);
    if (order != nullptr) *order = op->op.order();
    if (m != nullptr) *m = op->op.m();
    if (b != nullptr) std::copy(op->op.b().begin(), op->op.b().end(), b);
  });
}

ff_status ff_operator_monomial(const ff_operator* op, double alpha, double beta,
                               double* coefficient, double* exponent) {
  return guard([&] {
    require(op, coefficient, exponent);
    const auto r = ff::op_monomial(op->op, alpha, beta);
    *coefficient = r.coefficient;
    *exponent = r.exponent;
  });
}

ff_status ff_kober_monomial(double m, double alpha, double beta,
                            double* coefficient, double* exponent) {
  return guard([&] {
    require(coefficient, exponent);
    const auto r = ff::kober_monomial(m, alpha, beta);
    *coefficient = r.coefficient;
    *exponent = r.exponent;
  });
}

ff_status ff_ek_monomial(double m, double eta, double alpha, double beta,
                         double* out) {
  return guard([&] { require(out); *out = ff::ek_monomial(m, eta, alpha, beta); });
}

ff_status ff_ek_integral(double m, double eta, double alpha, ff_real_fn f,
                         void* user, double x, double f_power_at_zero,
                         double* out) {
  return guard([&] {
    require(out);
    if (f == nullptr) throw std::invalid_argument("null integrand");
    *out = ff::ek_integral(
        m, eta, alpha, [&](double s) { return f(s, user); }, x, f_power_at_zero);
  });
}

ff_status ff_ek_negative_order(double m, double eta, double alpha, ff_real_fn f,
                               ff_real_fn fprime, void* user, double x,
                               double f_power_at_zero, double* out) {
  return guard([&] {
    require(out);
    if (f == nullptr || fprime == nullptr) throw std::invalid_argument("null integrand");
    *out = ff::ek_negative_order(
        m, eta, alpha, [&](double s) { return f(s, user); },
        [&](double s) { return fprime(s, user); }, x, f_power_at_zero);
  });
}

// --- fractional Poisson ------------------------------------------------------

ff_status ff_fpp_create(double alpha, double lambda, double t, ff_fpp** out) {
  return create(out, [&] { return ff::FracPoissonLaw(alpha, lambda, t); });
}

void ff_fpp_free(ff_fpp* p) { delete p; }

ff_status ff_fpp_pmf(const ff_fpp* p, unsigned k, double* out) {
  return guard([&] { require(p, out); *out = p->law.pmf(k); });
}

ff_status ff_fpp_pgf(const ff_fpp* p, double u, double* out) {
  return guard([&] { require(p, out); *out = p->law.pgf(u); });
}

ff_status ff_fpp_even_odd(const ff_fpp* p, double* even, double* odd) {
  return guard([&] {
    require(p, even, odd);
    const auto m = p->law.even_odd_mass();
    *even = m.even;
    *odd = m.odd;
  });
}

ff_status ff_fpp_sample(const ff_fpp* p, uint64_t seed, size_t count,
                        unsigned workers, unsigned* out) {
  return guard([&] {
    require(p, out);
    fill_samples<unsigned>(seed, count, workers, out,
                           [&](ff::Rng& r) { return p->law.sample(r); });
  });
}

// --- telegraph ---------------------------------------------------------------

ff_status ff_telegraph_create(double alpha, double lambda, double c, double t,
                              ff_telegraph** out) {
  return create(out, [&] { return ff::TelegraphLaw(alpha, lambda, c, t); });
}

void ff_telegraph_free(ff_telegraph* p) { delete p; }

ff_status ff_telegraph_density(const ff_telegraph* p, double x, double* ac,
                               double* singular_each) {
  return guard([&] {
    require(p, ac);
    const auto d = p->law.density(x);
    *ac = d.ac;
    if (singular_each != nullptr) *singular_each = d.singular_each;
  });
}

ff_status ff_telegraph_conditional(const ff_telegraph* p, unsigned n, double x,
                                   double* out) {
  return guard([&] { require(p, out); *out = p->law.conditional_density(n, x); });
}

ff_status ff_telegraph_beta_shape(const ff_telegraph* p, unsigned n, double* out) {
  return guard([&] { require(p, out); *out = p->law.beta_shape(n); });
}

ff_status ff_telegraph_singular_weight(const ff_telegraph* p, double* out) {
  return guard([&] { require(p, out); *out = p->law.singular_weight(); });
}

ff_status ff_telegraph_sample(const ff_telegraph* p, uint64_t seed, size_t count,
                              unsigned workers, double* out) {
  return guard([&] {
    require(p, out);
    fill_samples<double>(seed, count, workers, out,
                         [&](ff::Rng& r) { return p->law.sample_position(r); });
  });
}

ff_status ff_telegraph_sample_given(const ff_telegraph* p, unsigned n,
                                    uint64_t seed, size_t count,
                                    unsigned workers, double* out) {
  return guard([&] {
    require(p, out);
    fill_samples<double>(seed, count, workers, out, [&](ff::Rng& r) {
      return p->law.sample_given_events(r, n);
    });
  });
}

ff_status ff_shape_exponent(double alpha, unsigned k, ff_parity parity,
                            double* out) {
  return guard([&] {
    require(out);
    *out = ff::shape_exponent(alpha, k, to_parity(parity));
  });
}

ff_status ff_shape_classify(double alpha, unsigned k, ff_parity parity, double tol,
                            ff_shape* out) {
  return guard([&] {
    require(out);
    switch (ff::classify_shape(alpha, k, to_parity(parity), tol)) {
      case ff::ShapeClass::kArcsine: *out = FF_ARCSINE; break;
      case ff::ShapeClass::kUniform: *out = FF_UNIFORM; break;
      case ff::ShapeClass::kBell: *out = FF_BELL; break;
    }
  });
}

const char* ff_shape_name(ff_shape s) {
  switch (s) {
    case FF_ARCSINE: return ff::to_string(ff::ShapeClass::kArcsine);
    case FF_UNIFORM: return ff::to_string(ff::ShapeClass::kUniform);
    case FF_BELL: return ff::to_string(ff::ShapeClass::kBell);
  }
  return "unknown";
}

// --- planar ------------------------------------------------------------------

ff_status ff_planar_create(double alpha, double lambda, double c, double t,
                           ff_planar** out) {
  return create(out, [&] { return ff::PlanarLaw(alpha, lambda, c, t); });
}

void ff_planar_free(ff_planar* p) { delete p; }

ff_status ff_planar_density(const ff_planar* p, double x, double y, double* ac,
                            double* boundary_mass) {
  return guard([&] {
    require(p, ac);
    const auto d = p->law.density(x, y);
    *ac = d.ac;
    if (boundary_mass != nullptr) *boundary_mass = d.boundary_mass;
  });
}

ff_status ff_planar_conditional(const ff_planar* p, unsigned n, double x, double y,
                                double* out) {
  return guard([&] { require(p, out); *out = p->law.conditional_density(n, x, y); });
}

ff_status ff_planar_radial(const ff_planar* p, double r, double* out) {
  return guard([&] { require(p, out); *out = p->law.ac_density_radial(r); });
}

ff_status ff_planar_masses(const ff_planar* p, double* boundary, double* interior) {
  return guard([&] {
    require(p);
    if (boundary != nullptr) *boundary = p->law.boundary_mass();
    if (interior != nullptr) *interior = p->law.interior_mass();
  });
}

ff_status ff_planar_projection(const ff_planar* p, double x, double* out) {
  return guard([&] { require(p, out); *out = p->law.projection_density(x); });
}

ff_status ff_planar_sample(const ff_planar* p, uint64_t seed, size_t count,
                           unsigned workers, double* xy) {
  return guard([&] {
    require(p, xy);
    fill_tuples<2>(seed, count, workers, xy, [&](ff::Rng& r) {
      const auto q = p->law.sample(r);
      return std::array<double, 2>{q.x, q.y};
    });
  });
}

ff_status ff_planar_sample_given(const ff_planar* p, unsigned n, uint64_t seed,
                                 size_t count, unsigned workers, double* xy) {
  return guard([&] {
    require(p, xy);
    fill_tuples<2>(seed, count, workers, xy, [&](ff::Rng& r) {
      const auto q = p->law.sample_given_events(r, n);
      return std::array<double, 2>{q.x, q.y};
    });
  });
}

ff_status ff_thinned_mean_density(const ff_thinned_spec* s, double x, double y,
                                  double* out) {
  return guard([&] {
    require(out);
    *out = ff::thinned_conditional_mean_density(to_spec(s), x, y);
  });
}

ff_status ff_thinned_density(const ff_thinned_spec* s, double lambda, double x,
                             double y, double* out) {
  return guard([&] {
    require(out);
    *out = ff::thinned_unconditional_density(to_spec(s), lambda, x, y);
  });
}

ff_status ff_thinned_boundary_mass(const ff_thinned_spec* s, double lambda,
                                   double* out) {
  return guard([&] {
    require(out);
    *out = ff::thinned_boundary_mass(to_spec(s), lambda);
  });
}

ff_status ff_thinned_sample(const ff_thinned_spec* s, double lambda, uint64_t seed,
                            size_t count, unsigned workers, double* xy) {
  return guard([&] {
    require(xy);
    const ff::ThinnedSimulator sim(to_spec(s), lambda);
    fill_tuples<2>(seed, count, workers, xy, [&](ff::Rng& r) {
      const auto q = sim.sample(r);
      return std::array<double, 2>{q.x, q.y};
    });
  });
}

// --- flights -----------------------------------------------------------------

ff_status ff_flight_create_fractional(int dim, double alpha, double lambda,
                                      double c, double t, ff_flight** out) {
  return create(out, [&] { return ff::FlightLaw::fractional(dim, alpha, lambda, c, t); });
}

ff_status ff_flight_create_4d(double alpha, double lambda, double c, double t,
                              ff_flight** out) {
  return create(out, [&] { return ff::FlightLaw::four_d(alpha, lambda, c, t); });
}

void ff_flight_free(ff_flight* f) { delete f; }

ff_status ff_flight_dimension(const ff_flight* f, int* dim) {
  return guard([&] { require(f, dim); *dim = f->law.dimension(); });
}

ff_status ff_flight_density_radial(const ff_flight* f, double r, double* out) {
  return guard([&] { require(f, out); *out = f->law.density_radial(r); });
}

ff_status ff_flight_conditional_radial(const ff_flight* f, unsigned k, double r,
                                       double* out) {
  return guard([&] {
    require(f, out);
    *out = f->law.conditional_density_radial(k, r);
  });
}

ff_status ff_flight_boundary_mass(const ff_flight* f, double* out) {
  return guard([&] { require(f, out); *out = f->law.boundary_mass(); });
}

ff_status ff_flight_sample(const ff_flight* f, uint64_t seed, size_t count,
                           unsigned workers, double* out) {
  return guard([&] {
    require(f, out);
    if (f->law.kind() != ff::FlightKind::kFourD) {
      throw ff::DomainError(
          "unconditional sampling is available for the 4D flight only");
    }
    fill_tuples<4>(seed, count, workers, out,
                   [&](ff::Rng& r) { return f->law.sample_4d(r); });
  });
}

ff_status ff_flight_sample_given(const ff_flight* f, unsigned k, uint64_t seed,
                                 size_t count, unsigned workers, double* out) {
  return guard([&] {
    require(f, out);
    const int dim = f->law.dimension();
    const auto v = ff::parallel_draws<std::vector<double>>(
        count, seed, workers,
        [&](ff::Rng& r) { return f->law.sample_given_events(r, k); });
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::copy(v[i].begin(), v[i].end(), out + dim * i);
    }
  });
}

ff_status ff_ndim_solution(int dim, double alpha, double lambda, double c,
                           double w, double* out) {
  return guard([&] {
    require(out);
    *out = ff::ndim_solution(dim, alpha, lambda, c, w);
  });
}

// --- residual engine ---------------------------------------------------------

ff_status ff_verify_cases(char** json_out) {
  return guard([&] {
    require(json_out);
    json j = {{"cases", ff::verification_cases()},
              {"alphas", ff::verification_alphas()}};
    *json_out = dup_string(j.dump());
  });
}

ff_status ff_verify_case(const char* name, double alpha, double lambda, double c,
                         int terms, char** json_out, int* passed) {
  return guard([&] {
    require(name, json_out);
    const auto r = ff::run_case(name, alpha, lambda, c, terms);
    const bool ok = r.passed();
    if (passed != nullptr) *passed = ok ? 1 : 0;
    *json_out = dup_string(report_json(r, ok).dump(2));
  });
}

ff_status ff_verify_all(double lambda, double c, int terms, char** json_out,
                        int* passed) {
  return guard([&] {
    require(json_out);
    json reports = json::array();
    bool all = true;
    double worst = 0.0;
    for (const auto& name : ff::verification_cases()) {
      for (double a : ff::verification_alphas()) {
        const auto r = ff::run_case(name, a, lambda, c, terms);
        const bool ok = r.passed();
        all = all && ok;
        worst = std::max({worst, r.max_rel_residual, r.max_pointwise_residual});
        json j = report_json(r, ok);
        j.erase("grid");
        reports.push_back(std::move(j));
      }
    }
    if (passed != nullptr) *passed = all ? 1 : 0;
    json out = {{"passed", all}, {"max_residual", worst}, {"reports", reports}};
    *json_out = dup_string(out.dump(2));
  });
}

ff_status ff_verify_cartesian(double alpha, double lambda, double c,
                              ff_solution_kind kind, const double* xyt,
                              size_t count, int dim, char** json_out,
                              int* passed) {
  return guard([&] {
    require(xyt, json_out);
    std::vector<ff::GridPoint> pts(count);
    for (std::size_t i = 0; i < count; ++i) {
      pts[i] = {xyt[3 * i], xyt[3 * i + 1], xyt[3 * i + 2]};
    }
    const auto r = ff::verify_kg_cartesian(alpha, lambda, c, to_kind(kind), pts, dim);
    const bool ok = r.passed();
    if (passed != nullptr) *passed = ok ? 1 : 0;
    *json_out = dup_string(report_json(r, ok).dump(2));
  });
}

ff_status ff_kg_solution(double alpha, double lambda, double c,
                         ff_solution_kind kind, double x, double y, double t,
                         int dim, double* out) {
  return guard([&] {
    require(out);
    *out = ff::kg_solution_value(alpha, lambda, c, to_kind(kind), {x, y, t}, dim);
  });
}

ff_status ff_epd_operational(double alpha, double multiplier, double t, int terms,
                             double* out) {
  return guard([&] {
    require(out);
    *out = ff::epd_operational(alpha, multiplier, t, terms);
  });
}

ff_status ff_noncommutation_witness(double alpha, size_t count, const double* coefs,
                                    const double* exps, double z, double* out) {
  return guard([&] {
    require(coefs, exps, out);
    std::vector<ff::SeriesTerm> terms(count);
    for (std::size_t i = 0; i < count; ++i) terms[i] = {coefs[i], exps[i]};
    *out = ff::noncommutation_witness(alpha, ff::SeriesSolution(std::move(terms)), z);
  });
}

}  // extern "C"
