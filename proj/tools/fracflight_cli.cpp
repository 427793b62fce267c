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

// fracflight command-line front end. Talks to the library through the C API
// only.

#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "fracflight/fracflight.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

// Carries a library status out of a subcommand.
struct StatusError : std::runtime_error {
  ff_status status;
  StatusError(ff_status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by verify when a residual exceeds its tolerance.
struct ResidualFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(ff_status s) {
  if (s != FF_OK) {
    throw StatusError(s, std::string(ff_status_name(s)) + ": " + ff_last_error());
  }
}

int exit_code_for(ff_status s) {
  switch (s) {
    case FF_ERR_CONVERGENCE:
    case FF_ERR_QUADRATURE:
    case FF_ERR_INTERNAL:
      return kExitNumerical;
    default:
      return kExitValidation;
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Telegraph = std::unique_ptr<ff_telegraph, Deleter<ff_telegraph, ff_telegraph_free>>;
using Planar = std::unique_ptr<ff_planar, Deleter<ff_planar, ff_planar_free>>;
using Fpp = std::unique_ptr<ff_fpp, Deleter<ff_fpp, ff_fpp_free>>;
using Flight = std::unique_ptr<ff_flight, Deleter<ff_flight, ff_flight_free>>;
using Operator = std::unique_ptr<ff_operator, Deleter<ff_operator, ff_operator_free>>;

struct JsonString {
  char* s = nullptr;
  ~JsonString() { ff_string_free(s); }
};

// --- output -------------------------------------------------------------------

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") {
      f_ = stdout;
    } else {
      f_ = std::fopen(path.c_str(), "w");
      if (f_ == nullptr) {
        throw UsageError("cannot open " + path + ": " + std::strerror(errno));
      }
      owned_ = true;
    }
  }
  ~Output() {
    if (owned_) std::fclose(f_);
  }
  Output(const Output&) = delete;
  Output& operator=(const Output&) = delete;

  void meta(const std::string& key, const std::string& value) {
    std::fprintf(f_, "# %s=%s\n", key.c_str(), value.c_str());
  }
  void meta(const std::string& key, double value) { meta(key, num(value)); }
  void text(const std::string& s) { std::fputs(s.c_str(), f_); }
  void row(std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
      if (!first) std::fputc(',', f_);
      std::fputs(num(v).c_str(), f_);
      first = false;
    }
    std::fputc('\n', f_);
  }
  void flush() {
    if (std::fflush(f_) != 0) throw UsageError("write failed");
  }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

 private:
  std::FILE* f_ = nullptr;
  bool owned_ = false;
};

void header(Output& out, const std::string& command) {
  out.meta("tool", "fracflight");
  out.meta("version", ff_version());
  out.meta("command", command);
}

// Points strictly inside (lo, hi).
std::vector<double> open_grid(double lo, double hi, int n) {
  if (n < 1) throw UsageError("--grid must be >= 1");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * (i + 1) / (n + 1.0);
  return g;
}

double maybe_log(double v, bool log_scale) { return log_scale ? std::log(v) : v; }

// --- seeds --------------------------------------------------------------------

std::uint64_t parse_u64(const std::string& s, const char* what) {
  if (s.empty() || s[0] == '-') throw UsageError(std::string(what) + " must be a non-negative integer");
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (errno != 0 || end == s.c_str() || *end != '\0') {
    throw UsageError(std::string(what) + " must be a non-negative integer");
  }
  return v;
}

struct SeedOption {
  std::string text;
  std::uint64_t resolve() const {
    if (!text.empty()) return parse_u64(text, "--seed");
    if (const char* env = std::getenv("FRACFLIGHT_SEED"); env != nullptr && *env) {
      return parse_u64(env, "FRACFLIGHT_SEED");
    }
    return 20260101;
  }
};

// --- alpha parsing --------------------------------------------------------------

// Accepts "p/q" or a decimal. For decimals the tolerance is half a unit in
// the last typed digit.
struct TypedAlpha {
  double value = 0.0;
  double half_ulp = 0.0;
};

TypedAlpha parse_alpha(const std::string& s) {
  TypedAlpha a;
  const auto slash = s.find('/');
  auto to_double = [&](const std::string& part) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw UsageError("cannot parse alpha '" + s + "'");
    return v;
  };
  if (slash != std::string::npos) {
    const double p = to_double(s.substr(0, slash));
    const double q = to_double(s.substr(slash + 1));
    if (q == 0.0) throw UsageError("alpha denominator is zero");
    a.value = p / q;
    return a;
  }
  a.value = to_double(s);
  const auto dot = s.find('.');
  if (dot != std::string::npos && s.find_first_of("eE") == std::string::npos) {
    const auto digits = static_cast<int>(s.size() - dot - 1);
    a.half_ulp = 0.5 * std::pow(10.0, -digits);
  }
  return a;
}

// --- parameter bundles ----------------------------------------------------------

struct Law {
  double alpha = 0.5;
  double lambda = 1.0;
  double c = 1.0;
  double t = 1.0;
};

void add_law(CLI::App* sub, Law& p, bool with_c = true) {
  sub->add_option("--alpha", p.alpha, "fractional order")->capture_default_str();
  sub->add_option("--lambda", p.lambda, "event rate")->capture_default_str();
  if (with_c) sub->add_option("--c", p.c, "speed")->capture_default_str();
  sub->add_option("--t", p.t, "time")->capture_default_str();
}

void law_meta(Output& out, const Law& p, bool with_c = true) {
  out.meta("alpha", p.alpha);
  out.meta("lambda", p.lambda);
  if (with_c) out.meta("c", p.c);
  out.meta("t", p.t);
}

struct Sampling {
  std::size_t count = 1000;
  unsigned workers = 1;
  SeedOption seed;
};

void add_sampling(CLI::App* sub, Sampling& s) {
  sub->add_option("--count", s.count, "number of draws")->capture_default_str();
  sub->add_option("--workers", s.workers,
                  "worker threads (output does not depend on this)")
      ->capture_default_str();
  sub->add_option("--seed", s.seed.text,
                  "master seed (default: $FRACFLIGHT_SEED, then 20260101)");
}

struct Common {
  std::string output;
  int grid = 201;
  bool log_scale = false;
};

// --- subcommands ----------------------------------------------------------------

void run_specfun(const std::string& fn, double a, double b, double power,
                 const std::vector<double>& rhos, const std::vector<double>& mus,
                 int n, const std::vector<double>& zs, Output& out) {
  header(out, "specfun eval");
  out.meta("function", fn);
  out.text("z,value\n");
  for (double z : zs) {
    double v = 0.0;
    if (fn == "ml") {
      check(ff_mittag_leffler(a, b, z, &v));
    } else if (fn == "gml") {
      check(ff_gen_beta_ml(power, a, b, z, &v));
    } else if (fn == "mml") {
      if (rhos.size() != mus.size() || rhos.empty()) {
        throw UsageError("--rho and --mu need the same non-zero length");
      }
      check(ff_multi_index_ml(rhos.size(), rhos.data(), mus.data(), z, &v));
    } else if (fn == "hyper") {
      check(ff_hyper_bessel(n, z, &v));
    } else if (fn == "gamma") {
      check(ff_gamma(z, &v));
    } else if (fn == "rgamma") {
      check(ff_rgamma(z, &v));
    } else {
      throw UsageError("unknown function '" + fn + "'");
    }
    out.row({z, v});
  }
}

Operator make_operator(const std::string& kind, int dim, int n, double chi,
                       const std::vector<double>& a) {
  ff_operator* op = nullptr;
  if (kind == "1d") {
    check(ff_operator_bessel_nd(1, &op));
  } else if (kind == "2d") {
    check(ff_operator_bessel_nd(2, &op));
  } else if (kind == "nd") {
    check(ff_operator_bessel_nd(dim, &op));
  } else if (kind == "third") {
    check(ff_operator_third_order(&op));
  } else if (kind == "hyper") {
    check(ff_operator_hyper_bessel(n, &op));
  } else if (kind == "epd") {
    check(ff_operator_epd(chi, &op));
  } else if (kind == "custom") {
    if (a.size() < 2) throw UsageError("--a needs n+1 >= 2 exponents");
    check(ff_operator_create(static_cast<int>(a.size()) - 1, a.data(), &op));
  } else {
    throw UsageError("unknown operator '" + kind + "'");
  }
  return Operator(op);
}

struct PowerFn {
  double beta;
};

double power_fn(double x, void* user) {
  return std::pow(x, static_cast<PowerFn*>(user)->beta);
}

double power_fn_prime(double x, void* user) {
  const double b = static_cast<PowerFn*>(user)->beta;
  return b == 0.0 ? 0.0 : b * std::pow(x, b - 1.0);
}

void run_telegraph_density(const Law& p, const Common& c, Output& out) {
  ff_telegraph* raw = nullptr;
  check(ff_telegraph_create(p.alpha, p.lambda, p.c, p.t, &raw));
  Telegraph law(raw);
  double sw = 0.0;
  check(ff_telegraph_singular_weight(law.get(), &sw));
  header(out, "telegraph density");
  law_meta(out, p);
  out.meta("singular_weight", sw);
  out.meta("log_scale", c.log_scale ? "true" : "false");
  out.text(c.log_scale ? "x,log_ac_density\n" : "x,ac_density\n");
  const double h = p.c * p.t;
  for (double x : open_grid(-h, h, c.grid)) {
    double ac = 0.0;
    check(ff_telegraph_density(law.get(), x, &ac, nullptr));
    out.row({x, maybe_log(ac, c.log_scale)});
  }
}

void run_telegraph_conditional(const Law& p, unsigned n, const Common& c,
                               Output& out) {
  ff_telegraph* raw = nullptr;
  check(ff_telegraph_create(p.alpha, p.lambda, p.c, p.t, &raw));
  Telegraph law(raw);
  double shape = 0.0;
  check(ff_telegraph_beta_shape(law.get(), n, &shape));
  header(out, "telegraph conditional");
  law_meta(out, p);
  out.meta("n", std::to_string(n));
  out.meta("beta_shape", shape);
  out.meta("log_scale", c.log_scale ? "true" : "false");
  out.text(c.log_scale ? "x,log_density\n" : "x,density\n");
  const double h = p.c * p.t;
  for (double x : open_grid(-h, h, c.grid)) {
    double v = 0.0;
    check(ff_telegraph_conditional(law.get(), n, x, &v));
    out.row({x, maybe_log(v, c.log_scale)});
  }
}

void run_telegraph_sample(const Law& p, const Sampling& s, int given_n,
                          Output& out) {
  ff_telegraph* raw = nullptr;
  check(ff_telegraph_create(p.alpha, p.lambda, p.c, p.t, &raw));
  Telegraph law(raw);
  const std::uint64_t seed = s.seed.resolve();
  std::vector<double> xs(s.count);
  if (given_n >= 0) {
    check(ff_telegraph_sample_given(law.get(), static_cast<unsigned>(given_n), seed,
                                    s.count, s.workers, xs.data()));
  } else {
    check(ff_telegraph_sample(law.get(), seed, s.count, s.workers, xs.data()));
  }
  header(out, "telegraph sample");
  law_meta(out, p);
  out.meta("seed", std::to_string(seed));
  out.meta("count", std::to_string(s.count));
  if (given_n >= 0) out.meta("n", std::to_string(given_n));
  out.text("x\n");
  for (double x : xs) out.row({x});
}

void run_shape(const std::string& alpha_text, unsigned k,
               const std::string& parity_text, Output& out) {
  const TypedAlpha a = parse_alpha(alpha_text);
  ff_parity parity;
  if (parity_text == "even") {
    parity = FF_EVEN;
  } else if (parity_text == "odd") {
    parity = FF_ODD;
  } else {
    throw UsageError("--parity must be even or odd");
  }
  // The exponent moves by k (even) or k + 1/2 (odd) per unit of alpha.
  const double slope = parity == FF_EVEN ? k : k + 0.5;
  const double tol = std::max(1e-12, slope * a.half_ulp);
  ff_shape shape;
  check(ff_shape_classify(a.value, k, parity, tol, &shape));
  out.text(std::string(ff_shape_name(shape)) + "\n");
}

void run_planar_density(const Law& p, const Common& c, Output& out) {
  ff_planar* raw = nullptr;
  check(ff_planar_create(p.alpha, p.lambda, p.c, p.t, &raw));
  Planar law(raw);
  double boundary = 0.0, interior = 0.0;
  check(ff_planar_masses(law.get(), &boundary, &interior));
  header(out, "planar density");
  law_meta(out, p);
  out.meta("boundary_mass", boundary);
  out.meta("interior_mass", interior);
  out.meta("log_scale", c.log_scale ? "true" : "false");
  out.text(c.log_scale ? "rho,log_ac_density\n" : "rho,ac_density\n");
  for (double r : open_grid(0.0, p.c * p.t, c.grid)) {
    double v = 0.0;
    check(ff_planar_radial(law.get(), r, &v));
    out.row({r, maybe_log(v, c.log_scale)});
  }
}

void run_planar_sample(const Law& p, const Sampling& s, int given_n, Output& out) {
  ff_planar* raw = nullptr;
  check(ff_planar_create(p.alpha, p.lambda, p.c, p.t, &raw));
  Planar law(raw);
  const std::uint64_t seed = s.seed.resolve();
  std::vector<double> xy(2 * s.count);
  if (given_n >= 0) {
    check(ff_planar_sample_given(law.get(), static_cast<unsigned>(given_n), seed,
                                 s.count, s.workers, xy.data()));
  } else {
    check(ff_planar_sample(law.get(), seed, s.count, s.workers, xy.data()));
  }
  header(out, "planar sample");
  law_meta(out, p);
  out.meta("seed", std::to_string(seed));
  out.meta("count", std::to_string(s.count));
  if (given_n >= 0) out.meta("n", std::to_string(given_n));
  out.text("x,y\n");
  for (std::size_t i = 0; i < s.count; ++i) out.row({xy[2 * i], xy[2 * i + 1]});
}

void run_planar_project(const Law& p, const Common& c, Output& out) {
  ff_planar* raw = nullptr;
  check(ff_planar_create(p.alpha, p.lambda, p.c, p.t, &raw));
  Planar law(raw);
  header(out, "planar project");
  law_meta(out, p);
  out.meta("log_scale", c.log_scale ? "true" : "false");
  out.text(c.log_scale ? "x,log_density\n" : "x,density\n");
  const double h = p.c * p.t;
  for (double x : open_grid(-h, h, c.grid)) {
    double v = 0.0;
    check(ff_planar_projection(law.get(), x, &v));
    out.row({x, maybe_log(v, c.log_scale)});
  }
}

void run_thinned(const ff_thinned_spec& spec, double lambda, const Common& c,
                 const Sampling& s, bool sample, Output& out) {
  header(out, "planar thinned");
  out.meta("n", std::to_string(spec.n));
  out.meta("alpha", spec.alpha);
  out.meta("lambda", lambda);
  out.meta("c", spec.c);
  out.meta("t", spec.t);
  out.meta("mixing", spec.mixing == FF_MIX_FRACTIONAL ? "fractional" : "homogeneous");
  double boundary = 0.0;
  check(ff_thinned_boundary_mass(&spec, lambda, &boundary));
  out.meta("boundary_mass", boundary);
  if (sample) {
    const std::uint64_t seed = s.seed.resolve();
    std::vector<double> xy(2 * s.count);
    check(ff_thinned_sample(&spec, lambda, seed, s.count, s.workers, xy.data()));
    out.meta("seed", std::to_string(seed));
    out.meta("count", std::to_string(s.count));
    out.text("x,y\n");
    for (std::size_t i = 0; i < s.count; ++i) out.row({xy[2 * i], xy[2 * i + 1]});
    return;
  }
  out.meta("log_scale", c.log_scale ? "true" : "false");
  out.text(c.log_scale ? "rho,log_density\n" : "rho,density\n");
  for (double r : open_grid(0.0, spec.c * spec.t, c.grid)) {
    double v = 0.0;
    check(ff_thinned_density(&spec, lambda, r, 0.0, &v));
    out.row({r, maybe_log(v, c.log_scale)});
  }
}

void run_flight_ndim(int dim, const Law& p, unsigned k, const Common& c,
                     Output& out) {
  ff_flight* raw = nullptr;
  check(ff_flight_create_fractional(dim, p.alpha, p.lambda, p.c, p.t, &raw));
  Flight law(raw);
  double boundary = 0.0;
  check(ff_flight_boundary_mass(law.get(), &boundary));
  header(out, "flight ndim");
  out.meta("dim", std::to_string(dim));
  law_meta(out, p);
  out.meta("k", std::to_string(k));
  out.meta("boundary_mass", boundary);
  out.text("r,conditional_density,solution\n");
  const double ct = p.c * p.t;
  for (double r : open_grid(0.0, ct, c.grid)) {
    double v = 0.0, u = 0.0;
    check(ff_flight_conditional_radial(law.get(), k, r, &v));
    check(ff_ndim_solution(dim, p.alpha, p.lambda, p.c,
                           std::sqrt((ct - r) * (ct + r)), &u));
    out.row({r, v, u});
  }
}

void run_flight_4d(const Law& p, const Common& c, const Sampling& s, bool sample,
                   Output& out) {
  ff_flight* raw = nullptr;
  check(ff_flight_create_4d(p.alpha, p.lambda, p.c, p.t, &raw));
  Flight law(raw);
  double boundary = 0.0;
  check(ff_flight_boundary_mass(law.get(), &boundary));
  header(out, "flight 4d");
  law_meta(out, p);
  out.meta("boundary_mass", boundary);
  if (sample) {
    const std::uint64_t seed = s.seed.resolve();
    std::vector<double> v(4 * s.count);
    check(ff_flight_sample(law.get(), seed, s.count, s.workers, v.data()));
    out.meta("seed", std::to_string(seed));
    out.meta("count", std::to_string(s.count));
    out.text("x1,x2,x3,x4\n");
    for (std::size_t i = 0; i < s.count; ++i) {
      out.row({v[4 * i], v[4 * i + 1], v[4 * i + 2], v[4 * i + 3]});
    }
    return;
  }
  out.meta("log_scale", c.log_scale ? "true" : "false");
  out.text(c.log_scale ? "r,log_density\n" : "r,density\n");
  for (double r : open_grid(0.0, p.c * p.t, c.grid)) {
    double v = 0.0;
    check(ff_flight_density_radial(law.get(), r, &v));
    out.row({r, maybe_log(v, c.log_scale)});
  }
}

void run_verify(const std::string& name, const std::vector<double>& alphas,
                double lambda, double c, int terms, bool json, Output& out) {
  if (name == "all" && alphas.empty() && json) {
    JsonString j;
    int passed = 0;
    check(ff_verify_all(lambda, c, terms, &j.s, &passed));
    out.text(std::string(j.s) + "\n");
    out.flush();
    if (!passed) throw ResidualFailure("at least one verification case failed");
    return;
  }
  std::vector<std::string> names;
  if (name == "all") {
    JsonString list;
    check(ff_verify_cases(&list.s));
    // {"alphas":[...],"cases":["a","b",...]}
    const std::string s(list.s);
    const auto start = s.find("\"cases\":[");
    std::size_t pos = s.find('"', start + 9);
    while (pos != std::string::npos && pos < s.find(']', start)) {
      const auto end = s.find('"', pos + 1);
      names.push_back(s.substr(pos + 1, end - pos - 1));
      pos = s.find('"', end + 1);
    }
  } else {
    names.push_back(name);
  }
  const std::vector<double> as =
      alphas.empty() ? std::vector<double>{0.3, 0.5, 0.7, 1.0} : alphas;
  bool all_passed = true;
  if (json) out.text("[\n");
  bool first = true;
  if (!json) {
    header(out, "verify " + name);
    out.meta("lambda", lambda);
    out.meta("c", c);
    out.meta("terms", std::to_string(terms));
    out.text("case,alpha,passed\n");
  }
  for (const auto& n : names) {
    for (double a : as) {
      JsonString j;
      int passed = 0;
      check(ff_verify_case(n.c_str(), a, lambda, c, terms, &j.s, &passed));
      all_passed = all_passed && passed;
      if (json) {
        if (!first) out.text(",\n");
        out.text(j.s);
      } else {
        out.text(n + "," + Output::num(a) + "," + (passed ? "true" : "false") + "\n");
      }
      first = false;
    }
  }
  if (json) out.text("\n]\n");
  out.flush();
  if (!all_passed) throw ResidualFailure("at least one verification case failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracflight: fractional Klein-Gordon operators, fractional "
               "telegraph, planar and flight laws"};
  app.set_version_flag("--version", std::string(ff_version()));
  app.require_subcommand(1);
  Common common;
  app.add_option("-o,--output", common.output, "output file (default stdout)");

  // specfun
  auto* specfun = app.add_subcommand("specfun", "special functions");
  specfun->require_subcommand(1);
  auto* sf_eval = specfun->add_subcommand("eval", "evaluate a special function");
  std::string sf_fn = "ml";
  double sf_a = 1.0, sf_b = 1.0, sf_power = 1.0;
  int sf_n = 2;
  std::vector<double> sf_rho, sf_mu, sf_z;
  sf_eval->add_option("--fn", sf_fn, "ml | gml | mml | hyper | gamma | rgamma")
      ->capture_default_str();
  sf_eval->add_option("--alpha", sf_a, "ML order alpha (gml: inner order nu)");
  sf_eval->add_option("--beta", sf_b, "ML shift beta (gml: shift)");
  sf_eval->add_option("--power", sf_power, "gml: power of the Gamma");
  sf_eval->add_option("--rho", sf_rho, "mml: orders rho_j")->delimiter(',');
  sf_eval->add_option("--mu", sf_mu, "mml: shifts mu_j")->delimiter(',');
  sf_eval->add_option("--n", sf_n, "hyper: order n");
  sf_eval->add_option("--z", sf_z, "arguments")->delimiter(',')->required();
  sf_eval->footer(
      "ml:     E_{a,b}(z) = sum z^k / Gamma(a k + b)\n"
      "gml:    sum z^k / Gamma(nu k + shift)^power\n"
      "mml:    sum z^k / prod_j Gamma(rho_j k + mu_j)\n"
      "hyper:  I_{0,n}(x) = sum (x/n)^{n k} / (k!)^n");

  // mcbride
  auto* mcb = app.add_subcommand("mcbride", "hyper-Bessel operators");
  mcb->require_subcommand(1);
  auto* mono = mcb->add_subcommand("monomial", "fractional power on a monomial");
  std::string op_kind = "1d";
  int op_dim = 3, op_n = 2;
  double op_chi = 1.0, op_alpha = 0.5, op_beta = 0.0;
  std::vector<double> op_a;
  mono->add_option("--op", op_kind, "1d | 2d | nd | third | hyper | epd | custom")
      ->capture_default_str();
  mono->add_option("--dim", op_dim, "nd: dimension N");
  mono->add_option("--n", op_n, "hyper: order n");
  mono->add_option("--chi", op_chi, "epd: chi");
  mono->add_option("--a", op_a, "custom: exponents a_1..a_{n+1}")->delimiter(',');
  mono->add_option("--alpha", op_alpha, "power alpha")->capture_default_str();
  mono->add_option("--beta", op_beta, "monomial exponent beta")->required();
  mono->footer(
      "L = x^{a_1} D x^{a_2} D ... x^{a_n} D x^{a_{n+1}},  m = |a - n|\n"
      "L^alpha x^beta = m^{n alpha} prod_k Gamma(b_k + beta/m + 1) /\n"
      "                 Gamma(b_k + beta/m + 1 - alpha) x^{beta - m alpha}\n"
      "b_k = (a_{k+1} + ... + a_{n+1} + k - n) / m");
  auto* ek = mcb->add_subcommand("ek", "Erdelyi-Kober integral of x^beta");
  double ek_m = 1.0, ek_eta = 0.0, ek_alpha = 0.5, ek_beta = 1.0;
  std::vector<double> ek_x;
  ek->add_option("--m", ek_m)->capture_default_str();
  ek->add_option("--eta", ek_eta)->capture_default_str();
  ek->add_option("--alpha", ek_alpha, "order (negative: derivative form)")
      ->capture_default_str();
  ek->add_option("--beta", ek_beta)->capture_default_str();
  ek->add_option("--x", ek_x, "evaluation points")->delimiter(',')->required();
  ek->footer(
      "I_m^{eta,alpha} f(x) = m x^{-m(eta+alpha)} / Gamma(alpha)\n"
      "    * int_0^x (x^m - u^m)^{alpha-1} u^{m eta + m - 1} f(u) du\n"
      "on x^beta: Gamma(eta + beta/m + 1) / Gamma(eta + alpha + beta/m + 1) x^beta");

  // fpp
  auto* fpp = app.add_subcommand("fpp", "fractional Poisson counting law");
  fpp->require_subcommand(1);
  Law fpp_law;
  Sampling fpp_s;
  unsigned fpp_kmax = 20;
  auto* fpp_pmf = fpp->add_subcommand("pmf", "probability mass function");
  add_law(fpp_pmf, fpp_law, false);
  fpp_pmf->add_option("--kmax", fpp_kmax)->capture_default_str();
  auto* fpp_sample = fpp->add_subcommand("sample", "exact draws");
  add_law(fpp_sample, fpp_law, false);
  add_sampling(fpp_sample, fpp_s);
  for (auto* s : {fpp_pmf, fpp_sample}) {
    s->footer("P{N = k} = (lambda t^alpha)^k / Gamma(alpha k + 1) / E_{alpha,1}(lambda t^alpha)");
  }

  // telegraph
  auto* tel = app.add_subcommand("telegraph", "fractional telegraph-type process");
  tel->require_subcommand(1);
  Law tel_law;
  Sampling tel_s;
  int tel_given = -1;
  unsigned tel_n = 1;
  auto* tel_density = tel->add_subcommand("density", "absolutely continuous density");
  add_law(tel_density, tel_law);
  tel_density->add_option("--grid", common.grid, "points in (-ct, ct)")->capture_default_str();
  tel_density->add_flag("--log-scale", common.log_scale, "write log(density)");
  tel_density->footer(
      "p(x,t) = sum_n P{N = n} f_n(x),  f_n = Beta(a_n, a_n) on [-ct, ct],\n"
      "a_n = alpha n / 2 (n even), (alpha n + 1) / 2 (n odd);\n"
      "atoms 1 / (2 E_{alpha,1}(lambda t^alpha)) at x = -ct and x = ct");
  auto* tel_cond = tel->add_subcommand("conditional", "density given n events");
  add_law(tel_cond, tel_law);
  tel_cond->add_option("--n", tel_n, "number of events")->capture_default_str();
  tel_cond->add_option("--grid", common.grid)->capture_default_str();
  tel_cond->add_flag("--log-scale", common.log_scale);
  tel_cond->footer(
      "f_n(x) = Gamma(2 a_n) / (Gamma(a_n)^2 (2ct)^{2 a_n - 1}) (c^2 t^2 - x^2)^{a_n - 1}");
  auto* tel_sample = tel->add_subcommand("sample", "exact position draws");
  add_law(tel_sample, tel_law);
  add_sampling(tel_sample, tel_s);
  tel_sample->add_option("--given-n", tel_given, "condition on n events");
  tel_sample->footer("N ~ fractional Poisson; X | N = n ~ ct (2 Beta(a_n, a_n) - 1)");
  auto* tel_shape = tel->add_subcommand("shape", "shape of the conditional density");
  std::string shape_alpha = "0.5", shape_parity = "even";
  unsigned shape_k = 1;
  tel_shape->add_option("--alpha", shape_alpha, "decimal or p/q")->capture_default_str();
  tel_shape->add_option("--k", shape_k)->capture_default_str();
  tel_shape->add_option("--parity", shape_parity, "even (n = 2k) | odd (n = 2k+1)")
      ->capture_default_str();
  tel_shape->footer(
      "exponent of (c^2 t^2 - x^2): alpha k - 1 (n = 2k), alpha k + (alpha - 1)/2 (n = 2k+1)\n"
      "negative: arcsine, zero: uniform, positive: bell");

  // planar
  auto* pla = app.add_subcommand("planar", "fractional planar random motion");
  pla->require_subcommand(1);
  Law pla_law;
  Sampling pla_s;
  int pla_given = -1;
  auto* pla_density = pla->add_subcommand("density", "radial profile of the density");
  add_law(pla_density, pla_law);
  pla_density->add_option("--grid", common.grid)->capture_default_str();
  pla_density->add_flag("--log-scale", common.log_scale);
  pla_density->footer(
      "p(x,y,t) = lambda / (2 pi c^alpha E) E_{alpha,alpha}(lambda (w/c)^alpha) / w^{2-alpha},\n"
      "w = sqrt(c^2 t^2 - x^2 - y^2), E = E_{alpha,1}(lambda t^alpha);\n"
      "mass 1/E on the circle of radius ct");
  auto* pla_sample = pla->add_subcommand("sample", "exact position draws");
  add_law(pla_sample, pla_law);
  add_sampling(pla_sample, pla_s);
  pla_sample->add_option("--given-n", pla_given, "condition on n events");
  pla_sample->footer("rho | N = n: ct sqrt(1 - V^{2/(n alpha)}), V uniform, angle uniform");
  auto* pla_project = pla->add_subcommand("project", "density of the x coordinate");
  add_law(pla_project, pla_law);
  pla_project->add_option("--grid", common.grid)->capture_default_str();
  pla_project->add_flag("--log-scale", common.log_scale);
  pla_project->footer("q(x,t) = int p(x,y,t) dy plus the projected circle mass");
  auto* thin = pla->add_subcommand("thinned", "motion with binomially thinned changes");
  ff_thinned_spec thin_spec{1, 0.5, 1.0, 1.0, FF_MIX_HOMOGENEOUS};
  double thin_lambda = 1.0;
  std::string thin_mixing = "homogeneous";
  bool thin_sample = false;
  thin->add_option("--n", thin_spec.n, "changes of direction")->capture_default_str();
  thin->add_option("--alpha", thin_spec.alpha, "retention probability")->capture_default_str();
  thin->add_option("--lambda", thin_lambda)->capture_default_str();
  thin->add_option("--c", thin_spec.c)->capture_default_str();
  thin->add_option("--t", thin_spec.t)->capture_default_str();
  thin->add_option("--mixing", thin_mixing, "fractional | homogeneous")->capture_default_str();
  thin->add_option("--grid", common.grid)->capture_default_str();
  thin->add_flag("--log-scale", common.log_scale);
  thin->add_flag("--sample", thin_sample, "write draws instead of the density");
  add_sampling(thin, pla_s);
  thin->footer(
      "K ~ Binomial(n, alpha) retained changes;\n"
      "E p_K(x,y,t) = sum_k C(n,k) alpha^k (1-alpha)^{n-k} k / (2 pi (ct)^k) (c^2t^2 - r^2)^{k/2-1}");

  // flight
  auto* fli = app.add_subcommand("flight", "random flights");
  fli->require_subcommand(1);
  Law fli_law;
  Sampling fli_s;
  int fli_dim = 3;
  unsigned fli_k = 1;
  bool fli_sample = false;
  auto* fli_nd = fli->add_subcommand("ndim", "N-dimensional flight, conditional radial profile");
  fli_nd->add_option("--dim", fli_dim)->capture_default_str();
  add_law(fli_nd, fli_law);
  fli_nd->add_option("--k", fli_k, "number of events")->capture_default_str();
  fli_nd->add_option("--grid", common.grid)->capture_default_str();
  fli_nd->footer(
      "p_k(x) = Gamma(N/2 + k alpha/2) / (pi^{N/2} Gamma(k alpha/2) (ct)^{N + k alpha - 2})\n"
      "         (c^2 t^2 - |x|^2)^{k alpha/2 - 1}\n"
      "solution: sum p^{2k} w^{2 alpha k + 2 alpha - 2} / (Gamma(alpha k + alpha + (N-1)/2) Gamma(alpha k + alpha))");
  auto* fli_4d = fli->add_subcommand("4d", "4-dimensional flight, alpha in (1, 2]");
  add_law(fli_4d, fli_law);
  fli_4d->add_option("--grid", common.grid)->capture_default_str();
  fli_4d->add_flag("--log-scale", common.log_scale);
  fli_4d->add_flag("--sample", fli_sample, "write draws instead of the density");
  add_sampling(fli_4d, fli_s);
  fli_4d->footer(
      "p(x,t) = q w^{alpha-2} / (pi^2 c^2 t^2 E) [E_{a/2,a/2-1}(q w^a) + 2 E_{a/2,a/2}(q w^a)],\n"
      "q = lambda / (c^alpha t^{alpha/2}),  E = E_{alpha/2,1}(lambda t^{alpha/2})");

  // verify
  auto* ver = app.add_subcommand("verify", "certify series solutions against their equations");
  std::string ver_name;
  std::vector<double> ver_alpha;
  double ver_lambda = 1.0, ver_c = 1.0;
  int ver_terms = 40;
  bool ver_json = false;
  ver->add_option("case", ver_name, "case name or 'all'")->required();
  ver->add_option("--alpha", ver_alpha, "alphas (default 0.3,0.5,0.7,1)")->delimiter(',');
  ver->add_option("--lambda", ver_lambda)->capture_default_str();
  ver->add_option("--c", ver_c)->capture_default_str();
  ver->add_option("--terms", ver_terms)->capture_default_str();
  ver->add_flag("--json", ver_json, "JSON report with the per-term ledger");
  ver->footer(
      "checks (L^alpha)^p u = eigenvalue u + forcing term by term and on a w grid;\n"
      "cases: kg1d kg1d-minus kg1d-iterate2 kg1d-iterate3 kg1d-second kg1d-odd\n"
      "       kg2d kg2d-odd kg2d-mixture projection kgnd-{1,2,3,5}\n"
      "       hyperbessel-{2,3,4} third-order epd");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    Output out(common.output);
    if (sf_eval->parsed()) {
      run_specfun(sf_fn, sf_a, sf_b, sf_power, sf_rho, sf_mu, sf_n, sf_z, out);
    } else if (mono->parsed()) {
      const Operator op = make_operator(op_kind, op_dim, op_n, op_chi, op_a);
      int order = 0;
      double m = 0.0;
      check(ff_operator_info(op.get(), &order, &m, nullptr));
      double coef = 0.0, expo = 0.0;
      check(ff_operator_monomial(op.get(), op_alpha, op_beta, &coef, &expo));
      header(out, "mcbride monomial");
      out.meta("operator", op_kind);
      out.meta("order", std::to_string(order));
      out.meta("m", m);
      out.meta("alpha", op_alpha);
      out.text("beta,coefficient,exponent\n");
      out.row({op_beta, coef, expo});
    } else if (ek->parsed()) {
      header(out, "mcbride ek");
      out.meta("m", ek_m);
      out.meta("eta", ek_eta);
      out.meta("alpha", ek_alpha);
      out.meta("beta", ek_beta);
      out.text("x,quadrature,closed_form\n");
      PowerFn f{ek_beta};
      for (double x : ek_x) {
        double q = 0.0, exact = 0.0;
        if (ek_alpha > 0.0) {
          check(ff_ek_integral(ek_m, ek_eta, ek_alpha, power_fn, &f, x, ek_beta, &q));
        } else {
          check(ff_ek_negative_order(ek_m, ek_eta, ek_alpha, power_fn,
                                     power_fn_prime, &f, x, ek_beta, &q));
        }
        check(ff_ek_monomial(ek_m, ek_eta, ek_alpha, ek_beta, &exact));
        out.row({x, q, exact * std::pow(x, ek_beta)});
      }
    } else if (fpp_pmf->parsed()) {
      ff_fpp* raw = nullptr;
      check(ff_fpp_create(fpp_law.alpha, fpp_law.lambda, fpp_law.t, &raw));
      Fpp law(raw);
      double even = 0.0, odd = 0.0;
      check(ff_fpp_even_odd(law.get(), &even, &odd));
      header(out, "fpp pmf");
      law_meta(out, fpp_law, false);
      out.meta("even_mass", even);
      out.meta("odd_mass", odd);
      out.text("k,pmf\n");
      for (unsigned k = 0; k <= fpp_kmax; ++k) {
        double v = 0.0;
        check(ff_fpp_pmf(law.get(), k, &v));
        out.row({double(k), v});
      }
    } else if (fpp_sample->parsed()) {
      ff_fpp* raw = nullptr;
      check(ff_fpp_create(fpp_law.alpha, fpp_law.lambda, fpp_law.t, &raw));
      Fpp law(raw);
      const std::uint64_t seed = fpp_s.seed.resolve();
      std::vector<unsigned> ks(fpp_s.count);
      check(ff_fpp_sample(law.get(), seed, fpp_s.count, fpp_s.workers, ks.data()));
      header(out, "fpp sample");
      law_meta(out, fpp_law, false);
      out.meta("seed", std::to_string(seed));
      out.meta("count", std::to_string(fpp_s.count));
      out.text("k\n");
      for (unsigned k : ks) out.text(std::to_string(k) + "\n");
    } else if (tel_density->parsed()) {
      run_telegraph_density(tel_law, common, out);
    } else if (tel_cond->parsed()) {
      run_telegraph_conditional(tel_law, tel_n, common, out);
    } else if (tel_sample->parsed()) {
      run_telegraph_sample(tel_law, tel_s, tel_given, out);
    } else if (tel_shape->parsed()) {
      run_shape(shape_alpha, shape_k, shape_parity, out);
    } else if (pla_density->parsed()) {
      run_planar_density(pla_law, common, out);
    } else if (pla_sample->parsed()) {
      run_planar_sample(pla_law, pla_s, pla_given, out);
    } else if (pla_project->parsed()) {
      run_planar_project(pla_law, common, out);
    } else if (thin->parsed()) {
      if (thin_mixing == "fractional") {
        thin_spec.mixing = FF_MIX_FRACTIONAL;
      } else if (thin_mixing != "homogeneous") {
        throw UsageError("--mixing must be fractional or homogeneous");
      }
      run_thinned(thin_spec, thin_lambda, common, pla_s, thin_sample, out);
    } else if (fli_nd->parsed()) {
      run_flight_ndim(fli_dim, fli_law, fli_k, common, out);
    } else if (fli_4d->parsed()) {
      run_flight_4d(fli_law, common, fli_s, fli_sample, out);
    } else if (ver->parsed()) {
      run_verify(ver_name, ver_alpha, ver_lambda, ver_c, ver_terms, ver_json, out);
    }
    out.flush();
  } catch (const UsageError& e) {
    std::fprintf(stderr, "fracflight: %s\n", e.what());
    return kExitValidation;
  } catch (const StatusError& e) {
    std::fprintf(stderr, "fracflight: %s\n", e.what());
    return exit_code_for(e.status);
  } catch (const ResidualFailure& e) {
    std::fprintf(stderr, "fracflight: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fracflight: %s\n", e.what());
    return kExitNumerical;
  }
  return 0;
}
