#include "fekete.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "energy.hpp"
#include "geometry.hpp"
#include "minimizer.hpp"
#include "pointset_io.hpp"
#include "quadrature.hpp"
#include "verify.hpp"
#include "wasserstein.hpp"

using nlohmann::json;

struct fekete_config {
  fekete::Configuration cfg;
};

namespace {

thread_local std::string g_last_error;

char* alloc_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Round to 15 significant digits; the constants report is specified at
// that precision.
double sig15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::strtod(buf, nullptr);
}

template <typename F>
fekete_status wrap(F&& fn) {
  g_last_error.clear();
  try {
    fn();
    return FEKETE_OK;
  } catch (const fekete::PointSetParseError& e) {
    g_last_error = e.what();
    return FEKETE_ERR_PARSE;
  } catch (const fekete::PointSetIoError& e) {
    g_last_error = e.what();
    return FEKETE_ERR_IO;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return FEKETE_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FEKETE_ERR_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return FEKETE_ERR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FEKETE_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return FEKETE_ERR_INTERNAL;
  }
}

fekete_status require(bool ok, fekete_status code, const char* message) {
  if (ok) return FEKETE_OK;
  g_last_error = message;
  return code;
}

json constants_report() {
  const fekete::BoundConstants& k = fekete::constants();
  json report;
  report["I_sigma"] = sig15(k.I_sigma);
  report["kappa"] = sig15(k.kappa);
  report["C"] = sig15(k.C);
  report["C1"] = sig15(k.C1);
  report["C2"] = sig15(k.C2);
  report["eps_max"] = sig15(k.eps_max);
  report["u2"] = sig15(fekete::u(2.0));
  report["v2"] = sig15(fekete::v(2.0));
  report["C_tilde"] = sig15(k.C_tilde);
  report["C_BHS"] = sig15(k.C_BHS);
  report["C_lauritsen"] = sig15(k.C_lauritsen);
  return report;
}

json bound_report(double eps) {
  const auto [eps_star, total_star] = fekete::maximize_linear_coefficient();
  const double ueps = fekete::u(eps);
  const fekete::VValue veps = fekete::v_eval(eps);
  json report;
  report["eps"] = eps;
  report["u"] = ueps;
  report["v"] = veps.value;
  report["v_clamped"] = veps.clamped;
  report["total"] = ueps + veps.value;
  report["eps_star"] = eps_star;
  report["total_star"] = total_star;

  const fekete::BoundConstants& k = fekete::constants();
  json kc;
  kc["I_sigma"] = k.I_sigma;
  kc["C"] = k.C;
  kc["C1"] = k.C1;
  kc["C2"] = k.C2;
  kc["C_BHS"] = k.C_BHS;
  kc["C_tilde"] = k.C_tilde;
  kc["C_lauritsen"] = k.C_lauritsen;
  kc["eps_max"] = k.eps_max;
  report["constants"] = kc;
  return report;
}

fekete::MinimizeOptions convert(const fekete_minimize_options* opts) {
  fekete::MinimizeOptions mo;
  if (opts != nullptr) {
    mo.max_iters = opts->max_iters;
    mo.grad_tol = opts->grad_tol;
    mo.restarts = opts->restarts;
    mo.seed = opts->seed;
    mo.init = opts->random_init ? fekete::MinimizeOptions::Init::random
                                : fekete::MinimizeOptions::Init::spiral;
  }
  return mo;
}

}  // namespace

extern "C" {

const char* fekete_version(void) { return FEKETE_VERSION; }

const char* fekete_status_message(fekete_status status) {
  switch (status) {
    case FEKETE_OK: return "ok";
    case FEKETE_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FEKETE_ERR_DOMAIN: return "argument outside the valid domain";
    case FEKETE_ERR_IO: return "input/output error";
    case FEKETE_ERR_PARSE: return "parse error";
    case FEKETE_ERR_NUMERIC: return "numerical failure";
    case FEKETE_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* fekete_last_error(void) { return g_last_error.c_str(); }

void fekete_string_free(char* s) { delete[] s; }

fekete_status fekete_config_create(const double* xyz, int n, fekete_config** out) {
  if (fekete_status st = require(xyz != nullptr && out != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  if (fekete_status st = require(n >= 1, FEKETE_ERR_INVALID_ARGUMENT,
                                 "need at least one point")) {
    return st;
  }
  return wrap([&] {
    std::vector<fekete::UnitVector> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      pts.emplace_back(xyz[3 * i], xyz[3 * i + 1], xyz[3 * i + 2]);
    }
    *out = new fekete_config{fekete::Configuration(std::move(pts))};
  });
}

fekete_status fekete_config_load(const char* path, fekete_config** out) {
  if (fekete_status st = require(path != nullptr && out != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = new fekete_config{fekete::load_pointset(path)}; });
}

fekete_status fekete_config_save(const fekete_config* cfg, const char* path) {
  if (fekete_status st = require(cfg != nullptr && path != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  return wrap([&] { fekete::save_pointset(cfg->cfg, path); });
}

fekete_status fekete_config_spiral(int n, fekete_config** out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = new fekete_config{fekete::init_spiral(n)}; });
}

fekete_status fekete_config_random(int n, uint64_t seed, fekete_config** out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = new fekete_config{fekete::random_configuration(n, seed)}; });
}

int fekete_config_size(const fekete_config* cfg) {
  return cfg == nullptr ? 0 : static_cast<int>(cfg->cfg.size());
}

fekete_status fekete_config_point(const fekete_config* cfg, int index, double xyz_out[3]) {
  if (fekete_status st = require(cfg != nullptr && xyz_out != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  if (fekete_status st =
          require(index >= 0 && index < static_cast<int>(cfg->cfg.size()),
                  FEKETE_ERR_INVALID_ARGUMENT, "point index out of range")) {
    return st;
  }
  const fekete::UnitVector& p = cfg->cfg[static_cast<std::size_t>(index)];
  xyz_out[0] = p.x();
  xyz_out[1] = p.y();
  xyz_out[2] = p.z();
  return FEKETE_OK;
}

void fekete_config_free(fekete_config* cfg) { delete cfg; }

fekete_status fekete_geodesic_distance(const double u[3], const double v[3], double* out) {
  if (fekete_status st = require(u != nullptr && v != nullptr && out != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    *out = fekete::geodesic_distance(fekete::UnitVector(u[0], u[1], u[2]),
                                     fekete::UnitVector(v[0], v[1], v[2]));
  });
}

fekete_status fekete_cap_measure(double a, double* out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = fekete::cap_measure(a); });
}

fekete_status fekete_pair_energy(const fekete_config* cfg, double* out) {
  if (fekete_status st = require(cfg != nullptr && out != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = fekete::pair_energy(cfg->cfg); });
}

fekete_status fekete_cap_self_energy(double a, double* out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = fekete::cap_self_energy(a); });
}

fekete_status fekete_cap_cross_energy_disjoint(double d, double a, double* out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = fekete::cap_cross_energy_disjoint(d, a); });
}

fekete_status fekete_decomposition_json(const fekete_config* cfg, double eps,
                                        long long overlap_samples, uint64_t seed,
                                        char** json_out) {
  if (fekete_status st = require(cfg != nullptr && json_out != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    fekete::OverlapQuadratureOptions opts;
    if (overlap_samples > 0) opts.samples = overlap_samples;
    opts.seed = seed;
    const fekete::EnergyBreakdown b = fekete::decomposition_lower_bound(cfg->cfg, eps, opts);
    json report;
    report["pair_sum"] = b.pair_sum;
    report["self_terms"] = b.self_terms;
    report["cross_terms"] = b.cross_terms;
    report["cross_terms_error"] = b.cross_error;
    report["smeared"] = b.smeared;
    report["smeared_error"] = b.smeared_error;
    report["kappa"] = b.kappa;
    report["rhs"] = b.rhs;
    report["slack"] = b.slack;
    report["slack_error"] = b.slack_error;
    report["eps"] = eps;
    *json_out = alloc_string(report.dump());
  });
}

fekete_status fekete_get_constants(fekete_constants* out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    const fekete::BoundConstants& k = fekete::constants();
    out->i_sigma = k.I_sigma;
    out->kappa = k.kappa;
    out->c = k.C;
    out->c1 = k.C1;
    out->c2 = k.C2;
    out->eps_max = k.eps_max;
    out->u2 = fekete::u(2.0);
    out->v2 = fekete::v(2.0);
    out->c_tilde = k.C_tilde;
    out->c_bhs = k.C_BHS;
    out->c_lauritsen = k.C_lauritsen;
  });
}

fekete_status fekete_constants_json(char** json_out) {
  if (fekete_status st = require(json_out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *json_out = alloc_string(constants_report().dump()); });
}

fekete_status fekete_u(double eps, double* out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *out = fekete::u(eps); });
}

fekete_status fekete_v(double eps, double* out, int* clamped_out) {
  if (fekete_status st = require(out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    const fekete::VValue val = fekete::v_eval(eps);
    *out = val.value;
    if (clamped_out != nullptr) *clamped_out = val.clamped ? 1 : 0;
  });
}

fekete_status fekete_bound_json(double eps, char** json_out) {
  if (fekete_status st = require(json_out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  if (fekete_status st = require(eps > 0.0 && eps < fekete::constants().eps_max,
                                 FEKETE_ERR_DOMAIN, "eps outside (0, eps_max)")) {
    return st;
  }
  return wrap([&] { *json_out = alloc_string(bound_report(eps).dump()); });
}

fekete_status fekete_bound_maximize_json(char** json_out) {
  if (fekete_status st = require(json_out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    const auto [eps_star, total_star] = fekete::maximize_linear_coefficient();
    json report = bound_report(eps_star);
    report["eps_star"] = eps_star;
    report["total_star"] = total_star;
    *json_out = alloc_string(report.dump());
  });
}

fekete_status fekete_maximize(double* eps_star, double* value) {
  if (fekete_status st = require(eps_star != nullptr && value != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    const auto [star, total] = fekete::maximize_linear_coefficient();
    *eps_star = star;
    *value = total;
  });
}

fekete_status fekete_plot_grid_csv(double eps_lo, double eps_hi, int steps, char** csv_out) {
  if (fekete_status st = require(csv_out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] { *csv_out = alloc_string(fekete::plot_grid_csv(eps_lo, eps_hi, steps)); });
}

void fekete_verify_options_default(fekete_verify_options* opts) {
  if (opts == nullptr) return;
  opts->samples = 1000000;
  opts->seed = 20240801;
  opts->inject_sign_flip = 0;
}

fekete_status fekete_verify_json(const fekete_verify_options* opts, int* all_passed_out,
                                 char** json_out) {
  if (fekete_status st = require(json_out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    fekete::VerifyOptions vo;
    if (opts != nullptr) {
      if (opts->samples > 0) vo.samples = opts->samples;
      vo.seed = opts->seed;
      vo.inject_sign_flip = opts->inject_sign_flip != 0;
    }
    const std::vector<fekete::VerifyCheck> checks = fekete::run_verification(vo);
    json rows = json::array();
    for (const auto& c : checks) {
      json row;
      row["name"] = c.name;
      row["method"] = c.method;
      row["value"] = c.value;
      row["reference"] = c.reference;
      row["tolerance"] = c.tolerance;
      row["pass"] = c.pass;
      rows.push_back(row);
    }
    const bool ok = fekete::all_passed(checks);
    json report;
    report["checks"] = rows;
    report["all_passed"] = ok;
    report["samples"] = vo.samples;
    report["seed"] = vo.seed;
    if (all_passed_out != nullptr) *all_passed_out = ok ? 1 : 0;
    *json_out = alloc_string(report.dump());
  });
}

void fekete_minimize_options_default(fekete_minimize_options* opts) {
  if (opts == nullptr) return;
  opts->max_iters = 50000;
  opts->grad_tol = 0.0;
  opts->restarts = 1;
  opts->seed = 0;
  opts->random_init = 0;
}

fekete_status fekete_minimize(int n, const fekete_minimize_options* opts,
                              fekete_config** out_config, char** json_out) {
  if (fekete_status st = require(json_out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  if (fekete_status st = require(n >= 2, FEKETE_ERR_INVALID_ARGUMENT,
                                 "minimization needs at least 2 points")) {
    return st;
  }
  return wrap([&] {
    const fekete::MinimizeOptions mo = convert(opts);
    const fekete::MinimizeResult res = fekete::minimize_n(n, mo);
    json report;
    report["n"] = n;
    report["energy"] = res.energy;
    report["iters"] = res.iters;
    report["grad_norm"] = res.grad_norm;
    report["converged"] = res.converged;
    report["stagnated"] = res.stagnated;
    report["restarts"] = std::max(1, mo.restarts);
    report["best_restart"] = res.best_restart;
    report["seed"] = mo.seed;
    *json_out = alloc_string(report.dump());
    if (out_config != nullptr) {
      *out_config = new fekete_config{res.config};
    }
  });
}

fekete_status fekete_fit_clog(int nmin, int nmax, int step,
                              const fekete_minimize_options* opts, const char* out_dir,
                              char** json_out) {
  if (fekete_status st = require(json_out != nullptr, FEKETE_ERR_INVALID_ARGUMENT,
                                 "null pointer argument")) {
    return st;
  }
  if (fekete_status st = require(nmin >= 2 && step >= 1 && nmax >= nmin,
                                 FEKETE_ERR_INVALID_ARGUMENT,
                                 "require nmin >= 2, step >= 1, nmax >= nmin")) {
    return st;
  }
  return wrap([&] {
    const fekete::MinimizeOptions mo = convert(opts);
    if (out_dir != nullptr) {
      std::filesystem::create_directories(out_dir);
    }
    std::vector<int> ns;
    for (int n = nmin; n <= nmax; n += step) ns.push_back(n);

    json curve = json::array();
    std::vector<fekete::CurvePoint> points;
    for (const int n : ns) {
      const fekete::MinimizeResult res = fekete::minimize_n(n, mo);
      points.push_back({n, res.energy});
      json row;
      row["n"] = n;
      row["energy"] = res.energy;
      curve.push_back(row);
      if (out_dir != nullptr) {
        char name[64];
        std::snprintf(name, sizeof(name), "/points_n%04d.txt", n);
        fekete::save_pointset(res.config, std::string(out_dir) + name);
      }
    }
    const fekete::FitResult fit = fekete::fit_clog(points);
    json report;
    report["curve"] = curve;
    report["c_log_hat"] = fit.c_log_hat;
    report["correction_coeff"] = fit.correction_coeff;
    report["residual_rms"] = fit.residual_rms;
    report["n_values"] = fit.n_values;
    report["seed"] = mo.seed;
    *json_out = alloc_string(report.dump());
  });
}

fekete_status fekete_transport_json(const fekete_config* cfg, double eps, long long samples,
                                    uint64_t seed, int* satisfied_out, char** json_out) {
  if (fekete_status st = require(cfg != nullptr && json_out != nullptr,
                                 FEKETE_ERR_INVALID_ARGUMENT, "null pointer argument")) {
    return st;
  }
  return wrap([&] {
    fekete::TransportOptions opts;
    if (samples > 0) opts.witness_samples = samples;
    opts.seed = seed;
    const fekete::TransportCheck check = fekete::gz_inequality_check(cfg->cfg, eps, opts);

    json report;
    json estimate;
    estimate["value"] = check.witness.value;
    estimate["error"] = check.witness.error;
    estimate["method"] = check.witness.method;
    estimate["samples"] = check.witness.n;
    report["witness_estimate"] = estimate;
    report["w1_lower"] = check.w1_lower;
    report["stderr"] = check.stderr_w1;
    report["two_i_mu"] = check.two_i_mu;
    report["two_i_mu_error"] = check.two_i_mu_error;
    report["satisfied"] = check.satisfied;
    report["eps"] = eps;
    report["samples"] = opts.witness_samples;
    report["seed"] = seed;

    bool fejes_ok = true;
    const int n = static_cast<int>(cfg->cfg.size());
    if (n < 4) {
      report["fejes_toth_skipped"] = true;
      report["skip_reason"] = "triangle comparison needs at least 4 points";
    } else if (fekete::hemisphere_witness(cfg->cfg).has_value()) {
      report["fejes_toth_skipped"] = true;
      report["skip_reason"] = "configuration is contained in a closed hemisphere";
    } else {
      const double rhs = fekete::fejes_toth_rhs(n, eps);
      fejes_ok = check.w1_lower >= rhs - 3.0 * check.stderr_w1;
      report["fejes_toth_skipped"] = false;
      report["fejes_toth_rhs"] = rhs;
      report["fejes_toth_passed"] = fejes_ok;
    }

    const bool ok = check.satisfied && fejes_ok;
    if (satisfied_out != nullptr) *satisfied_out = ok ? 1 : 0;
    *json_out = alloc_string(report.dump());
  });
}

}  // extern "C"
