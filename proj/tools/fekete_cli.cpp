// Command-line surface for the fekete shared library. Every computation
// goes through the C API in fekete.h; this file only parses arguments,
// assembles manifests, and writes files.

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fekete.h"

using nlohmann::json;

namespace {

struct OutputTarget {
  std::string path;  // empty: stdout
};

std::string iso8601_now() {
  char buf[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

json make_manifest(const std::string& command, const json& parameters, uint64_t seed) {
  json manifest;
  manifest["command"] = command;
  manifest["parameters"] = parameters;
  manifest["seed"] = seed;
  manifest["tool_version"] = fekete_version();
  return manifest;
}

// Data payloads stay deterministic for fixed arguments and seeds; the
// timestamp lives only in the sidecar manifest file.
void write_sidecar_manifest(const std::string& data_path, json manifest) {
  manifest["timestamp"] = iso8601_now();
  std::ofstream out(data_path + ".manifest.json", std::ios::binary);
  out << manifest.dump(2) << "\n";
}

int emit_json(const OutputTarget& target, const std::string& command, const json& parameters,
              uint64_t seed, const char* report_text) {
  json document;
  document["manifest"] = make_manifest(command, parameters, seed);
  document["report"] = json::parse(report_text);
  const std::string payload = document.dump(2) + "\n";
  if (target.path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(target.path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << target.path << "\n";
      return 2;
    }
    out << payload;
    write_sidecar_manifest(target.path, document["manifest"]);
  }
  return 0;
}

int emit_text(const OutputTarget& target, const std::string& command, const json& parameters,
              uint64_t seed, const char* text) {
  if (target.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(target.path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << target.path << "\n";
      return 2;
    }
    out << text;
    write_sidecar_manifest(target.path, make_manifest(command, parameters, seed));
  }
  return 0;
}

int fail(fekete_status status) {
  std::cerr << "error: " << fekete_status_message(status);
  const char* detail = fekete_last_error();
  if (detail != nullptr && detail[0] != '\0') {
    std::cerr << " (" << detail << ")";
  }
  std::cerr << "\n";
  return 2;
}

struct StringGuard {
  char* ptr = nullptr;
  ~StringGuard() { fekete_string_free(ptr); }
};

struct ConfigGuard {
  fekete_config* ptr = nullptr;
  ~ConfigGuard() { fekete_config_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fekete: logarithmic energy on the sphere -- bound constants, "
               "verification, minimization, and transport checks"};
  app.require_subcommand(1);

  // constants
  auto* cmd_constants = app.add_subcommand("constants", "Report the closed-form constants");
  std::string constants_out;
  cmd_constants->add_option("--out", constants_out, "Write JSON to a file");

  // bound
  auto* cmd_bound = app.add_subcommand("bound", "Evaluate or maximize u(eps) + v(eps)");
  double bound_eps = 2.0;
  bool bound_maximize = false;
  std::string bound_out;
  auto* bound_eps_opt = cmd_bound->add_option("--eps", bound_eps, "Evaluation point");
  cmd_bound->add_flag("--maximize", bound_maximize, "Maximize over eps instead");
  cmd_bound->add_option("--out", bound_out, "Write JSON to a file");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "Run the closed-form-vs-oracle suite");
  long long verify_samples = 1000000;
  uint64_t verify_seed = 20240801;
  bool verify_flip = false;
  std::string verify_out;
  cmd_verify->add_option("--samples", verify_samples, "Monte-Carlo samples per check");
  cmd_verify->add_option("--seed", verify_seed, "Master seed");
  cmd_verify->add_flag("--inject-sign-flip", verify_flip,
                       "Negative control: flip a sign so the suite must fail");
  cmd_verify->add_option("--out", verify_out, "Write JSON to a file");

  // minimize
  auto* cmd_minimize = app.add_subcommand("minimize", "Minimize the energy of N points");
  int min_n = 0;
  uint64_t min_seed = 0;
  int min_restarts = 1;
  int min_iters = 50000;
  double min_grad_tol = 0.0;
  bool min_random_init = false;
  std::string min_out, min_json_out;
  cmd_minimize->add_option("--n", min_n, "Number of points")->required();
  cmd_minimize->add_option("--seed", min_seed, "Master seed");
  cmd_minimize->add_option("--restarts", min_restarts, "Restart count");
  cmd_minimize->add_option("--max-iters", min_iters, "Iteration cap");
  cmd_minimize->add_option("--grad-tol", min_grad_tol, "Stopping gradient norm (0: 1e-10 N)");
  cmd_minimize->add_flag("--random-init", min_random_init, "Random start instead of spiral");
  cmd_minimize->add_option("--out", min_out, "Write the minimized point set to a file");
  cmd_minimize->add_option("--json-out", min_json_out, "Write the JSON report to a file");

  // fit
  auto* cmd_fit = app.add_subcommand("fit", "Minimize over an N range and fit the linear term");
  int fit_nmin = 50, fit_nmax = 500, fit_step = 50;
  uint64_t fit_seed = 0;
  int fit_restarts = 2;
  int fit_iters = 4000;
  double fit_grad_tol = -1.0;
  std::string fit_out, fit_dir;
  cmd_fit->add_option("--nmin", fit_nmin, "Smallest N")->required();
  cmd_fit->add_option("--nmax", fit_nmax, "Largest N")->required();
  cmd_fit->add_option("--step", fit_step, "N increment")->required();
  cmd_fit->add_option("--seed", fit_seed, "Master seed");
  cmd_fit->add_option("--restarts", fit_restarts, "Restart count per N");
  cmd_fit->add_option("--max-iters", fit_iters, "Iteration cap per restart");
  cmd_fit->add_option("--grad-tol", fit_grad_tol,
                      "Stopping gradient norm (-1: curve default 1e-7 N)");
  cmd_fit->add_option("--out-dir", fit_dir, "Directory for per-N point-set files");
  cmd_fit->add_option("--out", fit_out, "Write JSON to a file");

  // plot-data
  auto* cmd_plot = app.add_subcommand("plot-data", "CSV grid of (eps, u, v, u+v)");
  double plot_lo = 0.5, plot_hi = 2.19;
  int plot_steps = 200;
  std::string plot_out;
  cmd_plot->add_option("--lo", plot_lo, "Grid start")->required();
  cmd_plot->add_option("--hi", plot_hi, "Grid end")->required();
  cmd_plot->add_option("--steps", plot_steps, "Row count")->required();
  cmd_plot->add_option("--out", plot_out, "Write CSV to a file");

  // transport
  auto* cmd_transport = app.add_subcommand("transport", "Transport lower-bound checks");
  std::string transport_config;
  double transport_eps = 2.0;
  long long transport_samples = 200000;
  uint64_t transport_seed = 0;
  std::string transport_out;
  cmd_transport->add_option("--config", transport_config, "Point-set file")->required();
  cmd_transport->add_option("--eps", transport_eps, "Smearing parameter");
  cmd_transport->add_option("--samples", transport_samples, "Witness Monte-Carlo samples");
  cmd_transport->add_option("--seed", transport_seed, "Master seed");
  cmd_transport->add_option("--out", transport_out, "Write JSON to a file");

  CLI11_PARSE(app, argc, argv);

  if (cmd_constants->parsed()) {
    StringGuard text;
    if (const fekete_status st = fekete_constants_json(&text.ptr)) return fail(st);
    return emit_json({constants_out}, "constants", json::object(), 0, text.ptr);
  }

  if (cmd_bound->parsed()) {
    StringGuard text;
    json parameters;
    fekete_status st;
    if (bound_maximize) {
      parameters["maximize"] = true;
      st = fekete_bound_maximize_json(&text.ptr);
    } else {
      if (bound_eps_opt->count() == 0) {
        std::cerr << "error: bound requires --eps or --maximize\n";
        return 2;
      }
      parameters["eps"] = bound_eps;
      st = fekete_bound_json(bound_eps, &text.ptr);
    }
    if (st) return fail(st);
    return emit_json({bound_out}, "bound", parameters, 0, text.ptr);
  }

  if (cmd_verify->parsed()) {
    fekete_verify_options opts;
    fekete_verify_options_default(&opts);
    opts.samples = verify_samples;
    opts.seed = verify_seed;
    opts.inject_sign_flip = verify_flip ? 1 : 0;
    StringGuard text;
    int all_passed = 0;
    if (const fekete_status st = fekete_verify_json(&opts, &all_passed, &text.ptr)) {
      return fail(st);
    }
    json parameters;
    parameters["samples"] = verify_samples;
    parameters["inject_sign_flip"] = verify_flip;
    const int rc = emit_json({verify_out}, "verify", parameters, verify_seed, text.ptr);
    if (rc != 0) return rc;

    // Human-readable pass/fail table on stderr; stdout stays machine-readable.
    const json report = json::parse(text.ptr);
    for (const auto& row : report["checks"]) {
      std::fprintf(stderr, "%-32s %s\n", row["name"].get<std::string>().c_str(),
                   row["pass"].get<bool>() ? "pass" : "FAIL");
    }
    return all_passed ? 0 : 1;
  }

  if (cmd_minimize->parsed()) {
    fekete_minimize_options opts;
    fekete_minimize_options_default(&opts);
    opts.max_iters = min_iters;
    opts.grad_tol = min_grad_tol;
    opts.restarts = min_restarts;
    opts.seed = min_seed;
    opts.random_init = min_random_init ? 1 : 0;
    StringGuard text;
    ConfigGuard cfg;
    if (const fekete_status st = fekete_minimize(min_n, &opts, &cfg.ptr, &text.ptr)) {
      return fail(st);
    }
    if (!min_out.empty()) {
      if (const fekete_status st = fekete_config_save(cfg.ptr, min_out.c_str())) {
        return fail(st);
      }
      json parameters;
      parameters["n"] = min_n;
      parameters["restarts"] = min_restarts;
      write_sidecar_manifest(min_out, make_manifest("minimize", parameters, min_seed));
    }
    json parameters;
    parameters["n"] = min_n;
    parameters["restarts"] = min_restarts;
    parameters["max_iters"] = min_iters;
    parameters["random_init"] = min_random_init;
    if (!min_out.empty()) parameters["out"] = min_out;
    return emit_json({min_json_out}, "minimize", parameters, min_seed, text.ptr);
  }

  if (cmd_fit->parsed()) {
    fekete_minimize_options opts;
    fekete_minimize_options_default(&opts);
    opts.max_iters = fit_iters;
    opts.grad_tol = fit_grad_tol < 0.0 ? 1e-7 * fit_nmax : fit_grad_tol;
    opts.restarts = fit_restarts;
    opts.seed = fit_seed;
    StringGuard text;
    const char* dir = fit_dir.empty() ? nullptr : fit_dir.c_str();
    if (const fekete_status st =
            fekete_fit_clog(fit_nmin, fit_nmax, fit_step, &opts, dir, &text.ptr)) {
      return fail(st);
    }
    json parameters;
    parameters["nmin"] = fit_nmin;
    parameters["nmax"] = fit_nmax;
    parameters["step"] = fit_step;
    parameters["restarts"] = fit_restarts;
    parameters["max_iters"] = fit_iters;
    if (!fit_dir.empty()) parameters["out_dir"] = fit_dir;
    return emit_json({fit_out}, "fit", parameters, fit_seed, text.ptr);
  }

  if (cmd_plot->parsed()) {
    StringGuard text;
    if (const fekete_status st =
            fekete_plot_grid_csv(plot_lo, plot_hi, plot_steps, &text.ptr)) {
      return fail(st);
    }
    json parameters;
    parameters["lo"] = plot_lo;
    parameters["hi"] = plot_hi;
    parameters["steps"] = plot_steps;
    return emit_text({plot_out}, "plot-data", parameters, 0, text.ptr);
  }

  if (cmd_transport->parsed()) {
    ConfigGuard cfg;
    if (const fekete_status st = fekete_config_load(transport_config.c_str(), &cfg.ptr)) {
      return fail(st);
    }
    StringGuard text;
    int satisfied = 0;
    if (const fekete_status st = fekete_transport_json(cfg.ptr, transport_eps,
                                                       transport_samples, transport_seed,
                                                       &satisfied, &text.ptr)) {
      return fail(st);
    }
    json parameters;
    parameters["config"] = transport_config;
    parameters["eps"] = transport_eps;
    parameters["samples"] = transport_samples;
    const int rc =
        emit_json({transport_out}, "transport", parameters, transport_seed, text.ptr);
    if (rc != 0) return rc;
    return satisfied ? 0 : 1;
  }

  return 0;
}
