#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "energy.hpp"
#include "minimizer.hpp"
#include "pointset_io.hpp"
#include "rng.hpp"

using namespace fekete;

namespace {

constexpr double kLog2 = 0.69314718055994530942;

double icosahedron_energy() {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  const double s = phi + 2.0;  // squared vertex norm
  return -(30.0 * std::log(4.0 / s) + 30.0 * std::log((4.0 * phi + 4.0) / s) +
           6.0 * std::log(4.0));
}

}  // namespace

TEST_CASE("spiral start") {
  const Configuration two = init_spiral(2);
  CHECK(geodesic_distance(two[0], two[1]) > 2.2);  // near-antipodal
  CHECK_THROWS_AS(init_spiral(1), std::invalid_argument);

  // Minimal separation scales like c/sqrt(n) with c > 1.
  for (const int n : {10, 100, 1000, 10000}) {
    const Configuration cfg = init_spiral(n);
    double min_d = 10.0;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      for (std::size_t j = i + 1; j < cfg.size(); ++j) {
        min_d = std::min(min_d, geodesic_distance(cfg[i], cfg[j]));
      }
    }
    REQUIRE(min_d * std::sqrt(static_cast<double>(n)) > 1.0);
  }

  // Better than the best of five random configurations.
  const double spiral_energy = pair_energy(init_spiral(100));
  double best_random = 1e300;
  for (int r = 0; r < 5; ++r) {
    best_random = std::min(best_random, pair_energy(random_configuration(100, 500 + r)));
  }
  CHECK(spiral_energy < best_random);
}

TEST_CASE("minimize reaches the known optima") {
  MinimizeOptions opts;
  opts.seed = 1;

  opts.restarts = 1;
  const MinimizeResult two = minimize_n(2, opts);
  CHECK(std::abs(two.energy - (-2.0 * kLog2)) < 1e-9);

  const MinimizeResult three = minimize_n(3, opts);
  CHECK(std::abs(three.energy - (-3.0 * std::log(3.0))) < 1e-9);

  opts.restarts = 5;
  const MinimizeResult four = minimize_n(4, opts);
  CHECK(std::abs(four.energy - (-6.0 * std::log(8.0 / 3.0))) < 1e-9);
}

TEST_CASE("minimize finds the icosahedron at N = 12") {
  MinimizeOptions opts;
  opts.restarts = 10;
  opts.seed = 2024;
  const MinimizeResult res = minimize_n(12, opts);
  CHECK(std::abs(res.energy - icosahedron_energy()) < 1e-7);
}

TEST_CASE("minimize respects an attainable gradient tolerance") {
  MinimizeOptions opts;
  opts.grad_tol = 1e-6;
  opts.seed = 5;
  const MinimizeResult res = minimize_n(20, opts);
  CHECK(res.converged);
  CHECK(res.grad_norm <= 1e-6);
  // Returned points are exactly unit length after retraction.
  for (const auto& p : res.config.points()) {
    REQUIRE(std::abs(norm2(p.vec()) - 1.0) < 1e-12);
  }
}

TEST_CASE("minimize is deterministic for fixed seed and options") {
  MinimizeOptions opts;
  opts.restarts = 4;
  opts.seed = 77;
  opts.max_iters = 2000;
  const MinimizeResult a = minimize_n(30, opts);
  const MinimizeResult b = minimize_n(30, opts);
  CHECK(a.energy == b.energy);  // bitwise
  CHECK(a.iters == b.iters);
  CHECK(format_pointset(a.config) == format_pointset(b.config));
}

TEST_CASE("minimized configurations satisfy the decomposition bound") {
  MinimizeOptions opts;
  opts.seed = 6;
  opts.max_iters = 5000;
  const MinimizeResult res = minimize_n(30, opts);
  OverlapQuadratureOptions oq;
  oq.samples = 40000;
  oq.seed = 8;
  const EnergyBreakdown b = decomposition_lower_bound(res.config, 2.0, oq);
  CHECK(b.slack >= -3.0 * b.slack_error);
}

TEST_CASE("energy curve endpoints and sanity bounds") {
  MinimizeOptions opts;
  opts.seed = 7;
  opts.restarts = 3;
  const std::vector<CurvePoint> curve = energy_curve({2, 3, 4}, opts);
  CHECK(std::abs(curve[0].energy - (-2.0 * kLog2)) < 1e-9);
  CHECK(std::abs(curve[1].energy - (-3.0 * std::log(3.0))) < 1e-9);
  CHECK(std::abs(curve[2].energy - (-6.0 * std::log(8.0 / 3.0))) < 1e-9);

  // Minimized energies sit below I(sigma) N(N-1): the normalized maximal
  // product decreases to 2/sqrt(e), so the true minimum lies below that
  // line, and the minimizer must get at least there.
  MinimizeOptions larger;
  larger.seed = 9;
  larger.grad_tol = 1e-6 * 60;
  for (const auto& point : energy_curve({30, 60}, larger)) {
    const double nd = static_cast<double>(point.n);
    REQUIRE(point.energy <= continuous_energy() * nd * (nd - 1.0));
  }
}

TEST_CASE("fit recovers synthetic coefficients") {
  // Exact model data: recovery to machine precision.
  std::vector<CurvePoint> exact;
  const double c = -0.0556, d = 0.2;
  for (int n = 50; n <= 500; n += 50) {
    const double nd = n;
    const double y = c + d / std::sqrt(nd);
    const double energy = y * nd + continuous_energy() * nd * nd - 0.5 * nd * std::log(nd);
    exact.push_back({n, energy});
  }
  const FitResult clean = fit_clog(exact);
  CHECK(std::abs(clean.c_log_hat - c) < 1e-12);
  CHECK(std::abs(clean.correction_coeff - d) < 1e-10);
  CHECK(clean.residual_rms < 1e-12);
  CHECK(clean.n_values.size() == 10);
  CHECK(clean.n_values.front() == 50);

  // Mild multiplicative noise on the reduced values.
  Rng rng(123);
  std::vector<CurvePoint> noisy;
  for (int n = 50; n <= 500; n += 50) {
    const double nd = n;
    const double y = (c + d / std::sqrt(nd)) * (1.0 + 1e-3 * (2.0 * rng.uniform() - 1.0));
    noisy.push_back({n, y * nd + continuous_energy() * nd * nd - 0.5 * nd * std::log(nd)});
  }
  const FitResult rough = fit_clog(noisy);
  CHECK(std::abs(rough.c_log_hat - c) < 5e-3);
}

TEST_CASE("fit input validation") {
  CHECK_THROWS_AS(fit_clog({{10, -1.0}, {20, -2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_clog({{10, -1.0}, {10, -1.0}, {20, -2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_clog({{10, -1.0}, {20, std::nan("")}, {30, -2.0}}),
                  std::invalid_argument);
}
