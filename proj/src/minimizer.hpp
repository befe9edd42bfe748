#pragma once

#include <cstdint>
#include <vector>

#include "geometry.hpp"

namespace fekete {

struct MinimizeOptions {
  int max_iters = 50000;
  double grad_tol = 0.0;  // 0: auto, 1e-10 * N (gradient norms scale with N)
  int restarts = 1;       // restart 0 is the given start, the rest random
  std::uint64_t seed = 0;
  enum class Init { spiral, random } init = Init::spiral;
};

// Golden-angle spiral: heights evenly spaced in (-1, 1), azimuth
// advancing by pi(3 - sqrt(5)). Deterministic low-energy warm start.
Configuration init_spiral(int n);

Configuration random_configuration(int n, std::uint64_t seed);

struct MinimizeResult {
  Configuration config;
  double energy = 0.0;
  int iters = 0;
  double grad_norm = 0.0;
  bool converged = false;   // grad_norm <= grad_tol reached
  bool stagnated = false;   // line search failed after 60 halvings
  int best_restart = 0;
};

// Projected Riemannian gradient descent with Armijo backtracking
// (constant 1e-4, halving) and renormalization retraction. Energy is
// non-increasing along accepted steps. Restarts beyond the first use
// random starts seeded from opts.seed and run in parallel; the best
// energy wins, ties broken by restart index.
MinimizeResult minimize(const Configuration& start, const MinimizeOptions& opts);

// Convenience entry: builds the start from opts.init.
MinimizeResult minimize_n(int n, const MinimizeOptions& opts);

struct CurvePoint {
  int n = 0;
  double energy = 0.0;
};

// Best minimized energy per N. Every value is checked against the exact
// decomposition lower bound at eps = 2 (a theorem; violation means an
// implementation bug and throws).
std::vector<CurvePoint> energy_curve(const std::vector<int>& n_values,
                                     const MinimizeOptions& opts);

struct FitResult {
  double c_log_hat = 0.0;
  double correction_coeff = 0.0;
  double residual_rms = 0.0;
  std::vector<int> n_values;
};

// Least squares on y_N = (E_N + (log2 - 1/2) N^2 + N log(N)/2)/N with
// model y = c + d/sqrt(N); c estimates the linear-term constant.
FitResult fit_clog(const std::vector<CurvePoint>& curve);

}  // namespace fekete
