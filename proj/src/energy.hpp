#pragma once

#include <cstdint>
#include <vector>

#include "geometry.hpp"
#include "quadrature.hpp"
#include "vec3.hpp"

namespace fekete {

// Energy of the normalized surface measure under log(1/|x-y|):
// I(sigma) = 1/2 - log 2. Also the constant value of its potential.
double continuous_energy();

// Sum over ordered pairs of log(1/|x_i - x_j|); each unordered pair
// counts twice. Natural logarithm. Throws on coincident points.
double pair_energy(const Configuration& cfg);

// Same, on a raw point array assumed unit-length (minimizer hot path).
double pair_energy_raw(const std::vector<Vec3>& pts);

// Tangent-plane projection of the Euclidean gradient of pair_energy:
// for each i, project -2 sum_{j != i} (x_i - x_j)/|x_i - x_j|^2 onto the
// plane orthogonal to x_i.
std::vector<Vec3> riemannian_gradient(const Configuration& cfg);
void riemannian_gradient_raw(const std::vector<Vec3>& pts, std::vector<Vec3>& grad);

// Self-energy of the normalized cap measure under log(1/|x-y|):
//   kappa - ln sin(a/2) - cot^2(a/2)(1/2 + cot^2(a/2) ln cos(a/2)),
// kappa = 1/2 - log 2. Limits: a = pi gives I(sigma); a = pi/2 gives 0;
// small a behaves as -log a + 1/4 + a^2/12 (series used below 0.02,
// where the bracketed difference cancels catastrophically).
double cap_self_energy(double a);

// 1 + 2 cot^2(a/2) ln cos(a/2) = a^2/8 + O(a^4), the smearing correction
// added to the point-pair kernel for two caps of radius a.
double cap_cross_correction(double a);

// Exact mutual energy of two disjoint caps of radius a at center
// distance d: log(1/(2 sin(d/2))) + cap_cross_correction(a).
// Throws when d <= 2a; overlapping pairs go through the quadrature oracle.
double cap_cross_energy_disjoint(double d, double a);

// mu = (1/N) sum_i mu_i - sigma with mu_i uniform on B(x_i, eps/sqrt(N)).
struct SmearedMeasure {
  SmearedMeasure(Configuration config, double eps);

  Configuration config;
  double eps;
  double cap_radius;  // eps/sqrt(N), < pi
};

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;
};

// Monte-Carlo budget for overlapping cap pairs.
struct OverlapQuadratureOptions {
  long long samples = 200000;
  std::uint64_t seed = 0;
  int workers = 0;  // 0: default_workers()
};

// I(mu) = (1/N^2)[sum_i S_i + sum_{i != j} M_ij] - I(sigma), using the
// constancy of the sigma-potential for the cross terms against sigma.
// M_ij is closed-form for disjoint pairs, Monte-Carlo otherwise; the MC
// error propagates into `error`.
ValueWithError smeared_energy(const SmearedMeasure& m, const OverlapQuadratureOptions& opts = {});

// Pieces of the lower bound
//   E(cfg) >= N^2 I(sigma) + N^2 I(mu) - N S(a) - N(N-1) c(a),
// which holds with equality when all caps are pairwise disjoint.
struct EnergyBreakdown {
  double pair_sum = 0.0;     // E(cfg)
  double self_terms = 0.0;   // N * cap_self_energy(a)
  double cross_terms = 0.0;  // sum_{i != j} M_ij
  double smeared = 0.0;      // I(mu)
  double kappa = 0.0;        // I(sigma)
  double rhs = 0.0;
  double slack = 0.0;        // pair_sum - rhs, >= 0 up to quadrature error
  double cross_error = 0.0;
  double smeared_error = 0.0;
  double slack_error = 0.0;
};

EnergyBreakdown decomposition_lower_bound(const Configuration& cfg, double eps,
                                          const OverlapQuadratureOptions& opts = {});

}  // namespace fekete
