#pragma once

#include <cstdint>

#include "energy.hpp"
#include "geometry.hpp"
#include "quadrature.hpp"

namespace fekete {

// Monte-Carlo mean over sigma of d(x, union of caps B(x_i, eps/sqrt(N))),
// the 1-Lipschitz witness for the transport lower bound.
IntegralEstimate witness_integral(const Configuration& cfg, double eps, long long n_samples,
                                  std::uint64_t seed, int workers = 0);

// The witness value certifies W1(smeared configuration measure, sigma)
// from below (Kantorovich-Rubinstein duality; the witness has Lipschitz
// constant 1 by construction).
IntegralEstimate kantorovich_lower_bound(const Configuration& cfg, double eps,
                                         long long n_samples, std::uint64_t seed,
                                         int workers = 0);

struct TransportCheck {
  double w1_lower = 0.0;
  double stderr_w1 = 0.0;
  double two_i_mu = 0.0;
  double two_i_mu_error = 0.0;
  bool satisfied = false;  // w1_lower^2 <= 2 I(mu) within 3x propagated error
  IntegralEstimate witness;
};

struct TransportOptions {
  long long witness_samples = 200000;
  OverlapQuadratureOptions overlap;
  std::uint64_t seed = 0;
  int workers = 0;
};

// Both sides of W1^2 <= 2 I(mu). The inequality is a theorem; a certified
// violation signals an implementation bug.
TransportCheck gz_inequality_check(const Configuration& cfg, double eps,
                                   const TransportOptions& opts = {});

}  // namespace fekete
