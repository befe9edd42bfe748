#include "wasserstein.hpp"

#include <cmath>
#include <stdexcept>

namespace fekete {

IntegralEstimate witness_integral(const Configuration& cfg, double eps, long long n_samples,
                                  std::uint64_t seed, int workers) {
  const SmearedMeasure m(cfg, eps);  // validates eps/sqrt(N) < pi
  const double a = m.cap_radius;
  return integrate_sphere_mc(
      [&cfg, a](const Vec3& x) {
        double best = 4.0;
        for (const auto& p : cfg.points()) {
          const double d = std::atan2(norm(cross(x, p.vec())), dot(x, p.vec()));
          if (d < best) best = d;
        }
        const double f = best - a;
        return f > 0.0 ? f : 0.0;
      },
      n_samples, seed, workers);
}

IntegralEstimate kantorovich_lower_bound(const Configuration& cfg, double eps,
                                         long long n_samples, std::uint64_t seed, int workers) {
  return witness_integral(cfg, eps, n_samples, seed, workers);
}

TransportCheck gz_inequality_check(const Configuration& cfg, double eps,
                                   const TransportOptions& opts) {
  OverlapQuadratureOptions overlap = opts.overlap;
  if (overlap.seed == 0) overlap.seed = opts.seed ^ 0x517CC1B727220A95ull;
  if (overlap.workers == 0) overlap.workers = opts.workers;

  const IntegralEstimate w1 =
      kantorovich_lower_bound(cfg, eps, opts.witness_samples, opts.seed, opts.workers);
  const ValueWithError imu = smeared_energy(SmearedMeasure(cfg, eps), overlap);

  TransportCheck check;
  check.witness = w1;
  check.w1_lower = w1.value;
  check.stderr_w1 = w1.error;
  check.two_i_mu = 2.0 * imu.value;
  check.two_i_mu_error = 2.0 * imu.error;
  const double lhs_error = 2.0 * std::abs(w1.value) * w1.error;
  const double budget =
      3.0 * std::sqrt(lhs_error * lhs_error + check.two_i_mu_error * check.two_i_mu_error);
  check.satisfied = w1.value * w1.value <= check.two_i_mu + budget;
  return check;
}

}  // namespace fekete
