#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "geometry.hpp"
#include "vec3.hpp"

namespace fekete {

// Result of a numerical integration. For Monte-Carlo estimates `error`
// is the standard error of the mean; for deterministic rules it is a
// refinement-difference bound.
struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;
  long long n = 0;  // samples or nodes
  std::string method;
};

// Monte-Carlo mean of f over the normalized surface measure. The sample
// budget is split across `workers` independently seeded substreams and
// merged in worker order, so results are reproducible for a fixed
// (seed, workers) pair. Non-finite integrand values abort.
IntegralEstimate integrate_sphere_mc(const std::function<double(const Vec3&)>& f,
                                     long long n_samples, std::uint64_t seed, int workers = 0);

// Deterministic companion: Gauss-Legendre in cos(theta) times the
// periodic trapezoid rule in azimuth, sigma-normalized. Error bound is
// the difference against the half-resolution rule.
IntegralEstimate integrate_sphere_product(const std::function<double(const Vec3&)>& f,
                                          int n_polar, int n_azimuth);

// Adaptive Simpson quadrature on [lo, hi] with |error| <= tol.
// Throws when the recursion depth limit is exceeded.
IntegralEstimate integrate_1d_adaptive(const std::function<double(double)>& f, double lo,
                                       double hi, double tol);

enum class LogKernel {
  inverse,  // log(1/|x-y|)
  plain,    // log|x-y|
};

// Monte-Carlo estimate of the double integral of the kernel under the
// two normalized cap-restricted measures. For identical caps this is the
// self-energy; sample pairs closer than 1e-15 are redrawn (the kernel is
// absolutely integrable, so the bias is below reporting precision).
IntegralEstimate cap_pair_energy_quadrature(const SphericalCap& cap_i,
                                            const SphericalCap& cap_j, LogKernel kernel,
                                            long long n_samples, std::uint64_t seed,
                                            int workers = 0);

// Neumaier-compensated accumulator for reproducible long sums.
class StableSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace fekete
