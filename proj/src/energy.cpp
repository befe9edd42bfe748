#include "energy.hpp"

#include <cmath>
#include <stdexcept>

namespace fekete {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;
constexpr double kISigma = 0.5 - kLog2;

double pair_energy_impl(const std::vector<Vec3>& pts) {
  StableSum acc;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = norm2(pts[i] - pts[j]);
      if (d2 < 1e-28) {
        throw std::domain_error("pair_energy: coincident points (energy diverges)");
      }
      acc.add(-0.5 * std::log(d2));
    }
  }
  return 2.0 * acc.value();
}

void gradient_impl(const std::vector<Vec3>& pts, std::vector<Vec3>& grad) {
  const std::size_t n = pts.size();
  grad.assign(n, Vec3{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec3 diff = pts[i] - pts[j];
      const double d2 = norm2(diff);
      if (d2 < 1e-28) {
        throw std::domain_error("riemannian_gradient: coincident points");
      }
      const Vec3 force = (-2.0 / d2) * diff;
      grad[i] += force;
      grad[j] -= force;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    grad[i] -= dot(grad[i], pts[i]) * pts[i];
  }
}

std::vector<Vec3> raw_points(const Configuration& cfg) {
  std::vector<Vec3> pts;
  pts.reserve(cfg.size());
  for (const auto& p : cfg.points()) pts.push_back(p.vec());
  return pts;
}

}  // namespace

double continuous_energy() { return kISigma; }

double pair_energy(const Configuration& cfg) {
  if (cfg.size() < 2) {
    throw std::invalid_argument("pair_energy: at least two points required");
  }
  return pair_energy_impl(raw_points(cfg));
}

double pair_energy_raw(const std::vector<Vec3>& pts) { return pair_energy_impl(pts); }

std::vector<Vec3> riemannian_gradient(const Configuration& cfg) {
  if (cfg.size() < 2) {
    throw std::invalid_argument("riemannian_gradient: at least two points required");
  }
  std::vector<Vec3> grad;
  gradient_impl(raw_points(cfg), grad);
  return grad;
}

void riemannian_gradient_raw(const std::vector<Vec3>& pts, std::vector<Vec3>& grad) {
  gradient_impl(pts, grad);
}

double cap_self_energy(double a) {
  if (!(a > 0.0) || a > kPi) {
    throw std::domain_error("cap_self_energy: radius must lie in (0, pi]");
  }
  if (a < 0.02) {
    // The closed form loses the 1/2 + cot^2(a/2) ln cos(a/2) bracket to
    // cancellation here; series of the same expression.
    const double a2 = a * a;
    return -std::log(a) + 0.25 + a2 / 12.0 + a2 * a2 / 5760.0;
  }
  const double half = 0.5 * a;
  const double cot = std::cos(half) / std::sin(half);
  const double cot2 = cot * cot;
  return kISigma - std::log(std::sin(half)) - cot2 * (0.5 + cot2 * std::log(std::cos(half)));
}

double cap_cross_correction(double a) {
  if (!(a > 0.0) || a > kPi) {
    throw std::domain_error("cap_cross_correction: radius must lie in (0, pi]");
  }
  if (a < 0.02) {
    const double a2 = a * a;
    return a2 / 8.0 - a2 * a2 * a2 / 11520.0;
  }
  const double half = 0.5 * a;
  const double cot = std::cos(half) / std::sin(half);
  return 1.0 + 2.0 * cot * cot * std::log(std::cos(half));
}

double cap_cross_energy_disjoint(double d, double a) {
  if (!(a > 0.0)) {
    throw std::domain_error("cap_cross_energy_disjoint: radius must be positive");
  }
  if (!(d > 2.0 * a)) {
    throw std::domain_error(
        "cap_cross_energy_disjoint: caps overlap (d <= 2a); use the quadrature oracle");
  }
  return -std::log(2.0 * std::sin(0.5 * d)) + cap_cross_correction(a);
}

SmearedMeasure::SmearedMeasure(Configuration cfg, double eps_in)
    : config(std::move(cfg)), eps(eps_in) {
  if (!(eps > 0.0)) {
    throw std::domain_error("SmearedMeasure: eps must be positive");
  }
  cap_radius = eps / std::sqrt(static_cast<double>(config.size()));
  if (!(cap_radius < kPi)) {
    throw std::domain_error("SmearedMeasure: cap radius eps/sqrt(N) must be below pi");
  }
}

ValueWithError smeared_energy(const SmearedMeasure& m, const OverlapQuadratureOptions& opts) {
  const std::size_t n = m.config.size();
  const double a = m.cap_radius;
  const double nd = static_cast<double>(n);

  StableSum cross;
  double var = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = geodesic_distance(m.config[i], m.config[j]);
      double mij;
      if (d > 2.0 * a) {
        mij = cap_cross_energy_disjoint(d, a);
      } else {
        const SphericalCap ci(m.config[i], a);
        const SphericalCap cj(m.config[j], a);
        const std::uint64_t pair_seed =
            opts.seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(i) * n + j + 1));
        const IntegralEstimate est = cap_pair_energy_quadrature(
            ci, cj, LogKernel::inverse, opts.samples, pair_seed, opts.workers);
        mij = est.value;
        var += 4.0 * est.error * est.error;  // the estimate enters twice (ij and ji)
      }
      cross.add(2.0 * mij);
    }
  }

  ValueWithError out;
  out.value = (nd * cap_self_energy(a) + cross.value()) / (nd * nd) - kISigma;
  out.error = std::sqrt(var) / (nd * nd);
  return out;
}

EnergyBreakdown decomposition_lower_bound(const Configuration& cfg, double eps,
                                          const OverlapQuadratureOptions& opts) {
  if (cfg.size() < 2) {
    throw std::invalid_argument("decomposition_lower_bound: at least two points required");
  }
  const SmearedMeasure m(cfg, eps);
  const double nd = static_cast<double>(cfg.size());
  const double a = m.cap_radius;

  EnergyBreakdown b;
  b.kappa = kISigma;
  b.pair_sum = pair_energy(cfg);
  b.self_terms = nd * cap_self_energy(a);

  const ValueWithError imu = smeared_energy(m, opts);
  b.smeared = imu.value;
  b.smeared_error = imu.error;
  // Recover sum_{i != j} M_ij from the smeared assembly.
  b.cross_terms = (imu.value + kISigma) * nd * nd - b.self_terms;
  b.cross_error = imu.error * nd * nd;

  b.rhs = nd * nd * kISigma + nd * nd * imu.value - b.self_terms -
          nd * (nd - 1.0) * cap_cross_correction(a);
  b.slack = b.pair_sum - b.rhs;
  b.slack_error = nd * nd * imu.error;
  return b;
}

}  // namespace fekete
