#include "verify.hpp"

#include <cmath>
#include <cstdio>

#include "bounds.hpp"
#include "energy.hpp"
#include "geometry.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

namespace fekete {

namespace {

constexpr double kPi = 3.14159265358979323846;

VerifyCheck make_check(std::string name, std::string method, double value, double reference,
                       double tolerance) {
  VerifyCheck c;
  c.name = std::move(name);
  c.method = std::move(method);
  c.value = value;
  c.reference = reference;
  c.tolerance = tolerance;
  c.pass = std::abs(value - reference) <= tolerance;
  return c;
}

}  // namespace

std::vector<VerifyCheck> run_verification(const VerifyOptions& opts) {
  std::vector<VerifyCheck> checks;
  const double flip = opts.inject_sign_flip ? -1.0 : 1.0;
  const BoundConstants& k = constants();
  const UnitVector north(0.0, 0.0, 1.0);

  // Potential of sigma is the constant I(sigma).
  {
    const IntegralEstimate est = integrate_sphere_mc(
        [&north](const Vec3& x) { return -std::log(norm(x - north.vec())); }, opts.samples,
        opts.seed ^ 0x01, opts.workers);
    checks.push_back(make_check("I_sigma_potential_mc", "mc", est.value, k.I_sigma,
                                3.0 * est.error));
  }

  // C1, C2 against adaptive quadrature.
  {
    const IntegralEstimate q1 = integrate_1d_adaptive(
        [](double t) { return 1.0 / std::pow(std::cos(t), 3); }, 0.0, kPi / 6.0, 1e-12);
    checks.push_back(make_check("C1_sec3_quadrature", "adaptive", q1.value, k.C1, 1e-10));
    const IntegralEstimate q2 = integrate_1d_adaptive(
        [](double t) { return 1.0 / std::pow(std::cos(t), 2); }, 0.0, kPi / 6.0, 1e-12);
    checks.push_back(make_check("C2_sec2_quadrature", "adaptive", q2.value, k.C2, 1e-10));
  }

  checks.push_back(make_check("eps_max_identity", "identity", k.eps_max,
                              std::sqrt(8.0 * kPi / (3.0 * std::sqrt(3.0))), 1e-12));
  checks.push_back(make_check("gamma_reflection", "identity",
                              gamma_function(1.0 / 3.0) * gamma_function(2.0 / 3.0),
                              2.0 * kPi / std::sqrt(3.0), 1e-11));
  checks.push_back(make_check("c_tilde_is_u2_plus_v2", "identity", k.C_tilde, u(2.0) + v(2.0),
                              1e-10));

  // Cap measure against the Monte-Carlo hit rate.
  {
    const double a = 0.3;
    const double p = cap_measure(a);
    Rng rng(opts.seed ^ 0x02);
    long long hits = 0;
    for (long long s = 0; s < opts.samples; ++s) {
      const UnitVector x = sample_uniform_sphere(rng);
      if (geodesic_distance(x, north) <= a) ++hits;
    }
    const double rate = static_cast<double>(hits) / static_cast<double>(opts.samples);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(opts.samples));
    checks.push_back(make_check("cap_measure_hit_rate", "mc", rate, p, 3.0 * sigma));
  }

  // Same-cap closed form against the quadrature oracle.
  for (const double a : {0.1, 0.5, 1.0, kPi / 2.0}) {
    const SphericalCap cap(north, a);
    const IntegralEstimate est = cap_pair_energy_quadrature(
        cap, cap, LogKernel::inverse, opts.samples, opts.seed ^ 0x03, opts.workers);
    char name[64];
    std::snprintf(name, sizeof(name), "cap_self_energy_a_%.2f", a);
    checks.push_back(
        make_check(name, "mc", flip * cap_self_energy(a), est.value, 3.0 * est.error));
  }

  // Whole-sphere cap must reproduce I(sigma) exactly.
  checks.push_back(make_check("cap_self_energy_whole_sphere", "identity",
                              flip * cap_self_energy(kPi), k.I_sigma, 1e-12));

  // Hemispheric cap under log|x-y| integrates to zero.
  {
    const SphericalCap cap(north, kPi / 2.0);
    const IntegralEstimate est = cap_pair_energy_quadrature(
        cap, cap, LogKernel::plain, opts.samples, opts.seed ^ 0x04, opts.workers);
    checks.push_back(make_check("cap_self_log_plain_hemisphere", "mc", est.value, 0.0,
                                3.0 * est.error));
  }

  // Disjoint-pair equality case.
  {
    const double d = 1.0, a = 0.1;
    const UnitVector other(std::sin(d), 0.0, std::cos(d));
    const SphericalCap ci(north, a);
    const SphericalCap cj(other, a);
    const IntegralEstimate est = cap_pair_energy_quadrature(
        ci, cj, LogKernel::inverse, opts.samples, opts.seed ^ 0x05, opts.workers);
    checks.push_back(make_check("cap_cross_disjoint_d1_a01", "mc",
                                cap_cross_energy_disjoint(d, a), est.value, 3.0 * est.error));
  }

  // Deterministic and stochastic sphere oracles agree on a smooth field.
  {
    const auto f = [](const Vec3& x) { return std::exp(x.z) * (1.0 + 0.5 * x.x * x.x); };
    const IntegralEstimate det = integrate_sphere_product(f, 64, 64);
    const IntegralEstimate mc =
        integrate_sphere_mc(f, opts.samples, opts.seed ^ 0x06, opts.workers);
    checks.push_back(make_check("product_vs_mc_smooth_field", "cross-oracle", det.value,
                                mc.value, 3.0 * mc.error + det.error));
  }

  return checks;
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace fekete
