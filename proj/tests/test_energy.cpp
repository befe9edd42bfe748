#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bounds.hpp"
#include "energy.hpp"
#include "geometry.hpp"
#include "minimizer.hpp"
#include "rng.hpp"

using namespace fekete;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;

Configuration random_config(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<UnitVector> pts;
  for (int i = 0; i < n; ++i) pts.push_back(sample_uniform_sphere(rng));
  return Configuration(std::move(pts));
}

Configuration tetrahedron() {
  const double s = 1.0 / std::sqrt(3.0);
  return Configuration({UnitVector(s, s, s), UnitVector(s, -s, -s), UnitVector(-s, s, -s),
                        UnitVector(-s, -s, s)});
}

Vec3 rotate(const Vec3& p, const Vec3& axis_unit, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return c * p + s * cross(axis_unit, p) + (1.0 - c) * dot(axis_unit, p) * axis_unit;
}

}  // namespace

TEST_CASE("pair energy closed forms") {
  // Antipodal pair: |x1 - x2| = 2.
  const Configuration two({UnitVector(0, 0, 1), UnitVector(0, 0, -1)});
  CHECK(pair_energy(two) == doctest::Approx(-2.0 * kLog2).epsilon(1e-12));

  // Equilateral triangle on a great circle: side sqrt(3).
  std::vector<UnitVector> tri;
  for (int k = 0; k < 3; ++k) {
    tri.emplace_back(std::cos(2.0 * kPi * k / 3.0), std::sin(2.0 * kPi * k / 3.0), 0.0);
  }
  CHECK(pair_energy(Configuration(tri)) ==
        doctest::Approx(-3.0 * std::log(3.0)).epsilon(1e-12));

  // Regular tetrahedron: |x_i - x_j|^2 = 8/3.
  CHECK(pair_energy(tetrahedron()) ==
        doctest::Approx(-6.0 * std::log(8.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("pair energy rejects coincident points and single points") {
  CHECK_THROWS_AS(pair_energy(Configuration({UnitVector(1, 0, 0)})), std::invalid_argument);
  std::vector<Vec3> nearly = {{1, 0, 0}, {1, 1e-16, 0}};
  CHECK_THROWS_AS(pair_energy_raw(nearly), std::domain_error);
}

TEST_CASE("pair energy is rotation invariant") {
  Rng rng(41);
  const Configuration cfg = random_config(25, 43);
  const double base = pair_energy(cfg);
  for (int t = 0; t < 20; ++t) {
    const Vec3 axis = sample_uniform_sphere(rng).vec();
    const double angle = rng.uniform(0.0, 2.0 * kPi);
    std::vector<UnitVector> rotated;
    for (const auto& p : cfg.points()) rotated.emplace_back(rotate(p.vec(), axis, angle));
    REQUIRE(std::abs(pair_energy(Configuration(rotated)) - base) < 1e-10 * std::abs(base));
  }
}

TEST_CASE("gradient vanishes at symmetric critical points") {
  const Configuration two({UnitVector(0, 0, 1), UnitVector(0, 0, -1)});
  for (const Vec3& g : riemannian_gradient(two)) {
    CHECK(norm(g) < 1e-12);
  }
  for (const Vec3& g : riemannian_gradient(tetrahedron())) {
    CHECK(norm(g) < 1e-12);
  }
}

TEST_CASE("gradient matches tangent finite differences") {
  const double h = 1e-6;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(trial % 17);
    Configuration cfg = random_config(n, 1000 + trial);
    const std::vector<Vec3> grad = riemannian_gradient(cfg);
    std::vector<Vec3> pts;
    for (const auto& p : cfg.points()) pts.push_back(p.vec());

    Rng rng(2000 + trial);
    const std::size_t i = rng.next_u64() % pts.size();
    // Tangent frame at x_i.
    const Vec3 x = pts[i];
    Vec3 t1 = cross(x, std::abs(x.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0});
    t1 *= 1.0 / norm(t1);
    const Vec3 t2 = cross(x, t1);
    for (const Vec3& dir : {t1, t2}) {
      auto shifted = [&](double step) {
        std::vector<Vec3> moved = pts;
        Vec3 p = x + step * dir;
        p *= 1.0 / norm(p);
        moved[i] = p;
        return pair_energy_raw(moved);
      };
      const double fd = (shifted(h) - shifted(-h)) / (2.0 * h);
      const double an = dot(grad[i], dir);
      const double err = std::abs(fd - an) / std::max(1.0, std::abs(an));
      worst = std::max(worst, err);
    }
  }
  CHECK(worst < 1e-5);
}

TEST_CASE("continuous energy constant by three routes") {
  CHECK(continuous_energy() == doctest::Approx(0.5 - kLog2).epsilon(1e-15));
  CHECK(continuous_energy() == doctest::Approx(-0.1931472).epsilon(1e-6));

  const Vec3 north{0, 0, 1};
  const IntegralEstimate mc = integrate_sphere_mc(
      [&north](const Vec3& x) { return -std::log(norm(x - north)); }, 1000000, 51);
  CHECK(std::abs(mc.value - continuous_energy()) < 3.0 * mc.error);

  CHECK(cap_self_energy(kPi) == doctest::Approx(continuous_energy()).epsilon(1e-14));
}

TEST_CASE("cap self-energy special radii") {
  CHECK(cap_self_energy(kPi) == doctest::Approx(0.5 - kLog2).epsilon(1e-14));
  CHECK(std::abs(cap_self_energy(kPi / 2)) < 1e-14);
  CHECK_THROWS_AS(cap_self_energy(0.0), std::domain_error);
  CHECK_THROWS_AS(cap_self_energy(3.5), std::domain_error);
}

TEST_CASE("cap self-energy agrees with the quadrature oracle") {
  const UnitVector north(0, 0, 1);
  for (const double a : {0.1, 0.5, 1.0}) {
    const SphericalCap cap(north, a);
    const IntegralEstimate est =
        cap_pair_energy_quadrature(cap, cap, LogKernel::inverse, 1000000, 53);
    REQUIRE(std::abs(cap_self_energy(a) - est.value) < 3.0 * est.error);
  }
}

TEST_CASE("cap self-energy sign convention against the log-plain form") {
  // The negated value must reproduce the log|x-y|-convention expression
  // -kappa + ln sin(a/2) + cot^2(a/2)(1/2 + cot^2(a/2) ln cos(a/2)).
  const double kappa = 0.5 - kLog2;
  for (const double a : {0.05, 0.1, 0.5, 1.0, kPi / 2.0}) {
    const double half = 0.5 * a;
    const double cot2 = std::pow(std::cos(half) / std::sin(half), 2);
    const double printed = -kappa + std::log(std::sin(half)) +
                           cot2 * (0.5 + cot2 * std::log(std::cos(half)));
    REQUIRE(std::abs(-cap_self_energy(a) - printed) < 1e-12);
  }
}

TEST_CASE("cap self-energy small-radius expansion") {
  // S(a) + log a - 1/4 -> 0 like a^2/12; one Richardson step kills the
  // quadratic term.
  const auto f = [](double a) { return cap_self_energy(a) + std::log(a) - 0.25; };
  for (int k = 4; k <= 10; ++k) {
    const double a = std::pow(2.0, -k);
    const double richardson = (4.0 * f(0.5 * a) - f(a)) / 3.0;
    REQUIRE(std::abs(richardson) < 1e-3);
    REQUIRE(std::abs(f(a) - a * a / 12.0) < 1e-3 * a * a);
  }
  // Just above the series switch the closed form still matches the
  // series rendering of the same expression.
  const double a0 = 0.025;
  const double series =
      -std::log(a0) + 0.25 + a0 * a0 / 12.0 + a0 * a0 * a0 * a0 / 5760.0;
  CHECK(cap_self_energy(a0) == doctest::Approx(series).epsilon(1e-8));
  const double corr_series = a0 * a0 / 8.0 - std::pow(a0, 6) / 11520.0;
  CHECK(cap_cross_correction(a0) == doctest::Approx(corr_series).epsilon(1e-6));
}

TEST_CASE("cross correction expansion and special value") {
  CHECK(cap_cross_correction(kPi / 2) ==
        doctest::Approx(1.0 + 2.0 * std::log(std::cos(kPi / 4))).epsilon(1e-15));
  CHECK(cap_cross_correction(kPi / 2) == doctest::Approx(0.3068528).epsilon(1e-6));

  // correction(a)/(a^2/8) -> 1.
  for (int k = 4; k <= 10; ++k) {
    const double a = std::pow(2.0, -k);
    REQUIRE(cap_cross_correction(a) / (a * a / 8.0) == doctest::Approx(1.0).epsilon(1e-3));
  }
}

TEST_CASE("disjoint cross energy") {
  // Point-mass limit: correction vanishes, value -> G(d).
  const double d = 1.3;
  const double g = -std::log(2.0 * std::sin(0.5 * d));
  CHECK(cap_cross_energy_disjoint(d, 1e-9) == doctest::Approx(g).epsilon(1e-12));

  // Oracle check at d = 1, a = 0.1.
  const UnitVector north(0, 0, 1);
  const UnitVector other(std::sin(1.0), 0.0, std::cos(1.0));
  const IntegralEstimate est = cap_pair_energy_quadrature(
      SphericalCap(north, 0.1), SphericalCap(other, 0.1), LogKernel::inverse, 1000000, 59);
  CHECK(std::abs(cap_cross_energy_disjoint(1.0, 0.1) - est.value) < 3.0 * est.error);

  // Overlap refused.
  CHECK_THROWS_AS(cap_cross_energy_disjoint(0.15, 0.1), std::domain_error);
}

TEST_CASE("smeared energy of a single atom") {
  const Configuration one({UnitVector(0, 0, 1)});
  for (const double eps : {0.3, 1.0, 2.0}) {
    const SmearedMeasure m(one, eps);
    const ValueWithError imu = smeared_energy(m);
    REQUIRE(imu.value ==
            doctest::Approx(cap_self_energy(eps) - continuous_energy()).epsilon(1e-13));
    REQUIRE(imu.value >= 0.0);
  }
  // a -> pi: mu -> 0 and I(mu) -> 0.
  const SmearedMeasure wide(one, kPi * 0.9999);
  CHECK(smeared_energy(wide).value < 1e-4);
  CHECK_THROWS_AS(SmearedMeasure(one, kPi), std::domain_error);
}

TEST_CASE("smeared energy of the icosahedron at eps = 2") {
  std::vector<UnitVector> pts;
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  for (const double s1 : {1.0, -1.0}) {
    for (const double s2 : {1.0, -1.0}) {
      pts.emplace_back(0.0, s1, s2 * phi);
      pts.emplace_back(s1, s2 * phi, 0.0);
      pts.emplace_back(s1 * phi, 0.0, s2);
    }
  }
  const Configuration icosa(pts);
  OverlapQuadratureOptions opts;
  opts.samples = 100000;
  opts.seed = 61;
  const ValueWithError imu = smeared_energy(SmearedMeasure(icosa, 2.0), opts);
  CHECK(imu.value >= -3.0 * imu.error);  // I(mu) >= 0
  CHECK(imu.value < 10.0 / 12.0);        // of order 1/N
  // Consistent with the linear-term lower bound v(2)/N <= I(mu).
  CHECK(imu.value >= v(2.0) / 12.0 - 3.0 * imu.error);
}

TEST_CASE("decomposition is exact for disjoint caps") {
  // Spiral configurations with eps shrunk below half the minimal
  // separation: every cross term is closed form and slack must vanish.
  for (const int n : {12, 40}) {
    const Configuration cfg = init_spiral(n);
    double min_d = 10.0;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      for (std::size_t j = i + 1; j < cfg.size(); ++j) {
        min_d = std::min(min_d, geodesic_distance(cfg[i], cfg[j]));
      }
    }
    const double eps = 0.45 * min_d * std::sqrt(static_cast<double>(n));
    const EnergyBreakdown b = decomposition_lower_bound(cfg, eps);
    REQUIRE(std::abs(b.slack) < 1e-9 * std::max(1.0, std::abs(b.pair_sum)));
    REQUIRE(b.cross_error == 0.0);
    REQUIRE(b.kappa == doctest::Approx(continuous_energy()));
  }
}

TEST_CASE("decomposition slack is nonnegative with overlaps") {
  OverlapQuadratureOptions opts;
  opts.samples = 20000;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 6 + trial;
    const Configuration cfg = random_config(n, 70 + trial);
    opts.seed = 90 + trial;
    const EnergyBreakdown b = decomposition_lower_bound(cfg, 1.5, opts);
    REQUIRE(b.slack >= -3.0 * b.slack_error);
  }

  // Tetrahedron at eps = 0.5: disjoint, inequality holds with slack ~ 0.
  const EnergyBreakdown b = decomposition_lower_bound(tetrahedron(), 0.5);
  CHECK(b.slack >= -1e-9);
}

TEST_CASE("decomposition linear part tracks the expansion for a minimized config") {
  MinimizeOptions mo;
  mo.max_iters = 3000;
  mo.restarts = 2;
  mo.seed = 3;
  mo.grad_tol = 1e-8 * 100;
  const MinimizeResult res = minimize_n(100, mo);

  OverlapQuadratureOptions oq;
  oq.samples = 50000;
  oq.seed = 5;
  const EnergyBreakdown b = decomposition_lower_bound(res.config, 2.0, oq);
  const double nd = 100.0;
  const double predicted = continuous_energy() * nd * nd - 0.5 * nd * std::log(nd) +
                           (kLog2 - 0.75) * nd;
  CHECK(std::abs(b.rhs - predicted) / nd < 0.05);
  CHECK(b.slack >= -3.0 * b.slack_error);
}
