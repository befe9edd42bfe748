#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quadrature.hpp"

using namespace fekete;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kISigma = 0.5 - 0.69314718055994530942;

}  // namespace

TEST_CASE("sphere Monte-Carlo on constants and moments") {
  const IntegralEstimate one = integrate_sphere_mc([](const Vec3&) { return 1.0; }, 10000, 1);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.error == doctest::Approx(0.0).epsilon(1e-12));

  const IntegralEstimate zz =
      integrate_sphere_mc([](const Vec3& x) { return x.z * x.z; }, 1000000, 2);
  CHECK(std::abs(zz.value - 1.0 / 3.0) < 3.0 * zz.error);
  CHECK(zz.error > 0.0);
  CHECK(zz.method == "mc");
}

TEST_CASE("sphere Monte-Carlo reproduces the uniform-measure potential") {
  // Potential of the normalized surface measure at any point equals
  // 1/2 - log 2.
  const Vec3 north{0, 0, 1};
  const IntegralEstimate est = integrate_sphere_mc(
      [&north](const Vec3& x) { return -std::log(norm(x - north)); }, 2000000, 3);
  CHECK(std::abs(est.value - kISigma) < 3.0 * est.error);
}

TEST_CASE("sphere Monte-Carlo aborts on non-finite values") {
  CHECK_THROWS_AS(integrate_sphere_mc(
                      [](const Vec3& x) { return std::log(x.z - 2.0); }, 1000, 4),
                  std::runtime_error);
  CHECK_THROWS_AS(integrate_sphere_mc([](const Vec3&) { return 1.0; }, 1, 5),
                  std::invalid_argument);
}

TEST_CASE("sphere Monte-Carlo is reproducible and merge-stable") {
  const auto f = [](const Vec3& x) { return std::exp(x.x + 0.3 * x.y); };
  const IntegralEstimate a = integrate_sphere_mc(f, 200000, 42, 2);
  const IntegralEstimate b = integrate_sphere_mc(f, 200000, 42, 2);
  CHECK(a.value == b.value);  // bitwise, fixed seed and worker count
  CHECK(a.error == b.error);

  // Doubling the budget moves the estimate within combined error bars.
  const IntegralEstimate c = integrate_sphere_mc(f, 400000, 42, 2);
  CHECK(std::abs(a.value - c.value) <
        3.0 * std::sqrt(a.error * a.error + c.error * c.error));
}

TEST_CASE("product rule on exact integrands") {
  const IntegralEstimate one =
      integrate_sphere_product([](const Vec3&) { return 1.0; }, 16, 16);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));

  const IntegralEstimate zz =
      integrate_sphere_product([](const Vec3& x) { return x.z * x.z; }, 16, 16);
  CHECK(zz.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(zz.method == "product");

  CHECK_THROWS_AS(integrate_sphere_product([](const Vec3&) { return 1.0; }, 1, 8),
                  std::invalid_argument);
}

TEST_CASE("product rule agrees with the 1-D oracle on a smoothed cap indicator") {
  // s(z) = 1/(1 + exp(k (cos a - z))): smooth surrogate of the cap(e3, a)
  // indicator. Its sphere integral reduces to a 1-D integral in z.
  const double a = 0.7;
  const double k = 25.0;
  const double ca = std::cos(a);
  const auto profile = [ca, k](double z) { return 1.0 / (1.0 + std::exp(k * (ca - z))); };
  const IntegralEstimate sphere = integrate_sphere_product(
      [&profile](const Vec3& x) { return profile(x.z); }, 128, 8);
  const IntegralEstimate line =
      integrate_1d_adaptive([&profile](double z) { return 0.5 * profile(z); }, -1.0, 1.0,
                            1e-12);
  CHECK(std::abs(sphere.value - line.value) < sphere.error + 1e-10);
  // And the smoothed integral stays near the sharp cap measure.
  const double sharp = std::sin(0.5 * a) * std::sin(0.5 * a);
  CHECK(std::abs(sphere.value - sharp) < 0.05);
}

TEST_CASE("adaptive 1-D quadrature closed forms") {
  const IntegralEstimate c1 = integrate_1d_adaptive(
      [](double t) { return 1.0 / std::pow(std::cos(t), 3); }, 0.0, kPi / 6.0, 1e-12);
  const double c1_exact = (2.0 + 3.0 * std::atanh(0.5)) / 6.0;
  CHECK(std::abs(c1.value - c1_exact) < 1e-12);

  const IntegralEstimate c2 = integrate_1d_adaptive(
      [](double t) { return 1.0 / std::pow(std::cos(t), 2); }, 0.0, kPi / 6.0, 1e-12);
  CHECK(std::abs(c2.value - 1.0 / std::sqrt(3.0)) < 1e-12);

  const IntegralEstimate lin =
      integrate_1d_adaptive([](double x) { return x; }, 0.0, 1.0, 1e-12);
  CHECK(lin.value == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(integrate_1d_adaptive([](double x) { return x; }, 1.0, 0.0, 1e-12),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_1d_adaptive([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-12),
                  std::runtime_error);
}

TEST_CASE("cap pair quadrature endpoints") {
  const UnitVector north(0, 0, 1);

  // Whole sphere: self-energy is I(sigma).
  const SphericalCap whole(north, kPi);
  const IntegralEstimate full =
      cap_pair_energy_quadrature(whole, whole, LogKernel::inverse, 1000000, 6);
  CHECK(std::abs(full.value - kISigma) < 3.0 * full.error);

  // Hemisphere under log|x-y|: the closed form collapses to zero.
  const SphericalCap hemi(north, kPi / 2);
  const IntegralEstimate zero =
      cap_pair_energy_quadrature(hemi, hemi, LogKernel::plain, 1000000, 7);
  CHECK(std::abs(zero.value) < 3.0 * zero.error);

  // Disjoint caps, a = 0.1, centers 1 rad apart: exact value
  // log(1/(2 sin 1/2)) + 1 + 2 cot^2(0.05) ln cos(0.05).
  const double aa = 0.1;
  const UnitVector other(std::sin(1.0), 0.0, std::cos(1.0));
  const double cot = std::cos(0.05) / std::sin(0.05);
  const double expected =
      -std::log(2.0 * std::sin(0.5)) + 1.0 + 2.0 * cot * cot * std::log(std::cos(0.05));
  const IntegralEstimate cross = cap_pair_energy_quadrature(
      SphericalCap(north, aa), SphericalCap(other, aa), LogKernel::inverse, 1000000, 8);
  CHECK(std::abs(cross.value - expected) < 3.0 * cross.error);
}

TEST_CASE("cap self-energy quadrature is stable under sample doubling") {
  const UnitVector north(0, 0, 1);
  const SphericalCap cap(north, 0.4);
  const IntegralEstimate a =
      cap_pair_energy_quadrature(cap, cap, LogKernel::inverse, 300000, 9);
  const IntegralEstimate b =
      cap_pair_energy_quadrature(cap, cap, LogKernel::inverse, 600000, 10);
  CHECK(std::abs(a.value - b.value) < 3.0 * std::sqrt(a.error * a.error + b.error * b.error));
}

TEST_CASE("deterministic and stochastic oracles agree") {
  const auto f = [](const Vec3& x) { return std::cos(2.0 * x.z) + 0.2 * x.x * x.y; };
  const IntegralEstimate det = integrate_sphere_product(f, 48, 48);
  const IntegralEstimate mc = integrate_sphere_mc(f, 1000000, 11);
  CHECK(std::abs(det.value - mc.value) < 3.0 * mc.error + det.error);
}
