#include "bounds.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>

#include "quadrature.hpp"

namespace fekete {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;

double gamma_positive(double x) {
  // Lanczos approximation, g = 7, 9 coefficients.
  static const double coef[9] = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  double a = coef[0];
  const double t = x + 6.5;
  for (int i = 1; i < 9; ++i) {
    a += coef[i] / (x + i - 1.0);
  }
  return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

BoundConstants compute_constants() {
  BoundConstants c;
  c.I_sigma = 0.5 - kLog2;
  c.kappa = c.I_sigma;
  c.C = std::sqrt(2.0 * kPi / std::sqrt(3.0));
  c.C1 = (2.0 + 3.0 * std::atanh(0.5)) / 6.0;
  c.C2 = 1.0 / std::sqrt(3.0);
  c.eps_max = c.C / std::cos(kPi / 6.0);
  c.C_BHS = 2.0 * kLog2 + 0.5 * std::log(2.0 / 3.0) +
            3.0 * std::log(std::sqrt(kPi) / gamma_function(1.0 / 3.0));
  c.C_lauritsen = kLog2 - 0.75;
  const double w =
      std::pow(3.0, 0.25) * std::sqrt(2.0 * kPi) * (2.0 + 3.0 * std::atanh(0.5)) - 12.0;
  c.C_tilde = c.C_lauritsen + w * w / 162.0;
  return c;
}

void self_check(const BoundConstants& c) {
  const auto sec3 = [](double t) { return 1.0 / std::pow(std::cos(t), 3); };
  const auto sec2 = [](double t) { return 1.0 / std::pow(std::cos(t), 2); };
  const double q1 = integrate_1d_adaptive(sec3, 0.0, kPi / 6.0, 1e-13).value;
  const double q2 = integrate_1d_adaptive(sec2, 0.0, kPi / 6.0, 1e-13).value;
  if (std::abs(q1 - c.C1) > 1e-10 || std::abs(q2 - c.C2) > 1e-10) {
    throw std::logic_error("constants: C1/C2 closed forms disagree with quadrature");
  }
  if (std::abs(c.eps_max - std::sqrt(8.0 * kPi / (3.0 * std::sqrt(3.0)))) > 1e-12) {
    throw std::logic_error("constants: eps_max identity failed");
  }
  const double refl = gamma_function(1.0 / 3.0) * gamma_function(2.0 / 3.0);
  if (std::abs(refl - 2.0 * kPi / std::sqrt(3.0)) > 1e-11) {
    throw std::logic_error("constants: gamma reflection identity failed");
  }
}

// Bracketed quantity in v(eps); its derivative vanishes at eps = 2
// because C^2 C2 = 2*pi/3 exactly.
double v_bracket(double eps) {
  const BoundConstants& c = constants();
  return c.C * c.C * c.C * c.C1 / 3.0 - c.C * c.C * c.C2 * eps / 2.0 +
         kPi * eps * eps * eps / 36.0;
}

// int_a~^h (r - a~) sin r dr, written without cancellation:
// 2 cos(m) (sin(x) - x cos(x)) + delta sin(m) sin(x) for delta = h - a~,
// m = (h + a~)/2, x = delta/2. Both terms are nonnegative.
double radial_integral(double h, double atilde) {
  if (h <= atilde) return 0.0;
  const double delta = h - atilde;
  const double m = 0.5 * (h + atilde);
  const double x = 0.5 * delta;
  double g;  // sin(x) - x cos(x)
  if (x < 1e-4) {
    const double x3 = x * x * x;
    g = x3 / 3.0 - x3 * x * x / 30.0;
  } else {
    g = std::sin(x) - x * std::cos(x);
  }
  return 2.0 * std::cos(m) * g + delta * std::sin(m) * std::sin(x);
}

}  // namespace

const BoundConstants& constants() {
  static const BoundConstants c = [] {
    BoundConstants built = compute_constants();
    self_check(built);
    return built;
  }();
  return c;
}

double u(double eps) {
  if (!(eps > 0.0)) {
    throw std::domain_error("u: eps must be positive");
  }
  return -0.25 + std::log(eps) - eps * eps / 8.0;
}

VValue v_eval(double eps) {
  if (!(eps > 0.0)) {
    throw std::domain_error("v: eps must be positive");
  }
  VValue out;
  if (eps >= constants().eps_max) {
    out.value = 0.0;
    out.clamped = true;
    return out;
  }
  const double b = v_bracket(eps);
  out.value = 9.0 / (2.0 * kPi * kPi) * b * b;
  return out;
}

double v(double eps) { return v_eval(eps).value; }

double c_bhs() { return constants().C_BHS; }
double c_tilde() { return constants().C_tilde; }
double c_lauritsen() { return constants().C_lauritsen; }

double gamma_function(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("gamma_function: positive argument required");
  }
  if (x < 0.5) {
    return kPi / (std::sin(kPi * x) * gamma_positive(1.0 - x));
  }
  return gamma_positive(x);
}

std::pair<double, double> maximize_linear_coefficient() {
  const auto total = [](double eps) { return u(eps) + v(eps); };
  double lo = 0.1;
  double hi = constants().eps_max - 1e-9;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = total(x1);
  double f2 = total(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = total(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = total(x1);
    }
  }
  // Bisection on the analytic derivative around the golden-section result.
  const auto deriv = [](double eps) {
    const BoundConstants& c = constants();
    const double db = -c.C * c.C * c.C2 / 2.0 + kPi * eps * eps / 12.0;
    return 1.0 / eps - eps / 4.0 + 9.0 / (kPi * kPi) * v_bracket(eps) * db;
  };
  double a = std::max(0.1, 0.5 * (lo + hi) - 1e-3);
  double b = std::min(constants().eps_max - 1e-9, 0.5 * (lo + hi) + 1e-3);
  if (deriv(a) > 0.0 && deriv(b) < 0.0) {
    for (int it = 0; it < 100; ++it) {
      const double m = 0.5 * (a + b);
      if (deriv(m) > 0.0) {
        a = m;
      } else {
        b = m;
      }
    }
  }
  const double star = 0.5 * (a + b);
  return {star, total(star)};
}

double toth_triangle_integral(int n, double eps, TothMode mode) {
  if (n < 4) {
    throw std::domain_error("toth_triangle_integral: n must be at least 4");
  }
  if (!(eps >= 0.0)) {
    throw std::domain_error("toth_triangle_integral: eps must be nonnegative");
  }
  const double sqrt_n = std::sqrt(static_cast<double>(n));

  if (mode == TothMode::small_angle) {
    if (eps >= constants().eps_max) return 0.0;
    return 3.0 / (2.0 * kPi * sqrt_n * sqrt_n * sqrt_n) * v_bracket(eps);
  }

  const SphericalTriangle tri = triangle_for(n);
  const double atilde = eps / sqrt_n;
  const double half_angle = 0.5 * tri.interior_angle;
  const double h_max = voronoi_boundary_h(half_angle, tri.side);
  if (atilde >= h_max) return 0.0;

  // Radial ranges are empty below theta* where h_theta = a~.
  double theta_lo = 0.0;
  const double half_side = 0.5 * tri.side;
  if (atilde > half_side) {
    theta_lo = std::acos(std::tan(half_side) / std::tan(atilde));
  }
  const auto integrand = [&](double theta) {
    return radial_integral(voronoi_boundary_h(theta, tri.side), atilde);
  };
  const double theta_part =
      integrate_1d_adaptive(integrand, theta_lo, half_angle, 1e-14).value;
  return 3.0 / (2.0 * kPi) * theta_part;
}

double fejes_toth_rhs(int n, double eps) {
  if (n < 4) {
    throw std::domain_error("fejes_toth_rhs: n must be at least 4");
  }
  return (2.0 * n - 4.0) * toth_triangle_integral(n, eps, TothMode::exact);
}

std::vector<GridRow> plot_grid(double eps_lo, double eps_hi, int steps) {
  if (!(eps_lo > 0.0) || !(eps_lo < eps_hi)) {
    throw std::domain_error("plot_grid: require 0 < eps_lo < eps_hi");
  }
  if (steps < 2) {
    throw std::invalid_argument("plot_grid: at least 2 rows required");
  }
  std::vector<GridRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double eps = eps_lo + (eps_hi - eps_lo) * i / (steps - 1);
    GridRow row;
    row.eps = eps;
    row.u = u(eps);
    row.v = v(eps);
    row.total = row.u + row.v;
    rows.push_back(row);
  }
  return rows;
}

std::string plot_grid_csv(double eps_lo, double eps_hi, int steps) {
  const std::vector<GridRow> rows = plot_grid(eps_lo, eps_hi, steps);
  std::string out = "eps,u,v,total\n";
  char buf[160];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", r.eps, r.u, r.v, r.total);
    out += buf;
  }
  return out;
}

std::optional<UnitVector> hemisphere_witness(const Configuration& cfg) {
  const auto worst = [&cfg](const Vec3& v) {
    double best = 2.0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < cfg.size(); ++i) {
      const double d = dot(v, cfg[i].vec());
      if (d < best) {
        best = d;
        arg = i;
      }
    }
    return std::pair<double, std::size_t>(best, arg);
  };

  Vec3 mean{};
  for (const auto& p : cfg.points()) mean += p.vec();
  std::vector<Vec3> starts = {{0, 0, 1}, {0, 0, -1}, {1, 0, 0},
                              {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  if (norm(mean) > 1e-12) starts.insert(starts.begin(), (1.0 / norm(mean)) * mean);

  for (const auto& start : starts) {
    Vec3 v = start;
    for (int it = 0; it < 2000; ++it) {
      const auto [value, arg] = worst(v);
      if (value >= -1e-10) {
        return UnitVector(v);
      }
      const double step = 1.0 / std::sqrt(9.0 + it);
      v += step * cfg[arg].vec();
      const double nv = norm(v);
      if (nv < 1e-12) break;
      v *= 1.0 / nv;
    }
    const auto [value, arg] = worst(v);
    (void)arg;
    if (value >= -1e-10) {
      return UnitVector(v);
    }
  }
  return std::nullopt;
}

}  // namespace fekete
