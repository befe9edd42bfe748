#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace fekete {

// Closed-form constants of the linear-term bound. Cross-checked against
// adaptive quadrature and arithmetic identities on first access.
struct BoundConstants {
  double I_sigma;      // 1/2 - log 2
  double kappa;        // alias of I_sigma in the decomposition
  double C;            // sqrt(2*pi/sqrt(3)), rescaled half-side of the triangle
  double C1;           // int_0^{pi/6} sec^3 = (2 + 3 atanh(1/2))/6
  double C2;           // int_0^{pi/6} sec^2 = 1/sqrt(3)
  double eps_max;      // C/cos(pi/6): beyond it the triangle integrand vanishes
  double C_BHS;        // conjectured value of the linear-term constant
  double C_tilde;      // improved lower bound u(2) + v(2)
  double C_lauritsen;  // previous lower bound log 2 - 3/4
};

const BoundConstants& constants();

// u(eps) = -1/4 + log(eps) - eps^2/8, maximal at eps = 2.
double u(double eps);

// v(eps) = (9/(2*pi^2)) [C^3 C1/3 - C^2 C2 eps/2 + pi eps^3/36]^2 for
// 0 < eps < eps_max; clamped to 0 beyond (the triangle integrand is
// identically zero there), with `clamped` flagging the clamp.
struct VValue {
  double value = 0.0;
  bool clamped = false;
};
VValue v_eval(double eps);
double v(double eps);

double c_bhs();
double c_tilde();
double c_lauritsen();

// Lanczos gamma, self-tested against Gamma(1/3)Gamma(2/3) = 2*pi/sqrt(3).
double gamma_function(double x);

// argmax and max of u + v on (0.1, eps_max): golden-section search
// refined by bisection on the derivative.
std::pair<double, double> maximize_linear_coefficient();

enum class TothMode {
  small_angle,  // flat-metric closed form, proportional to n^{-3/2}
  exact,        // true spherical triangle, sin(r) area element
};

// Integral of max{d(x, {a,b,c}) - eps/sqrt(n), 0} over the equilateral
// triangle of area 2*pi/(n-2), against the normalized sphere measure.
// Exact mode splits the triangle into 3 Voronoi cells x 2 halves and
// integrates (1/2pi) sin(r) dr dtheta per half up to the bisector h_theta.
double toth_triangle_integral(int n, double eps, TothMode mode);

// (2n - 4) * toth_triangle_integral(n, eps, exact): the comparison side
// of the Fejes Toth inequality for Phi(s) = max{s - eps/sqrt(n), 0}.
double fejes_toth_rhs(int n, double eps);

struct GridRow {
  double eps;
  double u;
  double v;
  double total;
};

// Uniform grid with both endpoints included; steps >= 2 rows.
std::vector<GridRow> plot_grid(double eps_lo, double eps_hi, int steps);

// CSV contract: header "eps,u,v,total", %.17g fields, LF line endings.
std::string plot_grid_csv(double eps_lo, double eps_hi, int steps);

// Searches for a closed hemisphere containing every point by projected
// subgradient ascent on v -> min_i <v, x_i>. Returns the witness
// direction if one is found; disengages after a bounded iteration budget,
// so an empty result is strong evidence, not a proof, of non-containment.
std::optional<UnitVector> hemisphere_witness(const Configuration& cfg);

}  // namespace fekete
