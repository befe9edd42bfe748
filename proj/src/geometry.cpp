#include "geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fekete {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

UnitVector::UnitVector(double x, double y, double z) : v_{x, y, z} {
  const double n2 = norm2(v_);
  if (!std::isfinite(n2) || n2 <= 0.0) {
    throw std::invalid_argument("UnitVector: coordinates must be finite and nonzero");
  }
  const double inv = 1.0 / std::sqrt(n2);
  v_ *= inv;
}

Configuration::Configuration(std::vector<UnitVector> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw std::invalid_argument("Configuration: at least one point required");
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    for (std::size_t j = i + 1; j < points_.size(); ++j) {
      if (chordal_distance(points_[i], points_[j]) < 1e-14) {
        throw std::invalid_argument("Configuration: coincident points at indices " +
                                    std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
}

SphericalCap::SphericalCap(const UnitVector& center, double radius)
    : center_(center), radius_(radius) {
  if (!(radius > 0.0) || radius > kPi) {
    throw std::domain_error("SphericalCap: radius must lie in (0, pi]");
  }
}

double geodesic_distance(const UnitVector& u, const UnitVector& v) {
  return std::atan2(norm(cross(u.vec(), v.vec())), dot(u.vec(), v.vec()));
}

double chordal_distance(const UnitVector& u, const UnitVector& v) {
  return norm(u.vec() - v.vec());
}

double cap_measure(double a) {
  if (!(a > 0.0) || a > kPi) {
    throw std::domain_error("cap_measure: radius must lie in (0, pi]");
  }
  const double s = std::sin(0.5 * a);
  return s * s;
}

double distance_to_set(const UnitVector& x, const Configuration& cfg) {
  double best = kPi;
  for (const auto& p : cfg.points()) {
    const double d = geodesic_distance(x, p);
    if (d < best) best = d;
  }
  return best;
}

double distance_to_caps(const UnitVector& x, const Configuration& cfg, double a) {
  if (!(a > 0.0)) {
    throw std::domain_error("distance_to_caps: cap radius must be positive");
  }
  const double d = distance_to_set(x, cfg) - a;
  return d > 0.0 ? d : 0.0;
}

namespace {

// sqrt(tan(3a/4) tan^3(a/4)), the L'Huilier side function; increasing on
// (0, 2*pi/3) and unbounded at the right end.
double lhuilier_side_value(double alpha) {
  return std::sqrt(std::tan(0.75 * alpha)) * std::pow(std::tan(0.25 * alpha), 1.5);
}

}  // namespace

SphericalTriangle triangle_for(int n) {
  if (n < 3) {
    throw std::domain_error("triangle_for: n must be at least 3");
  }
  SphericalTriangle t;
  t.n = n;
  t.area = 2.0 * kPi / (n - 2);
  t.interior_angle = (t.area + kPi) / 3.0;
  if (n == 3) {
    // Area 2*pi: three points on a great circle, each side a 120-degree
    // arc; L'Huilier degenerates (both sides infinite).
    t.side = 2.0 * kPi / 3.0;
    t.degenerate = true;
    return t;
  }

  const double target = std::tan(0.25 * t.area);
  double lo = 1e-12;
  double hi = 2.0 * kPi / 3.0 - 1e-12;
  if (lhuilier_side_value(lo) > target || lhuilier_side_value(hi) < target) {
    throw std::runtime_error("triangle_for: root not bracketed");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (lhuilier_side_value(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-15 * hi) break;
  }
  double alpha = 0.5 * (lo + hi);
  // Newton polish: d/da log(side value) = (3/4)(1/sin(3a/2) + 1/sin(a/2)).
  for (int it = 0; it < 4; ++it) {
    const double f = lhuilier_side_value(alpha);
    const double fp = f * 0.75 * (1.0 / std::sin(1.5 * alpha) + 1.0 / std::sin(0.5 * alpha));
    const double step = (f - target) / fp;
    const double next = alpha - step;
    if (next > lo && next < hi) alpha = next;
  }
  t.side = alpha;
  return t;
}

double voronoi_boundary_h(double theta, double alpha) {
  if (!(theta >= 0.0) || theta >= 0.5 * kPi) {
    throw std::domain_error("voronoi_boundary_h: theta must lie in [0, pi/2)");
  }
  if (!(alpha > 0.0) || alpha >= kPi) {
    throw std::domain_error("voronoi_boundary_h: alpha must lie in (0, pi)");
  }
  return std::atan(std::tan(0.5 * alpha) / std::cos(theta));
}

UnitVector sample_uniform_sphere(Rng& rng) {
  const double z = rng.uniform(-1.0, 1.0);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVector(r * std::cos(phi), r * std::sin(phi), z);
}

UnitVector sample_uniform_cap(const SphericalCap& cap, Rng& rng) {
  const double z = rng.uniform(std::cos(cap.radius()), 1.0);
  const double phi = rng.uniform(0.0, 2.0 * kPi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));

  // Orthonormal frame (t1, t2, c) at the cap center; the axis choice is
  // deterministic so samples are reproducible.
  const Vec3 c = cap.center().vec();
  const double ax = std::fabs(c.x), ay = std::fabs(c.y), az = std::fabs(c.z);
  Vec3 seed_axis{1.0, 0.0, 0.0};
  if (ay <= ax && ay <= az) {
    seed_axis = {0.0, 1.0, 0.0};
  } else if (az <= ax && az <= ay) {
    seed_axis = {0.0, 0.0, 1.0};
  }
  Vec3 t1 = cross(c, seed_axis);
  t1 *= 1.0 / norm(t1);
  const Vec3 t2 = cross(c, t1);

  const Vec3 p = z * c + (r * std::cos(phi)) * t1 + (r * std::sin(phi)) * t2;
  return UnitVector(p);
}

}  // namespace fekete
