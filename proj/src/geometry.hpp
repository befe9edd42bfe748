#pragma once

#include <cstddef>
#include <vector>

#include "rng.hpp"
#include "vec3.hpp"

namespace fekete {

// A point on the unit sphere. Input coordinates are renormalized on
// construction; a zero or non-finite vector is rejected.
class UnitVector {
 public:
  UnitVector(double x, double y, double z);
  explicit UnitVector(const Vec3& v) : UnitVector(v.x, v.y, v.z) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

 private:
  Vec3 v_;
};

// An ordered list of distinct sphere points. A single point is allowed
// (smeared single-atom measures use it); pair energies require two.
class Configuration {
 public:
  explicit Configuration(std::vector<UnitVector> points);

  std::size_t size() const { return points_.size(); }
  const UnitVector& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<UnitVector>& points() const { return points_; }

 private:
  std::vector<UnitVector> points_;
};

// Geodesic ball B(center, radius), radius in radians, 0 < radius <= pi.
class SphericalCap {
 public:
  SphericalCap(const UnitVector& center, double radius);

  const UnitVector& center() const { return center_; }
  double radius() const { return radius_; }

 private:
  UnitVector center_;
  double radius_;
};

// Equilateral spherical triangle of area 2*pi/(n-2), the comparison
// region in the Fejes Toth bound. Side length solves L'Huilier's
// relation tan(pi/(2(n-2))) = sqrt(tan(3a/4) tan^3(a/4)).
//
// Orientation convention for the Voronoi split: one vertex at the north
// pole with the interior-angle bisector along azimuth phi = 0, so the
// half-cell spans polar directions theta in [0, interior_angle/2]
// measured from the edge toward the bisector.
struct SphericalTriangle {
  int n = 0;
  double area = 0.0;            // steradians, 2*pi/(n-2)
  double interior_angle = 0.0;  // radians, (area + pi)/3
  double side = 0.0;            // geodesic side length, radians
  bool degenerate = false;      // n == 3: half-sphere boundary case
};

// atan2 of cross/dot; stable near 0 and pi where acos is not.
double geodesic_distance(const UnitVector& u, const UnitVector& v);

// |u - v| = 2 sin(geodesic/2), in [0, 2].
double chordal_distance(const UnitVector& u, const UnitVector& v);

// Normalized measure of a cap of geodesic radius a: sin^2(a/2).
// Domain error outside (0, pi].
double cap_measure(double a);

// min_i geodesic_distance(x, cfg[i]); cfg must be nonempty.
double distance_to_set(const UnitVector& x, const Configuration& cfg);

// Geodesic distance from x to the union of caps B(cfg[i], a):
// max{distance_to_set(x, cfg) - a, 0}. 1-Lipschitz in x.
double distance_to_caps(const UnitVector& x, const Configuration& cfg, double a);

// Equilateral triangle of area 2*pi/(n-2); side solved by bisection with
// a Newton polish, residual below 1e-14. n == 3 returns the degenerate
// great-circle triangle (area 2*pi, side 2*pi/3) without solving.
SphericalTriangle triangle_for(int n);

// Distance from a vertex to the perpendicular bisector of an adjacent
// side of length alpha, along the direction theta measured from that
// side: h = arctan(tan(alpha/2)/cos(theta)).
double voronoi_boundary_h(double theta, double alpha);

UnitVector sample_uniform_sphere(Rng& rng);

// Uniform w.r.t. surface measure restricted to the cap: height uniform
// in [cos a, 1], azimuth uniform, rotated so the pole maps to center.
UnitVector sample_uniform_cap(const SphericalCap& cap, Rng& rng);

}  // namespace fekete
