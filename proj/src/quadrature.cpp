#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "parallel.hpp"
#include "rng.hpp"

namespace fekete {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct McAccumulator {
  StableSum sum;
  StableSum sum_sq;
  long long count = 0;
};

IntegralEstimate merge_mc(const std::vector<McAccumulator>& parts, const std::string& method) {
  StableSum total, total_sq;
  long long n = 0;
  for (const auto& p : parts) {
    total.add(p.sum.value());
    total_sq.add(p.sum_sq.value());
    n += p.count;
  }
  IntegralEstimate est;
  est.n = n;
  est.method = method;
  est.value = total.value() / static_cast<double>(n);
  const double var = total_sq.value() / static_cast<double>(n) - est.value * est.value;
  est.error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  return est;
}

// Gauss-Legendre nodes/weights on [-1, 1] via Newton iteration on P_n.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre compute_gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(static_cast<std::size_t>(n));
  gl.weights.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[static_cast<std::size_t>(i)] = -x;
    gl.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[static_cast<std::size_t>(i)] = w;
    gl.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return gl;
}

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, compute_gauss_legendre(n)).first;
  }
  return it->second;
}

double product_rule_value(const std::function<double(const Vec3&)>& f, int n_polar,
                          int n_azimuth) {
  const GaussLegendre& gl = gauss_legendre(n_polar);
  StableSum acc;
  for (int i = 0; i < n_polar; ++i) {
    const double t = gl.nodes[static_cast<std::size_t>(i)];
    const double r = std::sqrt(std::max(0.0, 1.0 - t * t));
    StableSum ring;
    for (int j = 0; j < n_azimuth; ++j) {
      const double phi = 2.0 * kPi * j / n_azimuth;
      const double v = f({r * std::cos(phi), r * std::sin(phi), t});
      if (!std::isfinite(v)) {
        throw std::runtime_error("integrate_sphere_product: non-finite integrand value");
      }
      ring.add(v);
    }
    acc.add(gl.weights[static_cast<std::size_t>(i)] * ring.value() / n_azimuth);
  }
  return 0.5 * acc.value();
}

struct Simpson1D {
  const std::function<double(double)>* f = nullptr;
  long long evals = 0;
  double error = 0.0;

  double eval(double x) {
    ++evals;
    const double v = (*f)(x);
    if (!std::isfinite(v)) {
      throw std::runtime_error("integrate_1d_adaptive: non-finite integrand value");
    }
    return v;
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                 int depth) {
    if (depth > 60) {
      throw std::runtime_error("integrate_1d_adaptive: max recursion depth exceeded");
    }
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
      error += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

IntegralEstimate integrate_sphere_mc(const std::function<double(const Vec3&)>& f,
                                     long long n_samples, std::uint64_t seed, int workers) {
  if (n_samples < 2) {
    throw std::invalid_argument("integrate_sphere_mc: need at least 2 samples");
  }
  if (workers <= 0) workers = default_workers();
  if (static_cast<long long>(workers) > n_samples) workers = static_cast<int>(n_samples);

  std::vector<McAccumulator> parts(static_cast<std::size_t>(workers));
  run_workers(workers, [&](int w) {
    const long long base = n_samples / workers;
    const long long count = base + (w < n_samples % workers ? 1 : 0);
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(w));
    auto& acc = parts[static_cast<std::size_t>(w)];
    for (long long k = 0; k < count; ++k) {
      const double v = f(sample_uniform_sphere(rng).vec());
      if (!std::isfinite(v)) {
        throw std::runtime_error("integrate_sphere_mc: non-finite integrand value");
      }
      acc.sum.add(v);
      acc.sum_sq.add(v * v);
    }
    acc.count = count;
  });
  return merge_mc(parts, "mc");
}

IntegralEstimate integrate_sphere_product(const std::function<double(const Vec3&)>& f,
                                          int n_polar, int n_azimuth) {
  if (n_polar < 2 || n_azimuth < 2) {
    throw std::invalid_argument("integrate_sphere_product: need at least 2 nodes per axis");
  }
  IntegralEstimate est;
  est.method = "product";
  est.n = static_cast<long long>(n_polar) * n_azimuth;
  est.value = product_rule_value(f, n_polar, n_azimuth);
  const double coarse = product_rule_value(f, std::max(2, n_polar / 2), std::max(2, n_azimuth / 2));
  est.error = std::abs(est.value - coarse);
  return est;
}

IntegralEstimate integrate_1d_adaptive(const std::function<double(double)>& f, double lo,
                                       double hi, double tol) {
  if (!(lo < hi)) {
    throw std::invalid_argument("integrate_1d_adaptive: require lo < hi");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("integrate_1d_adaptive: tolerance must be positive");
  }
  Simpson1D s;
  s.f = &f;
  const double fa = s.eval(lo);
  const double fm = s.eval(0.5 * (lo + hi));
  const double fb = s.eval(hi);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  IntegralEstimate est;
  est.method = "adaptive";
  est.value = s.recurse(lo, hi, fa, fm, fb, whole, tol, 0);
  est.error = s.error;
  est.n = s.evals;
  return est;
}

IntegralEstimate cap_pair_energy_quadrature(const SphericalCap& cap_i,
                                            const SphericalCap& cap_j, LogKernel kernel,
                                            long long n_samples, std::uint64_t seed,
                                            int workers) {
  if (n_samples < 2) {
    throw std::invalid_argument("cap_pair_energy_quadrature: need at least 2 samples");
  }
  if (!(cap_i.radius() > 1e-12) || !(cap_j.radius() > 1e-12)) {
    throw std::domain_error("cap_pair_energy_quadrature: degenerate cap radius");
  }
  if (workers <= 0) workers = default_workers();
  if (static_cast<long long>(workers) > n_samples) workers = static_cast<int>(n_samples);

  const double sign = kernel == LogKernel::inverse ? -1.0 : 1.0;
  std::vector<McAccumulator> parts(static_cast<std::size_t>(workers));
  run_workers(workers, [&](int w) {
    const long long base = n_samples / workers;
    const long long count = base + (w < n_samples % workers ? 1 : 0);
    Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(w));
    auto& acc = parts[static_cast<std::size_t>(w)];
    for (long long k = 0; k < count; ++k) {
      const UnitVector x = sample_uniform_cap(cap_i, rng);
      double dist = 0.0;
      for (;;) {
        const UnitVector y = sample_uniform_cap(cap_j, rng);
        dist = chordal_distance(x, y);
        if (dist >= 1e-15) break;
      }
      const double v = sign * std::log(dist);
      acc.sum.add(v);
      acc.sum_sq.add(v * v);
    }
    acc.count = count;
  });
  return merge_mc(parts, "mc");
}

}  // namespace fekete
