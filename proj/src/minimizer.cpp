#include "minimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "energy.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"

namespace fekete {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGoldenAngle = kPi * (3.0 - 2.2360679774997896964091736687747);  // pi(3-sqrt 5)
constexpr double kArmijo = 1e-4;

std::vector<Vec3> to_raw(const Configuration& cfg) {
  std::vector<Vec3> pts;
  pts.reserve(cfg.size());
  for (const auto& p : cfg.points()) pts.push_back(p.vec());
  return pts;
}

Configuration to_config(const std::vector<Vec3>& pts) {
  std::vector<UnitVector> ups;
  ups.reserve(pts.size());
  for (const auto& p : pts) ups.emplace_back(p);
  return Configuration(std::move(ups));
}

struct RunOutcome {
  std::vector<Vec3> pts;
  double energy = 0.0;
  int iters = 0;
  double grad_norm = 0.0;
  bool converged = false;
  bool stagnated = false;
};

RunOutcome descend(std::vector<Vec3> pts, const MinimizeOptions& opts) {
  const std::size_t n = pts.size();
  const double tol =
      opts.grad_tol > 0.0 ? opts.grad_tol : 1e-10 * static_cast<double>(n);

  RunOutcome out;
  double energy = pair_energy_raw(pts);
  std::vector<Vec3> grad;
  std::vector<Vec3> trial(n);
  double step = 1.0 / static_cast<double>(n);

  int it = 0;
  for (; it < opts.max_iters; ++it) {
    riemannian_gradient_raw(pts, grad);
    double g2 = 0.0;
    for (const auto& g : grad) g2 += norm2(g);
    out.grad_norm = std::sqrt(g2);
    if (out.grad_norm <= tol) {
      out.converged = true;
      break;
    }

    double t = step;
    bool accepted = false;
    for (int halvings = 0; halvings <= 60; ++halvings) {
      for (std::size_t i = 0; i < n; ++i) {
        Vec3 p = pts[i] - t * grad[i];
        p *= 1.0 / norm(p);
        trial[i] = p;
      }
      double trial_energy;
      try {
        trial_energy = pair_energy_raw(trial);
      } catch (const std::domain_error&) {
        t *= 0.5;  // step collapsed two points; shrink
        continue;
      }
      if (trial_energy <= energy - kArmijo * t * g2) {
        pts.swap(trial);
        energy = trial_energy;
        step = 2.0 * t;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      out.stagnated = true;
      break;
    }
  }

  out.pts = std::move(pts);
  out.energy = energy;
  out.iters = it;
  return out;
}

}  // namespace

Configuration init_spiral(int n) {
  if (n < 2) {
    throw std::invalid_argument("init_spiral: n must be at least 2");
  }
  std::vector<UnitVector> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double z = -1.0 + (2.0 * k + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = k * kGoldenAngle;
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return Configuration(std::move(pts));
}

Configuration random_configuration(int n, std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("random_configuration: n must be positive");
  }
  Rng rng(seed);
  std::vector<UnitVector> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pts.push_back(sample_uniform_sphere(rng));
  return Configuration(std::move(pts));
}

MinimizeResult minimize(const Configuration& start, const MinimizeOptions& opts) {
  if (opts.max_iters < 1) {
    throw std::invalid_argument("minimize: max_iters must be at least 1");
  }
  const int restarts = std::max(1, opts.restarts);
  const int n = static_cast<int>(start.size());

  std::vector<RunOutcome> outcomes(static_cast<std::size_t>(restarts));
  const int workers = std::min(default_workers(), restarts);
  run_workers(workers, [&](int w) {
    for (int r = w; r < restarts; r += workers) {
      std::uint64_t state = opts.seed ^ (0xD1B54A32D192ED03ull * static_cast<std::uint64_t>(r));
      const std::uint64_t restart_seed = splitmix64_next(state);
      std::vector<Vec3> pts =
          r == 0 ? to_raw(start) : to_raw(random_configuration(n, restart_seed));
      outcomes[static_cast<std::size_t>(r)] = descend(std::move(pts), opts);
    }
  });

  int best = 0;
  for (int r = 1; r < restarts; ++r) {
    if (outcomes[static_cast<std::size_t>(r)].energy < outcomes[static_cast<std::size_t>(best)].energy) {
      best = r;
    }
  }
  auto& chosen = outcomes[static_cast<std::size_t>(best)];
  MinimizeResult result{to_config(chosen.pts), chosen.energy,    chosen.iters,
                        chosen.grad_norm,      chosen.converged, chosen.stagnated,
                        best};
  return result;
}

MinimizeResult minimize_n(int n, const MinimizeOptions& opts) {
  const Configuration start = opts.init == MinimizeOptions::Init::spiral
                                  ? init_spiral(n)
                                  : random_configuration(n, opts.seed);
  return minimize(start, opts);
}

std::vector<CurvePoint> energy_curve(const std::vector<int>& n_values,
                                     const MinimizeOptions& opts) {
  std::vector<CurvePoint> curve;
  curve.reserve(n_values.size());
  for (const int n : n_values) {
    if (n < 2) {
      throw std::invalid_argument("energy_curve: every N must be at least 2");
    }
    const MinimizeResult res = minimize_n(n, opts);

    // Exact config-independent bound from the decomposition at eps = 2,
    // using I(mu) >= 0.
    const double nd = static_cast<double>(n);
    const double a = 2.0 / std::sqrt(nd);
    const double lower = nd * nd * continuous_energy() - nd * cap_self_energy(a) -
                         nd * (nd - 1.0) * cap_cross_correction(a);
    if (res.energy < lower - 1e-6 * std::abs(lower)) {
      throw std::logic_error("energy_curve: energy below the decomposition lower bound");
    }
    curve.push_back({n, res.energy});
  }
  return curve;
}

FitResult fit_clog(const std::vector<CurvePoint>& curve) {
  std::vector<CurvePoint> sorted = curve;
  std::sort(sorted.begin(), sorted.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.n < b.n; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].n == sorted[i - 1].n) {
      throw std::invalid_argument("fit_clog: N values must be distinct");
    }
  }
  if (sorted.size() < 3) {
    throw std::invalid_argument("fit_clog: at least 3 distinct N required");
  }
  for (const auto& p : sorted) {
    if (!std::isfinite(p.energy)) {
      throw std::invalid_argument("fit_clog: non-finite energy in curve");
    }
  }

  // y = c + d * x with x = 1/sqrt(N).
  StableSum sx, sy, sxx, sxy;
  const double m = static_cast<double>(sorted.size());
  std::vector<double> xs, ys;
  for (const auto& p : sorted) {
    const double nd = static_cast<double>(p.n);
    const double y =
        (p.energy - continuous_energy() * nd * nd + 0.5 * nd * std::log(nd)) / nd;
    const double x = 1.0 / std::sqrt(nd);
    xs.push_back(x);
    ys.push_back(y);
    sx.add(x);
    sy.add(y);
    sxx.add(x * x);
    sxy.add(x * y);
  }
  const double det = m * sxx.value() - sx.value() * sx.value();
  if (std::abs(det) < 1e-14) {
    throw std::invalid_argument("fit_clog: rank-deficient design (N values too close)");
  }
  FitResult fit;
  fit.c_log_hat = (sxx.value() * sy.value() - sx.value() * sxy.value()) / det;
  fit.correction_coeff = (m * sxy.value() - sx.value() * sy.value()) / det;
  StableSum rss;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - fit.c_log_hat - fit.correction_coeff * xs[i];
    rss.add(r * r);
  }
  fit.residual_rms = std::sqrt(rss.value() / m);
  for (const auto& p : sorted) fit.n_values.push_back(p.n);
  return fit;
}

}  // namespace fekete
