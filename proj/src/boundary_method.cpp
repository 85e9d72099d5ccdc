#include "vpanel/boundary_method.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "vpanel/errors.hpp"
#include "vpanel/kernels.hpp"

namespace vpanel {

PeriodicSamples trace_f(const VorticityConfig& config, const UniformBoundaryMesh& mesh) {
  validate_exterior(config);
  PeriodicSamples f;
  f.grid_kind = GridKind::midpoint;
  f.values.resize(mesh.n);
  for (int i = 0; i < mesh.n; ++i) {
    const Point2 xt = mesh.midpoints[i];
    f.values[i] = 2.0 * kTwoPi * dot(velocity_plane(config, xt), xt);
  }
  return f;
}

BoundaryProblem solve_boundary(const VorticityConfig& config, int n) {
  return solve_boundary(config, assemble_system(build_uniform_mesh(n)));
}

BoundaryProblem solve_boundary(const VorticityConfig& config, const CotangentSystem& system) {
  const int n = system.mesh.n;
  BoundaryProblem p;
  p.config = config;
  p.mesh = system.mesh;
  p.f_trace = trace_f(config, system.mesh);

  std::vector<double> rhs(p.f_trace.values.begin(), p.f_trace.values.end() - 1);
  p.densities = solve_constrained(system, rhs, config.gamma);

  const Eigen::Map<const Eigen::VectorXd> z(p.densities.gamma_n.data(), n);
  const Eigen::VectorXd resid = system.a * z / n;
  double max_interp = 0.0;
  for (int i = 0; i < n - 1; ++i) {
    max_interp = std::max(max_interp, std::abs(resid[i] - p.f_trace.values[i]));
  }
  p.interp_residual = max_interp;
  p.mean_residual = std::abs(p.densities.mean - config.gamma);
  return p;
}

Vec2 velocity_approx(const BoundaryDensities& densities, const UniformBoundaryMesh& mesh,
                     Point2 x) {
  const int n = mesh.n;
  double u1 = 0.0, u2 = 0.0;
  for (int j = 0; j < n; ++j) {
    const double d1 = x.x1 - mesh.nodes[j].x1;
    const double d2 = x.x2 - mesh.nodes[j].x2;
    const double r2 = d1 * d1 + d2 * d2;
    if (r2 < kSingularCutoff * kSingularCutoff) {
      throw SingularEvaluation("velocity_approx: evaluation at a boundary node");
    }
    const double w = densities.gamma_n[j] / r2;
    u1 -= w * d2;
    u2 += w * d1;
  }
  const double scale = 1.0 / (kTwoPi * n);
  return {scale * u1, scale * u2};
}

Vec2 velocity_approx(const BoundaryProblem& problem, Point2 x) {
  return velocity_approx(problem.densities, problem.mesh, x);
}

double sup_error_on_set(const BoundaryProblem& problem, const std::vector<Point2>& eval_points) {
  double sup = 0.0;
  for (const Point2& x : eval_points) {
    const Vec2 diff =
        velocity_remainder_exact(problem.config, x) - velocity_approx(problem, x);
    sup = std::max(sup, norm(diff));
  }
  return sup;
}

std::vector<Point2> circle_points(double radius, int count, Point2 center) {
  std::vector<Point2> pts(count);
  for (int i = 0; i < count; ++i) {
    const double t = kTwoPi * i / count;
    pts[i] = {center.x1 + radius * std::cos(t), center.x2 + radius * std::sin(t)};
  }
  return pts;
}

SweepResult convergence_sweep(const VorticityConfig& config, const std::vector<int>& n_list,
                              const std::vector<Point2>& eval_points, int workers) {
  for (size_t i = 0; i + 1 < n_list.size(); ++i) {
    if (n_list[i] >= n_list[i + 1]) {
      throw std::invalid_argument("convergence_sweep: n_list must be strictly increasing");
    }
  }
  for (int n : n_list) {
    if (n < 2) throw std::invalid_argument("convergence_sweep: every n must be >= 2");
  }

  SweepResult result;
  result.records.resize(n_list.size());

  auto run_one = [&](size_t idx) {
    const auto t0 = std::chrono::steady_clock::now();
    const BoundaryProblem p = solve_boundary(config, n_list[idx]);
    const double err = sup_error_on_set(p, eval_points);
    const auto t1 = std::chrono::steady_clock::now();
    ConvergenceRecord rec;
    rec.n = n_list[idx];
    rec.sup_error = err;
    rec.eval_set_descriptor = std::to_string(eval_points.size()) + " points";
    rec.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
    result.records[idx] = rec;
  };

  const int pool = std::max(1, std::min<int>(workers, static_cast<int>(n_list.size())));
  if (pool == 1) {
    for (size_t i = 0; i < n_list.size(); ++i) run_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (int t = 0; t < pool; ++t) {
      threads.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < n_list.size(); i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (auto& th : threads) th.join();
  }

  // least-squares fit of log(error) against log(n), skipping exact zeros
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int m = 0;
  for (const auto& rec : result.records) {
    if (rec.sup_error <= 0.0) continue;
    const double lx = std::log(static_cast<double>(rec.n));
    const double ly = std::log(rec.sup_error);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m >= 2) {
    const double denom = m * sxx - sx * sx;
    if (denom > 0.0) {
      result.slope = (m * sxy - sx * sy) / denom;
      result.slope_defined = true;
    }
  }
  if (!result.slope_defined) {
    result.slope = std::numeric_limits<double>::quiet_NaN();
  }
  return result;
}

std::pair<Vec2, Vec2> check_ball_circulation(Point2 x, int quadrature_points) {
  if (norm(x) <= 1.0) {
    throw DomainError("check_ball_circulation: point must be exterior");
  }
  Vec2 lhs{0.0, 0.0};
  for (int j = 0; j < quadrature_points; ++j) {
    const double t = kTwoPi * j / quadrature_points;
    lhs += biot_savart_plane(x, {std::cos(t), std::sin(t)});
  }
  lhs = (kTwoPi / quadrature_points) * lhs;
  const Vec2 rhs = (1.0 / sqnorm(Vec2{x.x1, x.x2})) * perp(x);
  return {lhs, rhs};
}

std::pair<Vec2, Vec2> check_vortex_identity(Point2 x, double phi, int quadrature_points) {
  if (norm(x) <= 1.0) {
    throw DomainError("check_vortex_identity: point must be exterior");
  }
  const int q = quadrature_points;
  // node grid anchored at phi, so phi lies on the induced midpoint grid and the
  // cotangent singularity cancels by symmetric pairing
  Vec2 lhs{0.0, 0.0};
  for (int j = 0; j < q; ++j) {
    const double theta = phi + kTwoPi * (j + 0.5) / q;
    const Point2 z{std::cos(theta), std::sin(theta)};
    const Vec2 d = x - z;
    const double w = 1.0 / (std::tan(0.5 * (phi - theta)) * sqnorm(d));
    lhs += w * d;
  }
  lhs = (1.0 / q) * lhs;  // (1/2pi) * (2pi/q)

  const Point2 y{std::cos(phi), std::sin(phi)};
  const Vec2 dy = x - y;
  const Vec2 rhs = (1.0 / sqnorm(dy)) * perp(dy) - (1.0 / sqnorm(Vec2{x.x1, x.x2})) * perp(x);
  return {lhs, rhs};
}

PeriodicSamples density_g(const VorticityConfig& config, int m) {
  PeriodicSamples upn;
  upn.grid_kind = GridKind::node;
  upn.values.resize(m);
  for (int j = 0; j < m; ++j) {
    const double t = kTwoPi * j / m;
    const Point2 xb{std::cos(t), std::sin(t)};
    upn.values[j] = dot(velocity_plane(config, xb), xb);
  }
  const PeriodicSamples h_upn = hilbert_spectral(upn);
  PeriodicSamples g;
  g.grid_kind = GridKind::node;
  g.values.resize(m);
  for (int j = 0; j < m; ++j) {
    g.values[j] = -h_upn.values[j] / kPi + config.gamma / kTwoPi;
  }
  return g;
}

PeriodicSamples density_h(const VorticityConfig& config, int m) {
  PeriodicSamples h;
  h.grid_kind = GridKind::node;
  h.values.resize(m);
  for (int j = 0; j < m; ++j) {
    const double t = kTwoPi * j / m;
    const Point2 xb{std::cos(t), std::sin(t)};
    h.values[j] = -2.0 * dot(velocity_plane(config, xb), xb);
  }
  return h;
}

Vec2 reconstruct_from_g(const VorticityConfig& config, Point2 x, int quadrature_points) {
  const PeriodicSamples g = density_g(config, quadrature_points);
  Vec2 u{0.0, 0.0};
  for (int j = 0; j < quadrature_points; ++j) {
    const double t = kTwoPi * j / quadrature_points;
    u += g.values[j] * biot_savart_plane(x, {std::cos(t), std::sin(t)});
  }
  return (kTwoPi / quadrature_points) * u;
}

Vec2 reconstruct_from_h(const VorticityConfig& config, Point2 x, int quadrature_points) {
  const PeriodicSamples h = density_h(config, quadrature_points);
  Vec2 u{0.0, 0.0};
  for (int j = 0; j < quadrature_points; ++j) {
    const double t = kTwoPi * j / quadrature_points;
    const Point2 y{std::cos(t), std::sin(t)};
    const Vec2 d = x - y;
    u += (h.values[j] / sqnorm(d)) * d;
  }
  u = (1.0 / quadrature_points) * u;  // (1/2pi) * (2pi/q)
  const double r2 = x.x1 * x.x1 + x.x2 * x.x2;
  return u + (config.gamma / (kTwoPi * r2)) * perp(x);
}

}  // namespace vpanel
