#include "vpanel/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vpanel/errors.hpp"

namespace vpanel {

namespace {

void check_separations(const FreeVortexState& state, const SimulationConfig& sim) {
  const size_t m = state.positions.size();
  if (sim.blob_delta > 0.0) return;
  for (size_t k = 0; k < m; ++k) {
    for (size_t j = k + 1; j < m; ++j) {
      if (dist(state.positions[k], state.positions[j]) < sim.collision_cutoff) {
        throw CollisionError("free vortices " + std::to_string(k) + " and " +
                             std::to_string(j) + " collided");
      }
    }
  }
}

void check_boundary(const FreeVortexState& state, const SimulationConfig& sim) {
  for (size_t k = 0; k < state.positions.size(); ++k) {
    if (norm(state.positions[k]) <= 1.0 + sim.boundary_margin) {
      throw CollisionError("free vortex " + std::to_string(k) + " struck the obstacle");
    }
  }
}

VorticityConfig instantaneous_config(const FreeVortexState& state, const SimulationConfig& sim) {
  VorticityConfig cfg;
  cfg.gamma = sim.gamma;
  cfg.vortices.resize(state.positions.size());
  for (size_t k = 0; k < state.positions.size(); ++k) {
    cfg.vortices[k] = {state.positions[k], state.strengths[k]};
  }
  return cfg;
}

}  // namespace

std::vector<Vec2> rhs_free_plane(const FreeVortexState& state, double blob_delta) {
  const size_t m = state.positions.size();
  std::vector<Vec2> vel(m, Vec2{0.0, 0.0});
  const double d2 = blob_delta * blob_delta;
  for (size_t k = 0; k < m; ++k) {
    for (size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      const Vec2 d = state.positions[k] - state.positions[j];
      const double r2 = sqnorm(d) + d2;
      // 1e-8 pairwise cutoff for the exact kernel
      if (blob_delta == 0.0 && sqnorm(d) < 1e-16) {
        throw CollisionError("rhs_free_plane: coincident vortices with exact kernel");
      }
      vel[k] += (state.strengths[j] / (kTwoPi * r2)) * perp(d);
    }
  }
  return vel;
}

CombinedRhs::CombinedRhs(int n_boundary) : system_(assemble_system(build_uniform_mesh(n_boundary))) {}

BoundaryDensities CombinedRhs::boundary_densities(const FreeVortexState& state,
                                                  const SimulationConfig& sim) const {
  const VorticityConfig cfg = instantaneous_config(state, sim);
  const PeriodicSamples f = trace_f(cfg, system_.mesh);
  std::vector<double> rhs(f.values.begin(), f.values.end() - 1);
  return solve_constrained(system_, rhs, sim.gamma);
}

std::vector<Vec2> CombinedRhs::operator()(const FreeVortexState& state,
                                          const SimulationConfig& sim) const {
  check_boundary(state, sim);
  check_separations(state, sim);
  std::vector<Vec2> vel = rhs_free_plane(state, sim.blob_delta);
  const BoundaryDensities densities = boundary_densities(state, sim);
  for (size_t k = 0; k < state.positions.size(); ++k) {
    vel[k] += velocity_approx(densities, system_.mesh, state.positions[k]);
  }
  return vel;
}

std::vector<Vec2> rhs_combined(const FreeVortexState& state, const SimulationConfig& sim) {
  return CombinedRhs(sim.n_boundary)(state, sim);
}

namespace {

FreeVortexState shifted(const FreeVortexState& base, const std::vector<Vec2>& dir, double h) {
  FreeVortexState s = base;
  for (size_t k = 0; k < s.positions.size(); ++k) {
    s.positions[k] = base.positions[k] + h * dir[k];
  }
  return s;
}

}  // namespace

FreeVortexState step_rk4(const FreeVortexState& state, const SimulationConfig& sim,
                         const CombinedRhs& rhs) {
  const double dt = sim.dt;
  const std::vector<Vec2> k1 = rhs(state, sim);
  const std::vector<Vec2> k2 = rhs(shifted(state, k1, 0.5 * dt), sim);
  const std::vector<Vec2> k3 = rhs(shifted(state, k2, 0.5 * dt), sim);
  const std::vector<Vec2> k4 = rhs(shifted(state, k3, dt), sim);

  FreeVortexState next = state;
  for (size_t k = 0; k < state.positions.size(); ++k) {
    const Vec2 incr = (1.0 / 6.0) * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    next.positions[k] = state.positions[k] + dt * incr;
  }
  next.time = state.time + dt;
  return next;
}

FreeVortexState step_rk4(const FreeVortexState& state, const SimulationConfig& sim) {
  return step_rk4(state, sim, CombinedRhs(sim.n_boundary));
}

Trajectory simulate(const FreeVortexState& initial, const SimulationConfig& sim) {
  if (initial.positions.size() != initial.strengths.size()) {
    throw std::invalid_argument("simulate: positions and strengths disagree in length");
  }
  if (sim.dt <= 0.0) throw std::invalid_argument("simulate: dt must be positive");
  if (sim.steps < 0) throw std::invalid_argument("simulate: steps must be nonnegative");

  const CombinedRhs rhs(sim.n_boundary);
  Trajectory traj;
  traj.states.reserve(sim.steps + 1);
  traj.states.push_back(initial);
  traj.diagnostics.reserve(sim.steps);

  // startup sanity: velocity * dt should stay well below the boundary gap
  try {
    const std::vector<Vec2> v0 = rhs(initial, sim);
    for (size_t k = 0; k < v0.size(); ++k) {
      const double gap = norm(initial.positions[k]) - 1.0;
      if (norm(v0[k]) * sim.dt > 0.1 * gap) {
        traj.warnings.push_back("dt too large for vortex " + std::to_string(k) +
                                ": velocity*dt exceeds a tenth of the boundary distance");
      }
    }
  } catch (const CollisionError& e) {
    traj.failure_reason = e.what();
    traj.failed_at_step = 0;
    return traj;
  }

  double total_strength = 0.0;
  for (double s : initial.strengths) total_strength += s;

  FreeVortexState cur = initial;
  for (long step = 0; step < sim.steps; ++step) {
    try {
      cur = step_rk4(cur, sim, rhs);
      check_boundary(cur, sim);
      check_separations(cur, sim);
    } catch (const CollisionError& e) {
      traj.failure_reason = e.what();
      traj.failed_at_step = step;
      return traj;
    }

    StepDiagnostics d;
    d.step = step + 1;
    d.time = cur.time;
    d.total_strength = total_strength;
    double min_bd = std::numeric_limits<double>::infinity();
    for (const Point2& p : cur.positions) min_bd = std::min(min_bd, norm(p) - 1.0);
    d.min_boundary_distance = min_bd;
    const BoundaryDensities bd = rhs.boundary_densities(cur, sim);
    d.mean_gamma_n = bd.mean;
    d.mean_residual = std::abs(bd.mean - sim.gamma);
    traj.diagnostics.push_back(d);
    traj.states.push_back(cur);
  }
  return traj;
}

}  // namespace vpanel
