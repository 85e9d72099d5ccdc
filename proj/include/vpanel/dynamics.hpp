#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vpanel/boundary_method.hpp"
#include "vpanel/fields.hpp"
#include "vpanel/geometry.hpp"

namespace vpanel {

struct FreeVortexState {
  std::vector<Point2> positions;
  std::vector<double> strengths;  // constant in time
  double time = 0.0;
};

struct SimulationConfig {
  int n_boundary = 64;
  double gamma = 0.0;
  double dt = 1e-3;
  long steps = 0;
  double blob_delta = 0.0;  // 0 = exact kernel
  double collision_cutoff = 1e-8;
  double boundary_margin = 1e-6;
};

struct StepDiagnostics {
  long step = 0;
  double time = 0.0;
  double total_strength = 0.0;
  double min_boundary_distance = 0.0;
  double mean_gamma_n = 0.0;
  double mean_residual = 0.0;  // |<gamma^N> - gamma| at the last stage of the step
};

struct Trajectory {
  std::vector<FreeVortexState> states;       // every state, including the initial one
  std::vector<StepDiagnostics> diagnostics;  // one entry per completed step
  std::optional<std::string> failure_reason;
  long failed_at_step = -1;
  std::vector<std::string> warnings;
};

// mutual advection in the free plane:
// ydot_k = (1/2pi) sum_{j != k} alpha_j (y_k - y_j)^perp / (|y_k - y_j|^2 + delta^2)
std::vector<Vec2> rhs_free_plane(const FreeVortexState& state, double blob_delta);

// shared mesh/factorization for a fixed N, reused across stages and steps
class CombinedRhs {
 public:
  explicit CombinedRhs(int n_boundary);

  // free-plane interaction plus the boundary response: solve the cotangent
  // system for the instantaneous vortex set, then add u_app at each vortex
  std::vector<Vec2> operator()(const FreeVortexState& state, const SimulationConfig& sim) const;

  // densities solved for the given state (exposed for diagnostics)
  BoundaryDensities boundary_densities(const FreeVortexState& state,
                                       const SimulationConfig& sim) const;
  const CotangentSystem& system() const { return system_; }

 private:
  CotangentSystem system_;
};

// convenience entry point; assembles a fresh system per call
std::vector<Vec2> rhs_combined(const FreeVortexState& state, const SimulationConfig& sim);

FreeVortexState step_rk4(const FreeVortexState& state, const SimulationConfig& sim,
                         const CombinedRhs& rhs);
FreeVortexState step_rk4(const FreeVortexState& state, const SimulationConfig& sim);

// fixed-step integration of rhs_combined; on a collision or boundary strike the
// partial trajectory is returned with the failure reason filled in
Trajectory simulate(const FreeVortexState& initial, const SimulationConfig& sim);

}  // namespace vpanel
