#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vpanel/cotangent_system.hpp"
#include "vpanel/fields.hpp"
#include "vpanel/hilbert.hpp"
#include "vpanel/mesh.hpp"

namespace vpanel {

// one solved instance of the boundary point-vortex method
struct BoundaryProblem {
  VorticityConfig config;
  UniformBoundaryMesh mesh;
  BoundaryDensities densities;
  PeriodicSamples f_trace;       // f at the midpoints
  double interp_residual = 0.0;  // max_i |(1/N) sum_j gamma_j cot(...) - f_i|, i < N-1
  double mean_residual = 0.0;    // |<gamma^N> - gamma|
};

struct ConvergenceRecord {
  int n = 0;
  double sup_error = 0.0;
  std::string eval_set_descriptor;
  double runtime_seconds = 0.0;
};

struct SweepResult {
  std::vector<ConvergenceRecord> records;
  double slope = 0.0;       // least-squares slope of log(error) vs log(n)
  bool slope_defined = false;  // false when fewer than two nonzero errors remain
};

// f(theta_tilde_i) = 4*pi * u_P(x_tilde_i) . x_tilde_i on the midpoint grid
PeriodicSamples trace_f(const VorticityConfig& config, const UniformBoundaryMesh& mesh);

// build mesh + system, trace f, solve for the densities
BoundaryProblem solve_boundary(const VorticityConfig& config, int n);
// same, reusing an assembled system (mesh and factorization depend only on N)
BoundaryProblem solve_boundary(const VorticityConfig& config, const CotangentSystem& system);

// u_app(x) = (1/2pi) sum_j (gamma_j/N) (x - x_j)^perp / |x - x_j|^2
Vec2 velocity_approx(const BoundaryDensities& densities, const UniformBoundaryMesh& mesh,
                     Point2 x);
Vec2 velocity_approx(const BoundaryProblem& problem, Point2 x);

// max over eval_points of |velocity_remainder_exact - velocity_approx|
double sup_error_on_set(const BoundaryProblem& problem, const std::vector<Point2>& eval_points);

std::vector<Point2> circle_points(double radius, int count, Point2 center = {0.0, 0.0});

// solve + measure per n; workers > 1 fans the n values over a thread pool
SweepResult convergence_sweep(const VorticityConfig& config, const std::vector<int>& n_list,
                              const std::vector<Point2>& eval_points, int workers = 1);

// lhs: uniform quadrature of (1/2pi) oint (x-y)^perp/|x-y|^2 dy over the unit
// circle; rhs: x^perp/|x|^2
std::pair<Vec2, Vec2> check_ball_circulation(Point2 x, int quadrature_points);

// lhs: staggered PV quadrature of (1/2pi) oint (x-z)/|x-z|^2 cot((phi-theta)/2) dz
// with z on a node grid anchored so that phi sits on the induced midpoint grid;
// rhs: (x-y)^perp/|x-y|^2 - x^perp/|x|^2 for y = (cos phi, sin phi)
std::pair<Vec2, Vec2> check_vortex_identity(Point2 x, double phi, int quadrature_points);

// continuous sheet densities on an m-point node grid:
// g = -(1/4pi^2) H f + gamma/2pi, h = -2 u_P . n
PeriodicSamples density_g(const VorticityConfig& config, int m = 1024);
PeriodicSamples density_h(const VorticityConfig& config, int m = 1024);

// quadrature reconstructions of u_R from the sheet densities
Vec2 reconstruct_from_g(const VorticityConfig& config, Point2 x, int quadrature_points = 1024);
Vec2 reconstruct_from_h(const VorticityConfig& config, Point2 x, int quadrature_points = 1024);

}  // namespace vpanel
