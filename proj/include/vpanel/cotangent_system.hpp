#pragma once

#include <Eigen/Dense>
#include <functional>
#include <utility>
#include <vector>

#include "vpanel/hilbert.hpp"
#include "vpanel/mesh.hpp"

namespace vpanel {

// dense cotangent matrix A with a_ij = cot((theta_tilde_i - theta_j)/2),
// together with the factorization of the constrained solve matrix
// [ A(0..n-2, :) / n ; ones(n)/n ]
struct CotangentSystem {
  UniformBoundaryMesh mesh;
  Eigen::MatrixXd a;                      // full N x N matrix A_N
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;  // factorization of the constrained matrix
  double max_row_residual = 0.0;          // recorded cancellation residual of A_N
};

// solution of the constrained system: (1/N) sum_j z_j cot((theta_tilde_i - theta_j)/2)
// = f(theta_tilde_i) for i = 1..N-1 plus the mean constraint <z> = gamma
struct BoundaryDensities {
  std::vector<double> gamma_n;
  double mean = 0.0;
};

CotangentSystem assemble_system(const UniformBoundaryMesh& mesh);

// f_values holds f(theta_tilde_i) for the first N-1 midpoints.
// Throws std::invalid_argument on size mismatch and std::runtime_error if the
// factorization is singular (cannot happen on the uniform mesh).
BoundaryDensities solve_constrained(const CotangentSystem& system,
                                    const std::vector<double>& f_values,
                                    double gamma);

// lhs = ||z - <z>||_l2, rhs = (1/N) ||A_N z||_l2; equal up to rounding
std::pair<double, double> isometry_gap(const CotangentSystem& system,
                                       const std::vector<double>& z);

// f_app(theta) = (1/N) sum_j gamma_n[j] cot((theta - theta_j)/2)
double f_app(const BoundaryDensities& densities, const UniformBoundaryMesh& mesh,
             double theta);

// int_0^2pi (f_app - f) phi dtheta, computed as
// -(1/N) sum_j gamma_n[j] * (H phi)(theta_j) - int f phi,
// with H phi from hilbert_spectral on a fine grid containing the nodes and
// int f phi by fine midpoint quadrature
double weak_pairing(const BoundaryDensities& densities, const UniformBoundaryMesh& mesh,
                    const std::function<double(double)>& f,
                    const std::function<double(double)>& phi);

}  // namespace vpanel
