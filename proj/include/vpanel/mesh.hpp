#pragma once

#include <utility>
#include <vector>

#include "vpanel/geometry.hpp"

namespace vpanel {

// Uniform staggered mesh on the unit circle: node angles theta[j] = 2*pi*j/N
// interleaved with midpoint angles theta_tilde[j] = 2*pi*(j + 1/2)/N,
// j = 0..N-1 (written theta_1..theta_N elsewhere; public docs use 1-based
// indices, storage is 0-based).
struct UniformBoundaryMesh {
  int n = 0;
  std::vector<double> theta;
  std::vector<double> theta_tilde;
  std::vector<Point2> nodes;      // (cos theta_j, sin theta_j)
  std::vector<Point2> midpoints;  // (cos theta_tilde_j, sin theta_tilde_j)
};

// throws std::invalid_argument for n < 2
UniformBoundaryMesh build_uniform_mesh(int n);

// row_sums[i]  = sum_j cot((theta_tilde[i] - theta[j]) / 2)
// col_sums[i]  = sum_j cot((theta_tilde[j] - theta[i]) / 2)
// both vanish identically for the uniform mesh; returned values measure the
// floating-point residual of that cancellation
std::pair<std::vector<double>, std::vector<double>>
cancellation_sums(const UniformBoundaryMesh& mesh);

}  // namespace vpanel
