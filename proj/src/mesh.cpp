#include "vpanel/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vpanel {

UniformBoundaryMesh build_uniform_mesh(int n) {
  if (n < 2) {
    throw std::invalid_argument("build_uniform_mesh: need n >= 2, got " + std::to_string(n));
  }
  UniformBoundaryMesh m;
  m.n = n;
  m.theta.resize(n);
  m.theta_tilde.resize(n);
  m.nodes.resize(n);
  m.midpoints.resize(n);
  for (int j = 0; j < n; ++j) {
    m.theta[j] = kTwoPi * j / n;
    m.theta_tilde[j] = kTwoPi * (j + 0.5) / n;
    m.nodes[j] = {std::cos(m.theta[j]), std::sin(m.theta[j])};
    m.midpoints[j] = {std::cos(m.theta_tilde[j]), std::sin(m.theta_tilde[j])};
  }
  return m;
}

std::pair<std::vector<double>, std::vector<double>>
cancellation_sums(const UniformBoundaryMesh& mesh) {
  const int n = mesh.n;
  std::vector<double> rows(n, 0.0), cols(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double rs = 0.0, cs = 0.0;
    for (int j = 0; j < n; ++j) {
      rs += 1.0 / std::tan(0.5 * (mesh.theta_tilde[i] - mesh.theta[j]));
      cs += 1.0 / std::tan(0.5 * (mesh.theta_tilde[j] - mesh.theta[i]));
    }
    rows[i] = rs;
    cols[i] = cs;
  }
  return {rows, cols};
}

}  // namespace vpanel
