#include "vpanel/cotangent_system.hpp"

#include <cmath>
#include <stdexcept>

#include "vpanel/errors.hpp"

namespace vpanel {

CotangentSystem assemble_system(const UniformBoundaryMesh& mesh) {
  const int n = mesh.n;
  CotangentSystem sys;
  sys.mesh = mesh;
  sys.a.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      sys.a(i, j) = 1.0 / std::tan(0.5 * (mesh.theta_tilde[i] - mesh.theta[j]));
    }
  }

  double max_resid = 0.0;
  for (int i = 0; i < n; ++i) {
    max_resid = std::max(max_resid, std::abs(sys.a.row(i).sum()));
  }
  sys.max_row_residual = max_resid;

  Eigen::MatrixXd constrained(n, n);
  constrained.topRows(n - 1) = sys.a.topRows(n - 1) / n;
  constrained.row(n - 1).setConstant(1.0 / n);
  sys.lu.compute(constrained);
  return sys;
}

BoundaryDensities solve_constrained(const CotangentSystem& system,
                                    const std::vector<double>& f_values,
                                    double gamma) {
  const int n = system.mesh.n;
  if (static_cast<int>(f_values.size()) != n - 1) {
    throw std::invalid_argument("solve_constrained: expected N-1 right-hand-side values");
  }
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n - 1; ++i) rhs[i] = f_values[i];
  rhs[n - 1] = gamma;

  const Eigen::VectorXd z = system.lu.solve(rhs);
  if (!z.allFinite()) {
    throw std::runtime_error("solve_constrained: factorization produced non-finite values");
  }

  BoundaryDensities d;
  d.gamma_n.assign(z.data(), z.data() + n);
  d.mean = z.sum() / n;
  return d;
}

std::pair<double, double> isometry_gap(const CotangentSystem& system,
                                       const std::vector<double>& z) {
  const int n = system.mesh.n;
  if (static_cast<int>(z.size()) != n) {
    throw std::invalid_argument("isometry_gap: size mismatch");
  }
  const Eigen::Map<const Eigen::VectorXd> zv(z.data(), n);
  const double zbar = zv.sum() / n;
  const double lhs = std::sqrt((zv.array() - zbar).square().sum() / n);
  const Eigen::VectorXd az = system.a * zv;
  const double rhs = std::sqrt(az.squaredNorm() / n) / n;
  return {lhs, rhs};
}

double f_app(const BoundaryDensities& densities, const UniformBoundaryMesh& mesh,
             double theta) {
  const int n = mesh.n;
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double half = 0.5 * (theta - mesh.theta[j]);
    const double s = std::remainder(theta - mesh.theta[j], kTwoPi);
    if (std::abs(s) < 1e-12) {
      throw SingularEvaluation("f_app: evaluation at a node angle");
    }
    acc += densities.gamma_n[j] / std::tan(half);
  }
  return acc / n;
}

double weak_pairing(const BoundaryDensities& densities, const UniformBoundaryMesh& mesh,
                    const std::function<double(double)>& f,
                    const std::function<double(double)>& phi) {
  const int n = mesh.n;
  // fine node grid that contains the mesh nodes as every (m/n)-th point
  const int mult = std::max(4, (2048 + n - 1) / n);
  const int m = n * mult;

  PeriodicSamples phi_samples;
  phi_samples.grid_kind = GridKind::node;
  phi_samples.values.resize(m);
  for (int j = 0; j < m; ++j) phi_samples.values[j] = phi(kTwoPi * j / m);
  const PeriodicSamples h_phi = hilbert_spectral(phi_samples);

  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    acc += densities.gamma_n[j] * h_phi.values[j * mult];
  }
  acc = -acc / n;

  const int q = 1 << 15;
  double integral = 0.0;
  for (int i = 0; i < q; ++i) {
    const double t = kTwoPi * (i + 0.5) / q;
    integral += f(t) * phi(t);
  }
  integral *= kTwoPi / q;

  return acc - integral;
}

}  // namespace vpanel
