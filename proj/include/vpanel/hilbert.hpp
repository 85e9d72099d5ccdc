#pragma once

#include <functional>
#include <vector>

#include "vpanel/geometry.hpp"
#include "vpanel/mesh.hpp"

namespace vpanel {

enum class GridKind { node, midpoint };

// sample of a 2pi-periodic function on a uniform grid of M angles,
// 2*pi*j/M (node grid) or 2*pi*(j+1/2)/M (midpoint grid)
struct PeriodicSamples {
  std::vector<double> values;
  GridKind grid_kind = GridKind::node;

  int size() const { return static_cast<int>(values.size()); }
  double angle(int j) const {
    const double shift = grid_kind == GridKind::midpoint ? 0.5 : 0.0;
    return kTwoPi * (j + shift) / size();
  }
};

// circular Hilbert transform Hg(t) = PV int_0^2pi cot((t-s)/2) g(s) ds,
// realized as the Fourier multiplier -2*pi*i*sign(k) on the normalized
// coefficients (1/2pi) int g e^{-ik t} dt; the mean maps to zero, as does the
// Nyquist bin for even M. Output samples sit on the same grid as the input.
// Throws std::invalid_argument for M < 4.
PeriodicSamples hilbert_spectral(const PeriodicSamples& samples);

// staggered principal-value quadrature of the same transform:
// (2pi/N) sum_j cot((theta_tilde_i - theta_j)/2) g(theta_j), node samples in,
// midpoint samples out; the symmetric stagger supplies the PV implicitly
PeriodicSamples hilbert_pv(const PeriodicSamples& node_samples);

// (2pi/N) sum_i g(theta_tilde_i)
double midpoint_sum(const std::function<double(double)>& g, const UniformBoundaryMesh& mesh);
double midpoint_sum(const std::function<double(double)>& g, int n);
double midpoint_sum(const PeriodicSamples& midpoint_samples);

// norms with the 1/N normalization baked in:
// mean(z) = (1/N) sum z_i, norm_l2(z) = sqrt((1/N) sum z_i^2), etc.
double mean(const std::vector<double>& z);
double norm_l1(const std::vector<double>& z);
double norm_l2(const std::vector<double>& z);
double norm_linf(const std::vector<double>& z);

}  // namespace vpanel
