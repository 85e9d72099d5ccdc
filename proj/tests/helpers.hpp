#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "vpanel/dynamics.hpp"
#include "vpanel/fields.hpp"
#include "vpanel/geometry.hpp"
#include "vpanel/kernels.hpp"

// test-only oracles, kept out of the library on purpose
namespace vpanel::testing {

// 2D midpoint quadrature of the plane Biot-Savart integral over a blob
// support, tensor-product in polar coordinates about the blob center;
// valid for x outside the support
inline Vec2 blob_plane_quadrature(const RadialBlob& blob, Point2 x, int nr, int nt) {
  Vec2 acc{0.0, 0.0};
  const double dr = blob.support_radius / nr;
  const double dth = kTwoPi / nt;
  for (int i = 0; i < nr; ++i) {
    const double r = (i + 0.5) * dr;
    const double w = blob.omega(r) * r * dr * dth;
    for (int j = 0; j < nt; ++j) {
      const double b = (j + 0.5) * dth;
      const Point2 y{blob.center.x1 + r * std::cos(b), blob.center.x2 + r * std::sin(b)};
      acc += w * biot_savart_plane(x, y);
    }
  }
  return acc;
}

// one Richardson step on the h^2 midpoint error
inline Vec2 blob_plane_oracle(const RadialBlob& blob, Point2 x) {
  const Vec2 coarse = blob_plane_quadrature(blob, x, 200, 200);
  const Vec2 fine = blob_plane_quadrature(blob, x, 400, 400);
  return (1.0 / 3.0) * (4.0 * fine - coarse);
}

// Green function of the exterior unit disk; the library only exposes its
// gradient-perp, so the potential lives here as the path-integral reference
inline double green_potential(Point2 x, Point2 y) {
  const Point2 ys = image_point(y);
  return (std::log(dist(x, y)) - std::log(dist(x, ys) * norm(y))) / kTwoPi;
}

// midpoint-rule line integral of grad_x G = -perp(kernel) along a -> b
inline double green_path_integral(Point2 a, Point2 b, Point2 y, int segments) {
  const Vec2 step = (1.0 / segments) * (b - a);
  double acc = 0.0;
  for (int i = 0; i < segments; ++i) {
    const Point2 m = a + (i + 0.5) * step;
    acc += dot(-perp(exterior_green_kernel(m, y)), step);
  }
  return acc;
}

// plain RK4 on the free-plane system, for integrator checks without the
// boundary coupling
inline FreeVortexState rk4_plane(FreeVortexState state, double blob_delta, double dt,
                                 long steps) {
  auto shift = [](const FreeVortexState& base, const std::vector<Vec2>& dir, double h) {
    FreeVortexState s = base;
    for (size_t k = 0; k < s.positions.size(); ++k) {
      s.positions[k] = base.positions[k] + h * dir[k];
    }
    return s;
  };
  for (long i = 0; i < steps; ++i) {
    const auto k1 = rhs_free_plane(state, blob_delta);
    const auto k2 = rhs_free_plane(shift(state, k1, 0.5 * dt), blob_delta);
    const auto k3 = rhs_free_plane(shift(state, k2, 0.5 * dt), blob_delta);
    const auto k4 = rhs_free_plane(shift(state, k3, dt), blob_delta);
    FreeVortexState next = state;
    for (size_t k = 0; k < state.positions.size(); ++k) {
      next.positions[k] =
          state.positions[k] + (dt / 6.0) * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
    }
    next.time = state.time + dt;
    state = next;
  }
  return state;
}

inline double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const size_t n = xs.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64{seed}; }

}  // namespace vpanel::testing
