#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vpanel/geometry.hpp"

namespace vpanel {

struct PointVortex {
  Point2 position;
  double strength = 0.0;
};

// radially symmetric vorticity patch: omega(|y - center|) supported in
// |y - center| <= support_radius. Carries both the profile omega(r) and the
// cumulative circulation Gamma(r) = 2*pi*int_0^r omega(s) s ds; the former
// feeds area quadrature of the image term, the latter the circulation
// shortcut for the plane flow.
struct RadialBlob {
  Point2 center;
  std::function<double(double)> omega;
  std::function<double(double)> cumulative_circulation;
  double support_radius = 0.0;
  double total_mass = 0.0;
};

// omega constant on the support
RadialBlob uniform_blob(Point2 center, double support_radius, double total_mass);
// omega(r) = w0 (1 - (r/R)^2), vanishing at the support edge
RadialBlob parabolic_blob(Point2 center, double support_radius, double total_mass);

struct VorticityConfig {
  std::vector<PointVortex> vortices;
  std::vector<RadialBlob> blobs;
  double gamma = 0.0;
};

inline constexpr double kSeparationMargin = 1e-6;
inline constexpr double kBlobQuadTol = 1e-10;

// throws DomainError unless every vortex and blob support keeps the given
// distance from the closed unit disk
void validate_exterior(const VorticityConfig& config, double margin = kSeparationMargin);

// alpha = gamma + sum of strengths + sum of blob masses
double alpha(const VorticityConfig& config);

// full-plane flow u_P generated by the vorticity alone
Vec2 velocity_plane(const VorticityConfig& config, Point2 x);

// image-formula remainder flow u_R; valid on |x| >= 1 (continuous up to the
// boundary), throws DomainError strictly inside the disk. Blob image terms are
// integrated by a polar midpoint rule refined until two levels agree to quad_tol.
Vec2 velocity_remainder_exact(const VorticityConfig& config, Point2 x,
                              double quad_tol = kBlobQuadTol);

// u_P + u_R, the exterior-domain flow with circulation gamma
Vec2 velocity_total_exact(const VorticityConfig& config, Point2 x,
                          double quad_tol = kBlobQuadTol);

enum class FieldDomain { plane, exterior, exterior_minus_singularities };

struct VelocityEvaluator {
  std::function<Vec2(Point2)> eval;
  FieldDomain domain = FieldDomain::plane;
  std::string name;
};

VelocityEvaluator make_plane_evaluator(const VorticityConfig& config);
VelocityEvaluator make_remainder_evaluator(const VorticityConfig& config);
VelocityEvaluator make_total_evaluator(const VorticityConfig& config);

}  // namespace vpanel
