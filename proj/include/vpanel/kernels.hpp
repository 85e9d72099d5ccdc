#pragma once

#include "vpanel/geometry.hpp"

namespace vpanel {

inline constexpr double kSingularCutoff = 1e-14;

// plane Biot-Savart kernel (1/2pi) (x-y)^perp / |x-y|^2
Vec2 biot_savart_plane(Point2 x, Point2 y, double cutoff = kSingularCutoff);

// harmonic field H(x) = (1/2pi) x^perp / |x|^2, tangent to every circle about 0
Vec2 harmonic_field(Point2 x, double cutoff = kSingularCutoff);

// reflection across the unit circle, y* = y / |y|^2
Point2 image_point(Point2 y, double cutoff = kSingularCutoff);

// gradient-perp of the exterior-disk Green function:
// (1/2pi) [ (x-y)^perp/|x-y|^2 - (x-y*)^perp/|x-y*|^2 ]
Vec2 exterior_green_kernel(Point2 x, Point2 y, double cutoff = kSingularCutoff);

// normal component of the plane kernel restricted to the unit circle:
// -(1/2) cot((theta-phi)/2) for x = (cos theta, sin theta), y = (cos phi, sin phi),
// n(x) = x
double cot_kernel_normal(double theta, double phi, double cutoff = kSingularCutoff);

// ((x-y)/|x-y|^2) . n(x) on the unit circle; identically 1/2
double radial_kernel_normal(double theta, double phi, double cutoff = kSingularCutoff);

}  // namespace vpanel
