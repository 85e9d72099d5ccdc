#include "vpanel/kernels.hpp"

#include <cmath>

#include "vpanel/errors.hpp"

namespace vpanel {

namespace {

// distance of an angle to the nearest multiple of 2*pi
double angular_gap(double a) {
  double r = std::remainder(a, kTwoPi);
  return std::abs(r);
}

}  // namespace

Vec2 biot_savart_plane(Point2 x, Point2 y, double cutoff) {
  const Vec2 d = x - y;
  const double r2 = sqnorm(d);
  if (r2 < cutoff * cutoff) {
    throw SingularEvaluation("biot_savart_plane: evaluation at the vortex location");
  }
  return (1.0 / (kTwoPi * r2)) * perp(d);
}

Vec2 harmonic_field(Point2 x, double cutoff) {
  const double r2 = x.x1 * x.x1 + x.x2 * x.x2;
  if (r2 < cutoff * cutoff) {
    throw SingularEvaluation("harmonic_field: evaluation at the origin");
  }
  return (1.0 / (kTwoPi * r2)) * perp(x);
}

Point2 image_point(Point2 y, double cutoff) {
  const double r2 = y.x1 * y.x1 + y.x2 * y.x2;
  if (r2 < cutoff * cutoff) {
    throw SingularEvaluation("image_point: origin has no image");
  }
  return {y.x1 / r2, y.x2 / r2};
}

Vec2 exterior_green_kernel(Point2 x, Point2 y, double cutoff) {
  const Point2 ystar = image_point(y, cutoff);
  return biot_savart_plane(x, y, cutoff) - biot_savart_plane(x, ystar, cutoff);
}

double cot_kernel_normal(double theta, double phi, double cutoff) {
  if (angular_gap(theta - phi) < cutoff) {
    throw SingularEvaluation("cot_kernel_normal: coincident angles");
  }
  return -0.5 / std::tan(0.5 * (theta - phi));
}

double radial_kernel_normal(double theta, double phi, double cutoff) {
  if (angular_gap(theta - phi) < cutoff) {
    throw SingularEvaluation("radial_kernel_normal: coincident angles");
  }
  // (x-y).x = 1 - cos(theta-phi) = 2 sin^2((theta-phi)/2) and
  // |x-y|^2 = 4 sin^2((theta-phi)/2); the raw coordinate quotient loses all
  // accuracy near the diagonal, the half-angle form does not
  const double s = std::sin(0.5 * (theta - phi));
  return (2.0 * s * s) / (4.0 * s * s);
}

}  // namespace vpanel
