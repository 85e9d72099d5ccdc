#include "vpanel/fields.hpp"

#include <cmath>
#include <stdexcept>

#include "vpanel/errors.hpp"
#include "vpanel/kernels.hpp"

namespace vpanel {

RadialBlob uniform_blob(Point2 center, double support_radius, double total_mass) {
  if (support_radius <= 0.0) {
    throw std::invalid_argument("uniform_blob: support_radius must be positive");
  }
  const double w0 = total_mass / (kPi * support_radius * support_radius);
  RadialBlob b;
  b.center = center;
  b.support_radius = support_radius;
  b.total_mass = total_mass;
  b.omega = [w0, support_radius](double r) { return r <= support_radius ? w0 : 0.0; };
  b.cumulative_circulation = [w0, support_radius](double r) {
    const double rc = std::min(r, support_radius);
    return kPi * w0 * rc * rc;
  };
  return b;
}

RadialBlob parabolic_blob(Point2 center, double support_radius, double total_mass) {
  if (support_radius <= 0.0) {
    throw std::invalid_argument("parabolic_blob: support_radius must be positive");
  }
  // total = 2*pi*w0 int_0^R (1-(r/R)^2) r dr = pi*w0*R^2/2
  const double r2 = support_radius * support_radius;
  const double w0 = 2.0 * total_mass / (kPi * r2);
  RadialBlob b;
  b.center = center;
  b.support_radius = support_radius;
  b.total_mass = total_mass;
  b.omega = [w0, support_radius, r2](double r) {
    return r <= support_radius ? w0 * (1.0 - r * r / r2) : 0.0;
  };
  b.cumulative_circulation = [w0, support_radius, r2](double r) {
    const double rc = std::min(r, support_radius);
    const double s = rc * rc / r2;
    return kPi * w0 * r2 * s * (1.0 - 0.5 * s);
  };
  return b;
}

void validate_exterior(const VorticityConfig& config, double margin) {
  for (const auto& v : config.vortices) {
    if (norm(v.position) <= 1.0 + margin) {
      throw DomainError("vortex at distance " + std::to_string(norm(v.position)) +
                        " from the origin violates the exterior margin");
    }
  }
  for (const auto& b : config.blobs) {
    if (norm(b.center) - b.support_radius <= 1.0 + margin) {
      throw DomainError("blob support intersects the protective margin around the disk");
    }
  }
}

double alpha(const VorticityConfig& config) {
  double a = config.gamma;
  for (const auto& v : config.vortices) a += v.strength;
  for (const auto& b : config.blobs) a += b.total_mass;
  return a;
}

Vec2 velocity_plane(const VorticityConfig& config, Point2 x) {
  Vec2 u{0.0, 0.0};
  for (const auto& v : config.vortices) {
    u += v.strength * biot_savart_plane(x, v.position);
  }
  for (const auto& b : config.blobs) {
    const Vec2 d = x - b.center;
    const double r = norm(d);
    if (r < kSingularCutoff) continue;  // center of a radial patch is a stagnation point
    const double circ = b.cumulative_circulation(std::min(r, b.support_radius));
    u += (circ / (kTwoPi * r * r)) * perp(d);
  }
  return u;
}

namespace {

// image term of the remainder flow for one blob:
// -(1/2pi) int_support (x - y*)^perp / |x - y*|^2 omega(y) dy
// polar midpoint rule about the center, doubled until two levels agree
Vec2 blob_image_term(const RadialBlob& b, Point2 x, double quad_tol) {
  auto level = [&](int nr, int nb) {
    Vec2 acc{0.0, 0.0};
    const double dr = b.support_radius / nr;
    const double db = kTwoPi / nb;
    for (int i = 0; i < nr; ++i) {
      const double r = (i + 0.5) * dr;
      const double w = b.omega(r) * r * dr * db;
      if (w == 0.0) continue;
      for (int j = 0; j < nb; ++j) {
        const double beta = (j + 0.5) * db;
        const Point2 y{b.center.x1 + r * std::cos(beta), b.center.x2 + r * std::sin(beta)};
        acc += -w * biot_savart_plane(x, image_point(y));
      }
    }
    return acc;
  };

  // successive levels converge at h^2 in the radial direction (the angular
  // direction is periodic and resolves much faster); Richardson extrapolation
  // of consecutive levels removes the h^2 term, and the loop stops when two
  // extrapolants agree
  int nr = 8, nb = 16;
  Vec2 coarse = level(nr, nb);
  Vec2 prev_ext{0.0, 0.0};
  bool have_ext = false;
  for (int it = 0; it < 9; ++it) {
    nr *= 2;
    nb *= 2;
    const Vec2 fine = level(nr, nb);
    const Vec2 ext = (1.0 / 3.0) * (4.0 * fine - coarse);
    if (have_ext && norm(ext - prev_ext) < quad_tol) return ext;
    prev_ext = ext;
    have_ext = true;
    coarse = fine;
  }
  return prev_ext;
}

}  // namespace

Vec2 velocity_remainder_exact(const VorticityConfig& config, Point2 x, double quad_tol) {
  if (norm(x) < 1.0 - 4e-16) {
    throw DomainError("velocity_remainder_exact: point inside the unit disk");
  }
  Vec2 u = alpha(config) * harmonic_field(x);
  for (const auto& v : config.vortices) {
    u += -v.strength * biot_savart_plane(x, image_point(v.position));
  }
  for (const auto& b : config.blobs) {
    u += blob_image_term(b, x, quad_tol);
  }
  return u;
}

Vec2 velocity_total_exact(const VorticityConfig& config, Point2 x, double quad_tol) {
  return velocity_plane(config, x) + velocity_remainder_exact(config, x, quad_tol);
}

VelocityEvaluator make_plane_evaluator(const VorticityConfig& config) {
  return {[config](Point2 x) { return velocity_plane(config, x); },
          FieldDomain::plane, "u_P"};
}

VelocityEvaluator make_remainder_evaluator(const VorticityConfig& config) {
  return {[config](Point2 x) { return velocity_remainder_exact(config, x); },
          FieldDomain::exterior, "u_R"};
}

VelocityEvaluator make_total_evaluator(const VorticityConfig& config) {
  return {[config](Point2 x) { return velocity_total_exact(config, x); },
          FieldDomain::exterior_minus_singularities, "u"};
}

}  // namespace vpanel
