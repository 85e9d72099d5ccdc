#pragma once

#include <cmath>

namespace vpanel {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2 {
  double u1 = 0.0;
  double u2 = 0.0;
};

struct Point2 {
  double x1 = 0.0;
  double x2 = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.u1 - b.u1, a.u2 - b.u2}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.u1, s * v.u2}; }
inline Vec2 operator-(Vec2 v) { return {-v.u1, -v.u2}; }
inline Vec2& operator+=(Vec2& a, Vec2 b) { a.u1 += b.u1; a.u2 += b.u2; return a; }

inline Vec2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Point2 operator+(Point2 p, Vec2 v) { return {p.x1 + v.u1, p.x2 + v.u2}; }

// rotation by pi/2: (a, b) -> (-b, a)
inline Vec2 perp(Vec2 v) { return {-v.u2, v.u1}; }
inline Vec2 perp(Point2 p) { return {-p.x2, p.x1}; }

inline double dot(Vec2 a, Vec2 b) { return a.u1 * b.u1 + a.u2 * b.u2; }
inline double dot(Vec2 v, Point2 p) { return v.u1 * p.x1 + v.u2 * p.x2; }
inline double sqnorm(Vec2 v) { return v.u1 * v.u1 + v.u2 * v.u2; }
inline double norm(Vec2 v) { return std::hypot(v.u1, v.u2); }
inline double norm(Point2 p) { return std::hypot(p.x1, p.x2); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

}  // namespace vpanel
