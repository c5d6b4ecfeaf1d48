#pragma once

#include <cmath>
#include <numbers>

namespace circlemap {

/// A value of the map u = (u1, u2) at one node.
struct Vec2 {
  double u1 = 0.0;
  double u2 = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.u1 - b.u1, a.u2 - b.u2}; }
inline Vec2 operator-(Vec2 a) { return {-a.u1, -a.u2}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.u1, s * a.u2}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.u1 / s, a.u2 / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.u1 * b.u1 + a.u2 * b.u2; }
inline double squared_norm(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.u1, a.u2); }

/// Point on the unit circle for the angle parametrization u = (sin t, cos t).
inline Vec2 from_angle(double theta) { return {std::sin(theta), std::cos(theta)}; }

/// Rotates `a` so that its angle (in the sin/cos parametrization) grows by `alpha`.
inline Vec2 rotate(Vec2 a, double alpha) {
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  return {a.u1 * c + a.u2 * s, a.u2 * c - a.u1 * s};
}

/// Signed angle from `from` to `to` in (-pi, pi]. An exact half turn maps to +pi.
inline double angle_increment(Vec2 from, Vec2 to) {
  const double sine = to.u1 * from.u2 - to.u2 * from.u1;
  const double cosine = to.u2 * from.u2 + to.u1 * from.u1;
  const double d = std::atan2(sine, cosine);
  return d == -std::numbers::pi ? std::numbers::pi : d;
}

}  // namespace circlemap
