#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "rmcut/error.hpp"

namespace rmcut {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Comparison slack used by every predicate in the library.
struct Tolerance {
  double eps_angle = 1e-9;  ///< radians
  double eps_len = 1e-9;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  constexpr Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  constexpr Point2 operator-() const { return {-x, -y}; }
  constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
  constexpr bool operator==(const Point2&) const = default;
};

constexpr Point2 operator*(double s, Point2 p) { return p * s; }
constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }
inline Point2 normalized(Point2 a) { return a / norm(a); }
/// Counterclockwise rotation by `angle` radians.
inline Point2 rotated(Point2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
constexpr Point2 perp(Point2 a) { return {-a.y, a.x}; }
inline Point2 unit_from_angle(double angle) {
  return {std::cos(angle), std::sin(angle)};
}
/// Unsigned angle between two nonzero vectors, in [0, pi].
inline double angle_between(Point2 a, Point2 b) {
  return std::atan2(std::abs(cross(a, b)), dot(a, b));
}
/// Signed ccw angle from a to b, in [-pi, pi].
inline double signed_angle(Point2 a, Point2 b) {
  return std::atan2(cross(a, b), dot(a, b));
}

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3 operator+(Point3 o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Point3 operator-(Point3 o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Point3 operator-() const { return {-x, -y, -z}; }
  constexpr Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Point3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr bool operator==(const Point3&) const = default;
};

constexpr Point3 operator*(double s, Point3 p) { return p * s; }
constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(Point3 a, Point3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 a) { return std::sqrt(dot(a, a)); }
inline double dist(Point3 a, Point3 b) { return norm(a - b); }
inline Point3 normalized(Point3 a) { return a / norm(a); }
inline double angle_between(Point3 a, Point3 b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;
using Triangle = std::array<VertexId, 3>;

/// Signed turn at b of the polyline a -> b -> c, in [-pi, pi]; ccw positive.
/// Throws DegenerateInput when consecutive points coincide within eps_len.
double signed_turn(Point2 a, Point2 b, Point2 c, const Tolerance& tol = {});

/// True iff the two segments cross transversally at a single point interior
/// to both. Contact at endpoints (within eps_len) and collinear overlap are
/// not crossings.
bool segments_properly_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2,
                                 const Tolerance& tol = {});

/// Convex hull of a 3D point set by incremental insertion. Faces index into
/// `points`, are outward oriented (ccw seen from outside), and only reference
/// points that are hull vertices. Throws DegenerateHull for fewer than four
/// points or (near-)coplanar input.
std::vector<Triangle> convex_hull_3d(std::span<const Point3> points,
                                     const Tolerance& tol = {});

}  // namespace rmcut
