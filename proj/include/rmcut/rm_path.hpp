#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rmcut/geom.hpp"

namespace rmcut {

/// Directed planar polyline v_0 ... v_k. By convention v_0 is the interior
/// source and v_k the boundary end; radial monotonicity is always judged in
/// that direction.
struct PlanarPath {
  std::vector<Point2> vertices;

  PlanarPath() = default;
  PlanarPath(std::initializer_list<Point2> pts) : vertices(pts) {}
  explicit PlanarPath(std::vector<Point2> pts) : vertices(std::move(pts)) {}

  std::size_t size() const { return vertices.size(); }
  /// Index of the last vertex (k).
  std::size_t last() const { return vertices.size() - 1; }
  const Point2& operator[](std::size_t i) const { return vertices[i]; }
  Point2& operator[](std::size_t i) { return vertices[i]; }
};

PlanarPath reversed(const PlanarPath& q);
PlanarPath prepended(const PlanarPath& q, Point2 v);

/// No two non-adjacent edges touch, adjacent edges meet only at their shared
/// vertex, and consecutive vertices are distinct.
bool is_simple(const PlanarPath& q, const Tolerance& tol = {});

/// Radially monotone w.r.t. v_i: every angle (v_i, v_j, v_{j+1}) for j > i is
/// at least pi/2 - eps_angle.
bool is_rm_wrt(const PlanarPath& q, std::size_t i, const Tolerance& tol = {});

/// Radially monotone w.r.t. each of v_0 ... v_{k-1}.
bool is_rm(const PlanarPath& q, const Tolerance& tol = {});

/// Worst angle from v_i - v_0 to v_{i+1} - v_i over 0 < i < k (zero when
/// k < 2). Exceeds pi/2 exactly where rm w.r.t. v_0 fails.
double worst_turn_from_source(const PlanarPath& q);

/// Forward-extension cone at v_j: the directions d with d . (v_i - v_j) <= 0
/// for every i < j. Spans ccw from dir_lo to dir_hi.
struct OCone {
  Point2 apex;
  Point2 dir_lo;
  Point2 dir_hi;
  double measure = 0.0;

  bool contains(Point2 direction, const Tolerance& tol = {}) const;
};

/// Requires 1 <= j <= k. Throws InternalError when the preceding vertices do
/// not fit in a closed halfplane seen from v_j (the cone would be empty).
OCone ocone(const PlanarPath& q, std::size_t j, const Tolerance& tol = {});

struct HalfPlane {
  Point2 point;   ///< on the boundary line
  Point2 normal;  ///< unit, pointing into the halfplane
};

/// Region of points that may be prepended to an rm path while keeping it rm:
/// one halfplane per edge (v_i, v_{i+1}), bounded by the line through v_i
/// orthogonal to the edge, on the side away from v_{i+1}.
struct BackRegion {
  std::vector<HalfPlane> halfplanes;

  bool contains(Point2 p, const Tolerance& tol = {}) const;
  /// Vertices of the region clipped to the axis-aligned square of half-width
  /// `extent` centred at `center` (ccw; empty if the clip is empty).
  std::vector<Point2> clipped(Point2 center, double extent) const;
  /// Area of `clipped(center, extent)`.
  double clipped_area(Point2 center, double extent) const;
};

BackRegion back_region(const PlanarPath& q);

/// True iff `v_new` lies in back_region(q) and the prepended path is simple.
bool can_extend_backward(const PlanarPath& q, Point2 v_new, const Tolerance& tol = {});

}  // namespace rmcut
