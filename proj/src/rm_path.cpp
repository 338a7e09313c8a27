#include "rmcut/rm_path.hpp"

#include <algorithm>

namespace rmcut {

PlanarPath reversed(const PlanarPath& q) {
  PlanarPath r = q;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

PlanarPath prepended(const PlanarPath& q, Point2 v) {
  PlanarPath r;
  r.vertices.reserve(q.size() + 1);
  r.vertices.push_back(v);
  r.vertices.insert(r.vertices.end(), q.vertices.begin(), q.vertices.end());
  return r;
}

namespace {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 d = b - a;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return dist(p, a + d * t);
}

double segment_distance(Point2 a, Point2 b, Point2 c, Point2 d) {
  const Tolerance exact{0.0, 0.0};
  if (segments_properly_intersect(a, b, c, d, exact)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

}  // namespace

bool is_simple(const PlanarPath& q, const Tolerance& tol) {
  const std::size_t n = q.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (dist(q[i], q[i + 1]) <= tol.eps_len) return false;
  // Adjacent edges must not fold back onto each other.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Point2 u = q[i - 1] - q[i], v = q[i + 1] - q[i];
    if (angle_between(u, v) <= tol.eps_angle) return false;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 2; j + 1 < n; ++j)
      if (segment_distance(q[i], q[i + 1], q[j], q[j + 1]) <= tol.eps_len) return false;
  return true;
}

bool is_rm_wrt(const PlanarPath& q, std::size_t i, const Tolerance& tol) {
  const Point2 src = q[i];
  const double limit = kPi / 2 - tol.eps_angle;
  for (std::size_t j = i + 1; j + 1 < q.size(); ++j) {
    const Point2 back = src - q[j];
    const Point2 fwd = q[j + 1] - q[j];
    if (angle_between(back, fwd) < limit) return false;
  }
  return true;
}

bool is_rm(const PlanarPath& q, const Tolerance& tol) {
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    if (!is_rm_wrt(q, i, tol)) return false;
  return true;
}

double worst_turn_from_source(const PlanarPath& q) {
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < q.size(); ++i)
    worst = std::max(worst, angle_between(q[i] - q[0], q[i + 1] - q[i]));
  return worst;
}

bool OCone::contains(Point2 direction, const Tolerance& tol) const {
  double a = signed_angle(dir_lo, direction);
  if (a < -tol.eps_angle) a += kTwoPi;
  return a <= measure + tol.eps_angle;
}

OCone ocone(const PlanarPath& q, std::size_t j, const Tolerance& tol) {
  if (j < 1 || j >= q.size()) throw DegenerateInput("ocone: index out of range");
  const Point2 apex = q[j];
  std::vector<double> angles;
  for (std::size_t i = 0; i < j; ++i) {
    const Point2 w = q[i] - apex;
    if (norm(w) > tol.eps_len) angles.push_back(std::atan2(w.y, w.x));
  }
  if (angles.empty()) throw DegenerateInput("ocone: no preceding vertex distinct from apex");
  std::sort(angles.begin(), angles.end());

  // The smallest arc covering every preceding direction is the complement of
  // the largest circular gap between sorted directions.
  std::size_t gap_end = 0;
  double largest_gap = angles.front() + kTwoPi - angles.back();
  for (std::size_t k = 1; k < angles.size(); ++k) {
    const double gap = angles[k] - angles[k - 1];
    if (gap > largest_gap) largest_gap = gap, gap_end = k;
  }
  const double arc = kTwoPi - largest_gap;
  if (arc > kPi + tol.eps_angle) throw InternalError("ocone: empty forward cone");
  const double arc_start = angles[gap_end];

  OCone cone;
  cone.apex = apex;
  cone.dir_lo = unit_from_angle(arc_start + arc + kPi / 2);
  cone.dir_hi = unit_from_angle(arc_start + 3 * kPi / 2);
  cone.measure = std::max(0.0, kPi - arc);
  return cone;
}

bool BackRegion::contains(Point2 p, const Tolerance& tol) const {
  for (const auto& h : halfplanes)
    if (dot(p - h.point, h.normal) < -tol.eps_len) return false;
  return true;
}

std::vector<Point2> BackRegion::clipped(Point2 center, double extent) const {
  std::vector<Point2> poly = {center + Point2{-extent, -extent}, center + Point2{extent, -extent},
                              center + Point2{extent, extent}, center + Point2{-extent, extent}};
  std::vector<Point2> next;
  for (const auto& h : halfplanes) {
    next.clear();
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point2 a = poly[i], b = poly[(i + 1) % poly.size()];
      const double da = dot(a - h.point, h.normal), db = dot(b - h.point, h.normal);
      if (da >= 0) next.push_back(a);
      if ((da >= 0) != (db >= 0)) next.push_back(a + (b - a) * (da / (da - db)));
    }
    poly.swap(next);
    if (poly.empty()) break;
  }
  return poly;
}

double BackRegion::clipped_area(Point2 center, double extent) const {
  const auto poly = clipped(center, extent);
  double area = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) area += cross(poly[i], poly[(i + 1) % poly.size()]);
  return std::abs(area) / 2;
}

BackRegion back_region(const PlanarPath& q) {
  BackRegion r;
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    r.halfplanes.push_back({q[i], normalized(q[i] - q[i + 1])});
  return r;
}

bool can_extend_backward(const PlanarPath& q, Point2 v_new, const Tolerance& tol) {
  if (dist(v_new, q[0]) <= tol.eps_len) return false;
  return back_region(q).contains(v_new, tol) && is_simple(prepended(q, v_new), tol);
}

}  // namespace rmcut
