#include "rmcut/geom.hpp"

#include <algorithm>
#include <unordered_map>

namespace rmcut {

double signed_turn(Point2 a, Point2 b, Point2 c, const Tolerance& tol) {
  const Point2 u = b - a;
  const Point2 v = c - b;
  if (norm(u) <= tol.eps_len || norm(v) <= tol.eps_len)
    throw DegenerateInput("signed_turn: consecutive points coincide");
  return signed_angle(u, v);
}

namespace {

// Signed distance of q from the directed line through p1 -> p2.
double side_distance(Point2 p1, Point2 p2, Point2 q) {
  const Point2 d = p2 - p1;
  const double len = norm(d);
  if (len == 0.0) return 0.0;
  return cross(d, q - p1) / len;
}

int sign_with_slack(double v, double eps) {
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

}  // namespace

bool segments_properly_intersect(Point2 p1, Point2 p2, Point2 q1, Point2 q2,
                                 const Tolerance& tol) {
  const int s1 = sign_with_slack(side_distance(p1, p2, q1), tol.eps_len);
  const int s2 = sign_with_slack(side_distance(p1, p2, q2), tol.eps_len);
  if (s1 == 0 || s2 == 0 || s1 == s2) return false;
  const int s3 = sign_with_slack(side_distance(q1, q2, p1), tol.eps_len);
  const int s4 = sign_with_slack(side_distance(q1, q2, p2), tol.eps_len);
  return s3 != 0 && s4 != 0 && s3 != s4;
}

namespace {

struct HullFace {
  Triangle v;
  Point3 normal;
  double offset;
  bool alive = true;
};

std::uint64_t edge_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

HullFace make_face(std::span<const Point3> pts, VertexId a, VertexId b, VertexId c) {
  const Point3 n = cross(pts[b] - pts[a], pts[c] - pts[a]);
  const double len = norm(n);
  const Point3 unit = len > 0.0 ? n / len : Point3{};
  return {{a, b, c}, unit, dot(unit, pts[a])};
}

}  // namespace

std::vector<Triangle> convex_hull_3d(std::span<const Point3> pts, const Tolerance& tol) {
  const std::size_t n = pts.size();
  if (n < 4) throw DegenerateHull("convex_hull_3d: need at least 4 points");

  double scale = 0.0;
  for (const auto& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  const double eps = std::max(tol.eps_len, 1e-12) * std::max(scale, 1.0);

  // Seed tetrahedron from extreme points.
  VertexId i0 = 0, i1 = 0, i2 = 0, i3 = 0;
  double best = -1.0;
  for (VertexId i = 1; i < n; ++i) {
    const double d = dist(pts[i], pts[i0]);
    if (d > best) best = d, i1 = i;
  }
  if (best <= eps) throw DegenerateHull("convex_hull_3d: coincident points");
  best = -1.0;
  const Point3 axis = normalized(pts[i1] - pts[i0]);
  for (VertexId i = 0; i < n; ++i) {
    const Point3 w = pts[i] - pts[i0];
    const double d = norm(w - axis * dot(w, axis));
    if (d > best) best = d, i2 = i;
  }
  if (best <= eps) throw DegenerateHull("convex_hull_3d: collinear points");
  best = -1.0;
  const Point3 pn = normalized(cross(pts[i1] - pts[i0], pts[i2] - pts[i0]));
  for (VertexId i = 0; i < n; ++i) {
    const double d = std::abs(dot(pn, pts[i] - pts[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (best <= eps) throw DegenerateHull("convex_hull_3d: coplanar points");

  std::vector<HullFace> faces;
  faces.reserve(4 * static_cast<std::size_t>(n));
  std::unordered_map<std::uint64_t, FaceId> owner;  // directed edge -> face
  auto add_face = [&](VertexId a, VertexId b, VertexId c) {
    const auto id = static_cast<FaceId>(faces.size());
    faces.push_back(make_face(pts, a, b, c));
    owner[edge_key(a, b)] = id;
    owner[edge_key(b, c)] = id;
    owner[edge_key(c, a)] = id;
  };

  if (dot(pn, pts[i3] - pts[i0]) > 0.0) std::swap(i1, i2);
  // Now i3 lies below the plane (i0, i1, i2) oriented by its normal.
  add_face(i0, i1, i2);
  add_face(i0, i3, i1);
  add_face(i1, i3, i2);
  add_face(i2, i3, i0);

  std::vector<FaceId> visible;
  std::vector<std::pair<VertexId, VertexId>> horizon;
  std::vector<char> is_visible;
  for (VertexId p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    visible.clear();
    for (FaceId f = 0; f < faces.size(); ++f) {
      if (faces[f].alive && dot(faces[f].normal, pts[p]) - faces[f].offset > eps)
        visible.push_back(f);
    }
    if (visible.empty()) continue;
    is_visible.assign(faces.size(), 0);
    for (FaceId f : visible) is_visible[f] = 1;
    horizon.clear();
    for (FaceId f : visible) {
      const Triangle t = faces[f].v;
      for (int k = 0; k < 3; ++k) {
        const VertexId a = t[k], b = t[(k + 1) % 3];
        const FaceId nb = owner.at(edge_key(b, a));
        if (!is_visible[nb]) horizon.emplace_back(a, b);
      }
    }
    for (FaceId f : visible) {
      faces[f].alive = false;
      const Triangle t = faces[f].v;
      for (int k = 0; k < 3; ++k) owner.erase(edge_key(t[k], t[(k + 1) % 3]));
    }
    for (auto [a, b] : horizon) add_face(a, b, p);
  }

  std::vector<Triangle> out;
  for (const auto& f : faces)
    if (f.alive) out.push_back(f.v);
  return out;
}

}  // namespace rmcut
