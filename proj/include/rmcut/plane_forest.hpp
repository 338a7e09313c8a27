#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rmcut/rm_path.hpp"

namespace rmcut {

struct Circle {
  Point2 center;
  double radius = 0.0;
};

/// Smallest enclosing circle (Welzl, iterative move-to-front form).
Circle min_enclosing_circle(std::span<const Point2> points);

/// Plane graph with a convex outer boundary. Faces are usually triangles;
/// general convex polygons are accepted so that non-triangulated plane graphs
/// can be handled by the same code.
struct ConvexDomain {
  std::vector<Point2> vertices;
  std::vector<std::vector<VertexId>> faces;
  std::vector<VertexId> boundary;  ///< ccw
  Point2 center;                   ///< minimum enclosing circle centre x
  double radius = 0.0;

  std::vector<std::vector<VertexId>> neighbors;  ///< sorted
  std::vector<char> on_boundary;

  bool has_edge(VertexId a, VertexId b) const;
  bool is_triangulated() const;
  std::vector<VertexId> interior_vertices() const;
  PlanarPath path_points(std::span<const VertexId> path) const;
};

/// Builds adjacency, orients the boundary ccw and computes the enclosing
/// circle. Throws DegenerateInput when the boundary is not a convex polygon of
/// mesh edges or an edge is shared by more than two faces.
ConvexDomain make_domain(std::vector<Point2> vertices, std::vector<std::vector<VertexId>> faces,
                         std::vector<VertexId> boundary, const Tolerance& tol = {});

/// Double cone at `apex` whose baseline is tangent to the circle about the
/// domain centre through the apex. Each cone spans 90 deg; the in-cone points
/// toward the centre, the out-cone away from it.
struct Hourglass {
  Point2 apex;
  Point2 baseline;              ///< unit tangent
  Point2 inward;                ///< unit axis of the in-cone
  std::pair<Point2, Point2> in_cone;
  std::pair<Point2, Point2> out_cone;

  bool in_cone_contains(Point2 direction, const Tolerance& tol = {}) const;
  bool out_cone_contains(Point2 direction, const Tolerance& tol = {}) const;
};

/// Returns nullopt when the apex coincides with the centre (no baseline).
std::optional<Hourglass> hourglass_at(Point2 center, Point2 apex);

/// Every boundary vertex's wedge of the domain contains its hourglass in-cone.
bool is_round(const ConvexDomain& c, const Tolerance& tol = {});

/// No face angle exceeds pi/2 + eps_angle.
bool is_non_obtuse(const ConvexDomain& c, const Tolerance& tol = {});

/// `q` = u_0 ... u_k indexed inward from u_0 on the boundary. Each edge
/// u_i u_{i+1} must lie in the in-cone at u_i and the out-cone at u_{i+1}.
/// Throws NotAnEdge if a consecutive pair is not a mesh edge.
bool is_hourglass_path(const ConvexDomain& c, std::span<const VertexId> q,
                       const Tolerance& tol = {});

/// Worst turn angle of the path v_0 ... v_k (v_k on the boundary). For k >= 2
/// the maximum over 1 <= i < k of the angle from v_i - v_0 to v_{i+1} - v_i,
/// which exceeds pi/2 exactly where rm w.r.t. v_0 fails. For k = 1 the angle
/// between v_1 - v_0 and the tangent at v_1 of the circle about the centre.
double path_turn_quality(const ConvexDomain& c, std::span<const VertexId> q);

/// Forest of boundary-rooted trees. parent[v] points one step toward the
/// boundary; boundary vertices and unattached vertices have no parent.
struct CutForest {
  std::vector<std::optional<VertexId>> parent;
  std::vector<double> tau;  ///< worst turn of the chosen path; NaN where unset

  explicit CutForest(std::size_t n = 0) : parent(n), tau(n, std::numeric_limits<double>::quiet_NaN()) {}

  std::vector<VertexId> path_to_root(VertexId v) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  /// Boundary vertices with at least one child, ascending.
  std::vector<VertexId> roots() const;
};

/// Greedy forest growth: interior vertices in order of decreasing distance
/// from the centre (ties by index); each joins, over one mesh edge, the
/// already-connected neighbour whose resulting path is rm w.r.t. the new
/// vertex with the smallest worst turn. Ties prefer the neighbour nearer the
/// centre, then the smaller index. Throws NoRmConnection on a dead end.
CutForest algorithm1(const ConvexDomain& c, const Tolerance& tol = {});

/// Re-checks a forest: every interior vertex attached, no cycles, each root on
/// the boundary with all paths rm, and the face dual left connected.
struct ForestCheck {
  bool spanning = false;
  bool all_rm = false;
  bool dual_connected = false;
  bool ok() const { return spanning && all_rm && dual_connected; }
};
ForestCheck verify_forest(const ConvexDomain& c, const CutForest& f, const Tolerance& tol = {});

/// Exhaustive search for an rm spanning forest. Throws TooLarge above
/// `max_interior` interior vertices.
struct OracleResult {
  bool exists = false;
  std::optional<CutForest> witness;
};
OracleResult oracle_rm_forest_exists(const ConvexDomain& c, std::size_t max_interior = 14,
                                     const Tolerance& tol = {});

/// Concentric hexagonal rings of near-equilateral triangles: a jittered
/// triangular lattice with a centre vertex and ring j of 6j vertices. The
/// outer ring is an exact regular hexagon. Jitter is drawn from `seed` and
/// shrunk until the instance is non-obtuse and round.
ConvexDomain make_ring_domain(int rings, std::uint64_t seed, const Tolerance& tol = {});

/// Square grid of right isosceles triangles (diagonals alternating so every
/// interior vertex has degree 4 or 8) clipped to an octagon, centre on a grid
/// vertex. Non-obtuse with right angles.
ConvexDomain make_octagon_grid_domain(int half_size);

/// Counterexample plane graph (convex faces) and its triangulation, with the
/// vertex names used by the impossibility argument. Both are 4-fold rotation
/// symmetric; names refer to the sector through `ab`.
struct AppendixFixture {
  ConvexDomain domain;
  VertexId x, ab, a, b, a_prime, ab_prime, cd_prime, b_prime, c_prime;
};
AppendixFixture appendix_graph_g();
AppendixFixture appendix_graph_gt();

}  // namespace rmcut
