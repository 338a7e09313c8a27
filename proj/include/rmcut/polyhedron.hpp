#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmcut/geom.hpp"

namespace rmcut {

/// Closed triangulated convex surface. Faces are ccw seen from outside.
/// Connectivity is derived once by the constructor; the class is immutable.
class Polyhedron {
 public:
  struct EdgeFaces {
    FaceId left;   ///< face holding the directed edge (lo, hi)
    FaceId right;  ///< face holding (hi, lo)
  };

  Polyhedron() = default;
  /// Throws DegenerateInput unless the faces form a closed, consistently
  /// oriented 2-manifold with every vertex used.
  Polyhedron(std::vector<Point3> vertices, std::vector<Triangle> faces);

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<Triangle>& faces() const { return faces_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Undirected edges keyed (lo, hi).
  const std::map<std::pair<VertexId, VertexId>, EdgeFaces>& edges() const { return edges_; }
  bool has_edge(VertexId a, VertexId b) const;
  /// Face holding the directed edge a -> b.
  std::optional<FaceId> face_with_edge(VertexId a, VertexId b) const;

  /// Neighbours of v in ccw order seen from outside; fan(v)[i] is the face
  /// (v, ring(v)[i], ring(v)[i+1]).
  const std::vector<VertexId>& ring(VertexId v) const { return rings_[v]; }
  const std::vector<FaceId>& fan(VertexId v) const { return fans_[v]; }

  /// Interior angle of face f at its vertex v.
  double angle_at(FaceId f, VertexId v) const;
  Point3 normal(FaceId f) const;  ///< unit, outward
  double face_area(FaceId f) const;

 private:
  std::vector<Point3> vertices_;
  std::vector<Triangle> faces_;
  std::map<std::pair<VertexId, VertexId>, EdgeFaces> edges_;
  std::vector<std::vector<VertexId>> rings_;
  std::vector<std::vector<FaceId>> fans_;
};

/// Hull of n random unit-sphere points (normalised Gaussian triples), plus
/// N = (0,0,1) and S = (0,0,-1) appended when `add_poles`. `z_scale` != 1
/// squashes every point to the ellipsoid (1, 1, z_scale). Bit-reproducible
/// per seed. Retries with fresh sub-seeds up to three times on DegenerateHull.
Polyhedron random_spherical(std::size_t n, std::uint64_t seed, bool add_poles,
                            double z_scale = 1.0, const Tolerance& tol = {});

/// omega_v = 2 pi - sum of incident face angles.
std::vector<double> curvatures(const Polyhedron& p);

struct GeodesicOrder {
  std::vector<double> gamma;   ///< arccos of the unit direction's z
  std::vector<VertexId> order; ///< descending gamma, ties by index
};

/// Ties within `tie_eps` keep index order.
GeodesicOrder geodesic_order(const Polyhedron& p, double tie_eps = 1e-9);

/// Face with the most southward outward normal; ties within 1e-12 go to the
/// lower index.
FaceId bottommost_triangle(const Polyhedron& p);

/// One pass: each obtuse face whose longest edge is shared with a non-obtuse
/// face untouched so far gets the foot of its altitude inserted on that edge,
/// turning the two faces into four. Inserted vertices are flat.
Polyhedron split_obtuse(const Polyhedron& p, const Tolerance& tol = {});

bool is_obtuse(const Polyhedron& p, FaceId f, const Tolerance& tol = {});

void write_obj(std::ostream& out, const Polyhedron& p);
/// Reads v / f records (1-indexed, "f a/b/c" forms accepted). Polygonal
/// faces are fan-triangulated. Throws ParseError.
Polyhedron read_obj(std::istream& in);

/// Standard solids used as fixtures.
Polyhedron regular_tetrahedron();
Polyhedron triangulated_cube();
Polyhedron regular_octahedron();

}  // namespace rmcut
