#include "rmcut/polyhedron.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "rmcut/random.hpp"

namespace rmcut {

Polyhedron::Polyhedron(std::vector<Point3> vertices, std::vector<Triangle> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const std::size_t n = vertices_.size();
  if (n < 4 || faces_.size() < 4) throw DegenerateInput("Polyhedron: need >= 4 vertices and faces");

  std::map<std::pair<VertexId, VertexId>, FaceId> directed;
  for (FaceId f = 0; f < faces_.size(); ++f) {
    const auto& t = faces_[f];
    for (int i = 0; i < 3; ++i) {
      if (t[i] >= n) throw DegenerateInput("Polyhedron: face index out of range");
      const VertexId a = t[i], b = t[(i + 1) % 3];
      if (a == b) throw DegenerateInput("Polyhedron: repeated vertex in face");
      if (!directed.emplace(std::pair{a, b}, f).second)
        throw DegenerateInput("Polyhedron: directed edge used twice (orientation or manifoldness)");
    }
  }
  for (const auto& [e, f] : directed) {
    const auto twin = directed.find({e.second, e.first});
    if (twin == directed.end()) throw DegenerateInput("Polyhedron: surface is not closed");
    if (e.first < e.second) edges_.emplace(e, EdgeFaces{f, twin->second});
  }

  // Walk each vertex star: from face (v, a, b) the next face ccw is (v, b, c).
  rings_.assign(n, {});
  fans_.assign(n, {});
  std::vector<std::optional<FaceId>> any_face(n);
  for (FaceId f = 0; f < faces_.size(); ++f)
    for (VertexId v : faces_[f])
      if (!any_face[v]) any_face[v] = f;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [e, f] : directed) ++degree[e.first];
  for (VertexId v = 0; v < n; ++v) {
    if (!any_face[v]) throw DegenerateInput("Polyhedron: unused vertex");
    FaceId f = *any_face[v];
    do {
      const auto& t = faces_[f];
      const int i = t[0] == v ? 0 : t[1] == v ? 1 : 2;
      const VertexId a = t[(i + 1) % 3], b = t[(i + 2) % 3];
      rings_[v].push_back(a);
      fans_[v].push_back(f);
      f = directed.at({v, b});
      if (fans_[v].size() > degree[v]) throw DegenerateInput("Polyhedron: vertex star is not a disk");
    } while (f != *any_face[v]);
    if (fans_[v].size() != degree[v]) throw DegenerateInput("Polyhedron: vertex star is not a single disk");
  }
  if (static_cast<long>(n) - static_cast<long>(edges_.size()) + static_cast<long>(faces_.size()) != 2)
    throw DegenerateInput("Polyhedron: Euler characteristic is not 2");
}

bool Polyhedron::has_edge(VertexId a, VertexId b) const {
  return edges_.count(std::minmax(a, b)) > 0;
}

std::optional<FaceId> Polyhedron::face_with_edge(VertexId a, VertexId b) const {
  const auto it = edges_.find(std::minmax(a, b));
  if (it == edges_.end()) return std::nullopt;
  return a < b ? it->second.left : it->second.right;
}

double Polyhedron::angle_at(FaceId f, VertexId v) const {
  const auto& t = faces_[f];
  const int i = t[0] == v ? 0 : t[1] == v ? 1 : 2;
  if (t[i] != v) throw DegenerateInput("angle_at: vertex not on face");
  const Point3 p = vertices_[v];
  return angle_between(vertices_[t[(i + 1) % 3]] - p, vertices_[t[(i + 2) % 3]] - p);
}

Point3 Polyhedron::normal(FaceId f) const {
  const auto& t = faces_[f];
  return normalized(cross(vertices_[t[1]] - vertices_[t[0]], vertices_[t[2]] - vertices_[t[0]]));
}

double Polyhedron::face_area(FaceId f) const {
  const auto& t = faces_[f];
  return 0.5 * norm(cross(vertices_[t[1]] - vertices_[t[0]], vertices_[t[2]] - vertices_[t[0]]));
}

Polyhedron random_spherical(std::size_t n, std::uint64_t seed, bool add_poles, double z_scale,
                            const Tolerance& tol) {
  if (n < 4) throw DegenerateInput("random_spherical: n must be >= 4");
  if (!(z_scale > 0)) throw DegenerateInput("random_spherical: z_scale must be positive");
  for (std::uint64_t attempt = 0; attempt <= 3; ++attempt) {
    Rng rng(attempt == 0 ? seed : sub_seed(seed, attempt));
    std::vector<Point3> pts;
    pts.reserve(n + 2);
    while (pts.size() < n) {
      const Point3 g{rng.normal(), rng.normal(), rng.normal()};
      if (norm(g) < 1e-9) continue;
      const Point3 u = normalized(g);
      pts.push_back({u.x, u.y, u.z * z_scale});
    }
    if (add_poles) {
      pts.push_back({0.0, 0.0, z_scale});
      pts.push_back({0.0, 0.0, -z_scale});
    }
    try {
      auto faces = convex_hull_3d(pts, tol);
      return Polyhedron(std::move(pts), std::move(faces));
    } catch (const DegenerateHull&) {
    } catch (const DegenerateInput&) {
      // A point swallowed by the hull; resample.
    }
  }
  throw DegenerateHull("random_spherical: hull degenerate after retries");
}

std::vector<double> curvatures(const Polyhedron& p) {
  std::vector<double> omega(p.vertex_count(), kTwoPi);
  for (FaceId f = 0; f < p.face_count(); ++f)
    for (VertexId v : p.faces()[f]) omega[v] -= p.angle_at(f, v);
  return omega;
}

GeodesicOrder geodesic_order(const Polyhedron& p, double tie_eps) {
  GeodesicOrder g;
  g.gamma.reserve(p.vertex_count());
  for (const Point3& v : p.vertices()) g.gamma.push_back(std::acos(std::clamp(normalized(v).z, -1.0, 1.0)));
  g.order.resize(p.vertex_count());
  for (VertexId v = 0; v < g.order.size(); ++v) g.order[v] = v;
  std::sort(g.order.begin(), g.order.end(), [&](VertexId a, VertexId b) {
    if (std::abs(g.gamma[a] - g.gamma[b]) > tie_eps) return g.gamma[a] > g.gamma[b];
    return a < b;
  });
  return g;
}

FaceId bottommost_triangle(const Polyhedron& p) {
  FaceId best = 0;
  double best_down = -p.normal(0).z;
  for (FaceId f = 1; f < p.face_count(); ++f) {
    const double down = -p.normal(f).z;
    if (down > best_down + 1e-12) best = f, best_down = down;
  }
  return best;
}

bool is_obtuse(const Polyhedron& p, FaceId f, const Tolerance& tol) {
  for (VertexId v : p.faces()[f])
    if (p.angle_at(f, v) > kPi / 2 + tol.eps_angle) return true;
  return false;
}

Polyhedron split_obtuse(const Polyhedron& p, const Tolerance& tol) {
  std::vector<Point3> verts = p.vertices();
  std::vector<Triangle> faces = p.faces();
  std::vector<char> touched(p.face_count(), 0);
  for (FaceId f = 0; f < p.face_count(); ++f) {
    if (touched[f] || !is_obtuse(p, f, tol)) continue;
    const auto& t = p.faces()[f];
    int oi = 0;
    for (int i = 1; i < 3; ++i)
      if (p.angle_at(f, t[i]) > p.angle_at(f, t[oi])) oi = i;
    const VertexId o = t[oi], a = t[(oi + 1) % 3], b = t[(oi + 2) % 3];
    const FaceId g = *p.face_with_edge(b, a);
    if (touched[g] || is_obtuse(p, g, tol)) continue;
    const auto& tg = p.faces()[g];
    const VertexId r = tg[0] != a && tg[0] != b ? tg[0] : tg[1] != a && tg[1] != b ? tg[1] : tg[2];

    const Point3 pa = verts[a], pb = verts[b], ab = pb - pa;
    const Point3 foot = pa + ab * (dot(verts[o] - pa, ab) / dot(ab, ab));
    const auto h = static_cast<VertexId>(verts.size());
    verts.push_back(foot);
    // f = (o, a, b) -> (o, a, h), (o, h, b); g = (r, b, a) -> (r, b, h), (r, h, a).
    faces[f] = {o, a, h};
    faces.push_back({o, h, b});
    faces[g] = {r, b, h};
    faces.push_back({r, h, a});
    touched[f] = touched[g] = 1;
  }
  return Polyhedron(std::move(verts), std::move(faces));
}

void write_obj(std::ostream& out, const Polyhedron& p) {
  out.precision(17);
  for (const Point3& v : p.vertices()) out << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
  for (const Triangle& t : p.faces()) out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

Polyhedron read_obj(std::istream& in) {
  std::vector<Point3> verts;
  std::vector<Triangle> faces;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "v") {
      Point3 v;
      if (!(ls >> v.x >> v.y >> v.z)) throw ParseError("obj line " + std::to_string(lineno) + ": bad vertex");
      verts.push_back(v);
    } else if (tag == "f") {
      std::vector<VertexId> idx;
      std::string tok;
      while (ls >> tok) {
        long i = 0;
        try {
          i = std::stol(tok.substr(0, tok.find('/')));
        } catch (const std::exception&) {
          throw ParseError("obj line " + std::to_string(lineno) + ": bad face index");
        }
        if (i < 0) i += static_cast<long>(verts.size()) + 1;
        if (i < 1 || i > static_cast<long>(verts.size()))
          throw ParseError("obj line " + std::to_string(lineno) + ": face index out of range");
        idx.push_back(static_cast<VertexId>(i - 1));
      }
      if (idx.size() < 3) throw ParseError("obj line " + std::to_string(lineno) + ": face needs 3 indices");
      for (std::size_t k = 1; k + 1 < idx.size(); ++k) faces.push_back({idx[0], idx[k], idx[k + 1]});
    }
  }
  try {
    return Polyhedron(std::move(verts), std::move(faces));
  } catch (const DegenerateInput& e) {
    throw ParseError(std::string("obj: ") + e.what());
  }
}

Polyhedron regular_tetrahedron() {
  std::vector<Point3> v{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (auto& p : v) p = normalized(p);
  return Polyhedron(v, convex_hull_3d(v));
}

Polyhedron triangulated_cube() {
  std::vector<Point3> v;
  for (int i = 0; i < 8; ++i) v.push_back(normalized(Point3{i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0}));
  // Coplanar quads: triangulate explicitly rather than through the hull.
  const std::vector<std::array<VertexId, 4>> quads{
      {0, 2, 3, 1}, {4, 5, 7, 6}, {0, 1, 5, 4}, {2, 6, 7, 3}, {0, 4, 6, 2}, {1, 3, 7, 5}};
  std::vector<Triangle> faces;
  for (const auto& q : quads) {
    faces.push_back({q[0], q[1], q[2]});
    faces.push_back({q[0], q[2], q[3]});
  }
  return Polyhedron(v, faces);
}

Polyhedron regular_octahedron() {
  std::vector<Point3> v{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return Polyhedron(v, convex_hull_3d(v));
}

}  // namespace rmcut
