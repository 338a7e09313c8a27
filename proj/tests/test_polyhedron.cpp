#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "rmcut/polyhedron.hpp"
#include "support.hpp"

using namespace rmcut;

namespace {

double angle_sum_defect(const Polyhedron& p, VertexId v) {
  double sum = 0;
  for (const Triangle& f : p.faces())
    for (int i = 0; i < 3; ++i)
      if (f[i] == v) {
        const Point3 o = p.vertices()[v];
        sum += angle_between(p.vertices()[f[(i + 1) % 3]] - o, p.vertices()[f[(i + 2) % 3]] - o);
      }
  return kTwoPi - sum;
}

void check_euler(const Polyhedron& p) {
  CHECK(static_cast<long>(p.vertex_count()) - static_cast<long>(p.edge_count()) +
            static_cast<long>(p.face_count()) ==
        2);
  CHECK(2 * p.edge_count() == 3 * p.face_count());
}

}  // namespace

TEST_CASE("random spherical polyhedra") {
  const Polyhedron t = random_spherical(4, 1, false);
  CHECK(t.vertex_count() == 4);
  CHECK(t.face_count() == 4);

  const Polyhedron p = random_spherical(100, 7, true);
  CHECK(p.vertex_count() == 102);
  CHECK(p.face_count() == 200);
  CHECK(p.edge_count() == 300);
  check_euler(p);
  for (const Point3& v : p.vertices()) CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p.vertices()[100] == Point3{0, 0, 1});
  CHECK(p.vertices()[101] == Point3{0, 0, -1});

  const Polyhedron again = random_spherical(100, 7, true);
  CHECK(again.vertices() == p.vertices());
  CHECK(again.faces() == p.faces());
  CHECK(random_spherical(100, 8, true).vertices() != p.vertices());

  const Polyhedron e = random_spherical(60, 3, true, 0.25);
  for (const Point3& v : e.vertices())
    CHECK(v.x * v.x + v.y * v.y + v.z * v.z / 0.0625 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(random_spherical(3, 1, false), DegenerateInput);
}

TEST_CASE("faces are outward and the mesh is convex") {
  const Polyhedron p = random_spherical(80, 2, true);
  for (FaceId f = 0; f < p.face_count(); ++f) {
    const Point3 n = p.normal(f);
    const Point3 o = p.vertices()[p.faces()[f][0]];
    CHECK(dot(n, o) > 0);
    for (const Point3& v : p.vertices()) CHECK(dot(n, v - o) <= 1e-9);
  }
}

TEST_CASE("vertex rings and fans") {
  const Polyhedron p = random_spherical(30, 4, false);
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    const auto& ring = p.ring(v);
    const auto& fan = p.fan(v);
    REQUIRE(ring.size() == fan.size());
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Triangle& f = p.faces()[fan[i]];
      const Triangle want{v, ring[i], ring[(i + 1) % ring.size()]};
      bool match = false;
      for (int r = 0; r < 3; ++r) match |= f[r] == want[0] && f[(r + 1) % 3] == want[1] && f[(r + 2) % 3] == want[2];
      CHECK(match);
      CHECK(p.face_with_edge(v, ring[i]) == fan[i]);
    }
  }
  for (const auto& [e, faces] : p.edges()) {
    CHECK(p.face_with_edge(e.first, e.second) == faces.left);
    CHECK(p.face_with_edge(e.second, e.first) == faces.right);
  }
  CHECK_FALSE(p.has_edge(0, 0));
}

TEST_CASE("invalid meshes are rejected") {
  const Polyhedron t = regular_tetrahedron();
  std::vector<Triangle> open = t.faces();
  open.pop_back();
  CHECK_THROWS_AS(Polyhedron(t.vertices(), open), DegenerateInput);
  std::vector<Triangle> flipped = t.faces();
  std::swap(flipped[0][1], flipped[0][2]);
  CHECK_THROWS_AS(Polyhedron(t.vertices(), flipped), DegenerateInput);
  std::vector<Point3> extra = t.vertices();
  extra.push_back({5, 5, 5});
  CHECK_THROWS_AS(Polyhedron(extra, t.faces()), DegenerateInput);
}

TEST_CASE("curvature of standard solids") {
  for (double w : curvatures(regular_tetrahedron())) CHECK(w == doctest::Approx(kPi));
  for (double w : curvatures(triangulated_cube())) CHECK(w == doctest::Approx(kPi / 2));
  for (double w : curvatures(regular_octahedron())) CHECK(w == doctest::Approx(2 * kPi / 3));
}

TEST_CASE("total curvature is 4 pi") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Polyhedron p = random_spherical(100, seed, true);
    const auto omega = curvatures(p);
    double sum = 0;
    for (VertexId v = 0; v < p.vertex_count(); ++v) {
      CHECK(omega[v] > 0);
      CHECK(omega[v] == doctest::Approx(angle_sum_defect(p, v)).epsilon(1e-12));
      sum += omega[v];
    }
    CHECK(sum == doctest::Approx(4 * kPi).epsilon(1e-12));
  }
}

TEST_CASE("geodesic order from the north pole") {
  const Polyhedron p = random_spherical(50, 5, true);
  const GeodesicOrder g = geodesic_order(p);
  CHECK(g.gamma[50] == 0.0);  // N is index n
  CHECK(g.order.back() == 50);
  CHECK(g.order.front() == 51);
  CHECK(g.gamma[51] == doctest::Approx(kPi));
  for (std::size_t i = 1; i < g.order.size(); ++i) CHECK(g.gamma[g.order[i - 1]] >= g.gamma[g.order[i]]);

  const Polyhedron o = regular_octahedron();
  const GeodesicOrder go = geodesic_order(o);
  for (VertexId v = 0; v < o.vertex_count(); ++v)
    if (std::abs(o.vertices()[v].z) < 1e-12) CHECK(go.gamma[v] == doctest::Approx(kPi / 2));

  // Relabelling the vertices permutes the order the same way.
  std::vector<VertexId> perm(p.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(3);
  for (std::size_t i = perm.size() - 1; i > 0; --i)
    std::swap(perm[i], perm[static_cast<std::size_t>(rng.uniform() * static_cast<double>(i + 1))]);
  std::vector<Point3> verts(p.vertex_count());
  for (VertexId v = 0; v < p.vertex_count(); ++v) verts[perm[v]] = p.vertices()[v];
  std::vector<Triangle> faces;
  for (Triangle f : p.faces()) faces.push_back({perm[f[0]], perm[f[1]], perm[f[2]]});
  const GeodesicOrder gp = geodesic_order(Polyhedron(verts, faces));
  REQUIRE(gp.order.size() == g.order.size());
  for (std::size_t i = 0; i < g.order.size(); ++i) CHECK(gp.order[i] == perm[g.order[i]]);
}

TEST_CASE("bottommost triangle") {
  const Polyhedron o = regular_octahedron();
  const FaceId b = bottommost_triangle(o);
  double lowest = 1;
  for (FaceId f = 0; f < o.face_count(); ++f) lowest = std::min(lowest, o.normal(f).z);
  FaceId first = 0;
  while (o.normal(first).z > lowest + 1e-12) ++first;
  CHECK(b == first);

  int with_south = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Polyhedron p = random_spherical(100, seed, true);
    const FaceId f = bottommost_triangle(p);
    for (FaceId g = 0; g < p.face_count(); ++g) CHECK(p.normal(f).z <= p.normal(g).z + 1e-12);
    const Triangle& t = p.faces()[f];
    with_south += std::find(t.begin(), t.end(), VertexId{101}) != t.end();
  }
  // Usually, though not always, a face at the south pole.
  CHECK(with_south >= 45);
}

TEST_CASE("obtuse splitting") {
  const Polyhedron o = regular_octahedron();
  const Polyhedron same = split_obtuse(o);
  CHECK(same.vertices() == o.vertices());
  CHECK(same.faces() == o.faces());

  const Polyhedron p = random_spherical(100, 502, true);
  std::size_t obtuse = 0;
  for (FaceId f = 0; f < p.face_count(); ++f) obtuse += is_obtuse(p, f);
  REQUIRE(obtuse > 0);
  const Polyhedron s = split_obtuse(p);
  check_euler(s);
  const std::size_t added = s.vertex_count() - p.vertex_count();
  CHECK(added > 0);
  CHECK(added <= obtuse);
  CHECK(s.face_count() == p.face_count() + 2 * added);
  const auto omega = curvatures(s);
  for (VertexId v = static_cast<VertexId>(p.vertex_count()); v < s.vertex_count(); ++v) {
    CHECK(std::abs(omega[v]) < 1e-9);
    CHECK(norm(s.vertices()[v]) < 1.0);
  }
  for (VertexId v = 0; v < p.vertex_count(); ++v) CHECK(s.vertices()[v] == p.vertices()[v]);
  // Order of magnitude of the refined size: comparable to the vertex count.
  CHECK(s.vertex_count() > p.vertex_count() + p.vertex_count() / 4);
}

TEST_CASE("OBJ round trip") {
  const Polyhedron p = random_spherical(20, 9, true);
  std::stringstream s;
  write_obj(s, p);
  const Polyhedron q = read_obj(s);
  REQUIRE(q.vertex_count() == p.vertex_count());
  CHECK(q.faces() == p.faces());
  for (VertexId v = 0; v < p.vertex_count(); ++v) CHECK(dist(q.vertices()[v], p.vertices()[v]) < 1e-15);

  std::istringstream quads(
      "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nv 0 0 1\nv 1 0 1\nv 1 1 1\nv 0 1 1\n"
      "f 1 4 3 2\nf 5 6 7 8\nf 1 2 6 5\nf 2 3 7 6\nf 3 4 8 7\nf 4/1 1/1 5/1 8/1\n");
  const Polyhedron cube = read_obj(quads);
  CHECK(cube.face_count() == 12);
  for (double w : curvatures(cube)) CHECK(w == doctest::Approx(kPi / 2));

  std::istringstream bad_index("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 9\n");
  CHECK_THROWS_AS(read_obj(bad_index), ParseError);
  std::istringstream bad_number("v 0 zero 0\n");
  CHECK_THROWS_AS(read_obj(bad_number), ParseError);
}
