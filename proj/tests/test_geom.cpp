#include <doctest.h>

#include <set>

#include "rmcut/geom.hpp"
#include "support.hpp"

using namespace rmcut;

namespace {

/// Faces of the hull by brute force: (i, j, k) is a face iff every other
/// point lies strictly behind its plane. Orientation normalised so the
/// returned set compares independently of rotation.
std::set<std::array<VertexId, 3>> brute_hull(const std::vector<Point3>& pts) {
  std::set<std::array<VertexId, 3>> out;
  const auto n = static_cast<VertexId>(pts.size());
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = 0; j < n; ++j)
      for (VertexId k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const Point3 nrm = cross(pts[j] - pts[i], pts[k] - pts[i]);
        bool face = true;
        for (VertexId m = 0; m < n && face; ++m)
          if (m != i && m != j && m != k && dot(nrm, pts[m] - pts[i]) >= 0) face = false;
        if (!face) continue;
        std::array<VertexId, 3> f{i, j, k};
        std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
        out.insert(f);
      }
  return out;
}

std::set<std::array<VertexId, 3>> canonical(const std::vector<Triangle>& faces) {
  std::set<std::array<VertexId, 3>> out;
  for (Triangle f : faces) {
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    out.insert(f);
  }
  return out;
}

std::vector<Point3> sphere_points(std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  std::vector<Point3> pts;
  while (pts.size() < n) {
    const Point3 p{rng.normal(), rng.normal(), rng.normal()};
    if (norm(p) > 1e-6) pts.push_back(normalized(p));
  }
  return pts;
}

}  // namespace

TEST_CASE("signed turn of elementary joints") {
  CHECK(signed_turn({0, 0}, {1, 0}, {2, 0}) == doctest::Approx(0.0));
  CHECK(signed_turn({0, 0}, {1, 0}, {1, 1}) == doctest::Approx(kPi / 2));
  CHECK(signed_turn({0, 0}, {1, 0}, {1, -1}) == doctest::Approx(-kPi / 2));
  CHECK_THROWS_AS(signed_turn({0, 0}, {0, 0}, {1, 1}), DegenerateInput);
  CHECK_THROWS_AS(signed_turn({0, 0}, {1, 0}, {1, 1e-12}), DegenerateInput);
}

TEST_CASE("signed turn is antisymmetric under reversal") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Point2 a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Point2 b{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Point2 c{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double t = signed_turn(a, b, c);
    CHECK(t >= -kPi);
    CHECK(t <= kPi);
    CHECK(signed_turn(c, b, a) == doctest::Approx(-t).epsilon(1e-12));
  }
}

TEST_CASE("proper segment intersection") {
  CHECK(segments_properly_intersect({0, 0}, {2, 0}, {1, -1}, {1, 1}));
  CHECK_FALSE(segments_properly_intersect({0, 0}, {1, 0}, {1, 0}, {2, 0}));
  CHECK_FALSE(segments_properly_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  // T-junction at an endpoint and collinear overlap do not count.
  CHECK_FALSE(segments_properly_intersect({0, 0}, {2, 0}, {1, 0}, {1, 1}));
  CHECK_FALSE(segments_properly_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));
}

TEST_CASE("hull of regular solids") {
  const std::vector<Point3> tet{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  CHECK(convex_hull_3d(tet).size() == 4);
  const std::vector<Point3> oct{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  const auto f = convex_hull_3d(oct);
  CHECK(f.size() == 8);
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const auto& t : f)
    for (int i = 0; i < 3; ++i) edges.insert(std::minmax(t[i], t[(i + 1) % 3]));
  CHECK(edges.size() == 12);
}

TEST_CASE("hull rejects degenerate input") {
  const std::vector<Point3> flat{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.5, 0.3, 0}};
  CHECK_THROWS_AS(convex_hull_3d(flat), DegenerateHull);
  const std::vector<Point3> three{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(convex_hull_3d(three), DegenerateHull);
}

TEST_CASE("hull of random sphere points matches brute force") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto pts = sphere_points(seed, 100);
    const auto faces = convex_hull_3d(pts);
    CHECK(faces.size() == 196);
    CHECK(canonical(faces) == brute_hull(pts));

    Point3 centroid{};
    for (const auto& p : pts) centroid = centroid + p / 100.0;
    std::set<VertexId> used;
    for (const auto& t : faces) {
      const Point3 nrm = cross(pts[t[1]] - pts[t[0]], pts[t[2]] - pts[t[0]]);
      CHECK(dot(nrm, pts[t[0]] - centroid) > 0);
      for (const auto& p : pts) CHECK(dot(normalized(nrm), p - pts[t[0]]) <= 1e-9);
      used.insert(t.begin(), t.end());
    }
    CHECK(used.size() == 100);
  }
}
