#include "rmcut/plane_forest.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace rmcut {

// ---------------------------------------------------------------------------
// Minimum enclosing circle

namespace {

bool inside(const Circle& c, Point2 p) {
  return dist(c.center, p) <= c.radius * (1 + 1e-12) + 1e-12;
}

Circle circle2(Point2 a, Point2 b) { return {(a + b) * 0.5, dist(a, b) * 0.5}; }

Circle circle3(Point2 a, Point2 b, Point2 c) {
  const Point2 ab = b - a, ac = c - a;
  const double d = 2 * cross(ab, ac);
  if (std::abs(d) < 1e-300) {
    // Collinear: the widest pair decides.
    Circle best = circle2(a, b);
    for (const Circle& k : {circle2(a, c), circle2(b, c)})
      if (k.radius > best.radius) best = k;
    return best;
  }
  const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  const Point2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  return {a + off, norm(off)};
}

}  // namespace

Circle min_enclosing_circle(std::span<const Point2> points) {
  if (points.empty()) throw DegenerateInput("min_enclosing_circle: no points");
  std::vector<Point2> p(points.begin(), points.end());
  std::mt19937_64 rng(0x5eedu);
  std::shuffle(p.begin(), p.end(), rng);
  Circle c{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (inside(c, p[i])) continue;
    c = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(c, p[j])) continue;
      c = circle2(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k)
        if (!inside(c, p[k])) c = circle3(p[i], p[j], p[k]);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Domain

bool ConvexDomain::has_edge(VertexId a, VertexId b) const {
  if (a >= neighbors.size()) return false;
  return std::binary_search(neighbors[a].begin(), neighbors[a].end(), b);
}

bool ConvexDomain::is_triangulated() const {
  return std::all_of(faces.begin(), faces.end(), [](const auto& f) { return f.size() == 3; });
}

std::vector<VertexId> ConvexDomain::interior_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices.size(); ++v)
    if (!on_boundary[v]) out.push_back(v);
  return out;
}

PlanarPath ConvexDomain::path_points(std::span<const VertexId> path) const {
  PlanarPath q;
  q.vertices.reserve(path.size());
  for (VertexId v : path) q.vertices.push_back(vertices.at(v));
  return q;
}

ConvexDomain make_domain(std::vector<Point2> vertices, std::vector<std::vector<VertexId>> faces,
                         std::vector<VertexId> boundary, const Tolerance& tol) {
  const std::size_t n = vertices.size();
  if (n < 3 || faces.empty() || boundary.size() < 3)
    throw DegenerateInput("make_domain: need >= 3 vertices, a face and a boundary");

  ConvexDomain c;
  c.vertices = std::move(vertices);
  c.neighbors.assign(n, {});
  std::map<std::pair<VertexId, VertexId>, int> directed;
  for (auto& f : faces) {
    if (f.size() < 3) throw DegenerateInput("make_domain: face with < 3 vertices");
    double area = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= n) throw DegenerateInput("make_domain: face index out of range");
      area += cross(c.vertices[f[i]], c.vertices[f[(i + 1) % f.size()]]);
    }
    if (area < 0) std::reverse(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const VertexId a = f[i], b = f[(i + 1) % f.size()];
      if (++directed[{a, b}] > 1) throw DegenerateInput("make_domain: edge shared by > 2 faces");
      c.neighbors[a].push_back(b);
      c.neighbors[b].push_back(a);
    }
  }
  for (auto& nb : c.neighbors) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  c.faces = std::move(faces);

  double barea = 0;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i] >= n) throw DegenerateInput("make_domain: boundary index out of range");
    barea += cross(c.vertices[boundary[i]], c.vertices[boundary[(i + 1) % boundary.size()]]);
  }
  if (barea < 0) std::reverse(boundary.begin(), boundary.end());
  c.on_boundary.assign(n, 0);
  const std::size_t m = boundary.size();
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId p = boundary[(i + m - 1) % m], v = boundary[i], q = boundary[(i + 1) % m];
    if (c.on_boundary[v]) throw DegenerateInput("make_domain: boundary repeats a vertex");
    c.on_boundary[v] = 1;
    if (!c.has_edge(v, q)) throw DegenerateInput("make_domain: boundary step is not an edge");
    // Each boundary edge has exactly one face, on its left.
    if (directed.count({v, q}) != 1 || directed.count({q, v}) != 0)
      throw DegenerateInput("make_domain: boundary edge does not bound the mesh");
    const Point2 e1 = c.vertices[v] - c.vertices[p], e2 = c.vertices[q] - c.vertices[v];
    if (cross(e1, e2) < -tol.eps_len * (norm(e1) + norm(e2)))
      throw DegenerateInput("make_domain: boundary is not convex");
  }
  for (const auto& [e, count] : directed)
    if (!directed.count({e.second, e.first}) && !(c.on_boundary[e.first] && c.on_boundary[e.second]))
      throw DegenerateInput("make_domain: mesh has a hole");
  c.boundary = std::move(boundary);

  const Circle mec = min_enclosing_circle(c.vertices);
  c.center = mec.center;
  c.radius = mec.radius;
  return c;
}

// ---------------------------------------------------------------------------
// Hourglasses

namespace {

bool in_quarter_cone(Point2 axis, Point2 direction, const Tolerance& tol) {
  if (norm(direction) <= tol.eps_len) return false;
  return angle_between(axis, direction) <= kPi / 4 + tol.eps_angle;
}

/// ccw angle from a to b in [0, 2pi).
double ccw_angle(Point2 a, Point2 b) {
  double t = signed_angle(a, b);
  return t < 0 ? t + kTwoPi : t;
}

}  // namespace

bool Hourglass::in_cone_contains(Point2 direction, const Tolerance& tol) const {
  return in_quarter_cone(inward, direction, tol);
}

bool Hourglass::out_cone_contains(Point2 direction, const Tolerance& tol) const {
  return in_quarter_cone(-inward, direction, tol);
}

std::optional<Hourglass> hourglass_at(Point2 center, Point2 apex) {
  const Point2 d = center - apex;
  if (norm(d) < 1e-12) return std::nullopt;
  Hourglass h;
  h.apex = apex;
  h.inward = normalized(d);
  h.baseline = perp(h.inward);
  h.in_cone = {rotated(h.inward, -kPi / 4), rotated(h.inward, kPi / 4)};
  h.out_cone = {rotated(-h.inward, -kPi / 4), rotated(-h.inward, kPi / 4)};
  return h;
}

bool is_round(const ConvexDomain& c, const Tolerance& tol) {
  const std::size_t m = c.boundary.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 p = c.vertices[c.boundary[(i + m - 1) % m]];
    const Point2 v = c.vertices[c.boundary[i]];
    const Point2 q = c.vertices[c.boundary[(i + 1) % m]];
    const auto h = hourglass_at(c.center, v);
    if (!h) return false;
    // Interior wedge runs ccw from the outgoing edge to the incoming one.
    const double wedge = ccw_angle(q - v, p - v);
    for (Point2 ray : {h->in_cone.first, h->in_cone.second}) {
      const double a = ccw_angle(q - v, ray);
      if (a > wedge + tol.eps_angle && a < kTwoPi - tol.eps_angle) return false;
    }
  }
  return true;
}

bool is_non_obtuse(const ConvexDomain& c, const Tolerance& tol) {
  for (const auto& f : c.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Point2 v = c.vertices[f[i]];
      const Point2 p = c.vertices[f[(i + f.size() - 1) % f.size()]];
      const Point2 q = c.vertices[f[(i + 1) % f.size()]];
      if (angle_between(p - v, q - v) > kPi / 2 + tol.eps_angle) return false;
    }
  return true;
}

bool is_hourglass_path(const ConvexDomain& c, std::span<const VertexId> q, const Tolerance& tol) {
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    if (!c.has_edge(q[i], q[i + 1])) throw NotAnEdge("is_hourglass_path: pair is not a mesh edge");
    const Point2 a = c.vertices[q[i]], b = c.vertices[q[i + 1]];
    if (const auto h = hourglass_at(c.center, a); h && !h->in_cone_contains(b - a, tol)) return false;
    if (const auto h = hourglass_at(c.center, b); h && !h->out_cone_contains(a - b, tol)) return false;
  }
  return true;
}

double path_turn_quality(const ConvexDomain& c, std::span<const VertexId> q) {
  if (q.size() < 2) return 0.0;
  const Point2 v0 = c.vertices[q[0]];
  if (q.size() == 2) {
    const Point2 v1 = c.vertices[q[1]];
    const Point2 r = v1 - c.center;
    if (norm(r) < 1e-12) return 0.0;
    const double a = angle_between(v1 - v0, perp(r));
    return std::min(a, kPi - a);
  }
  return worst_turn_from_source(c.path_points(q));
}

// ---------------------------------------------------------------------------
// Forests

std::vector<VertexId> CutForest::path_to_root(VertexId v) const {
  std::vector<VertexId> path{v};
  while (parent[path.back()]) {
    if (path.size() > parent.size()) throw CyclicCut("path_to_root: parent chain has a cycle");
    path.push_back(*parent[path.back()]);
  }
  return path;
}

std::vector<std::pair<VertexId, VertexId>> CutForest::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v = 0; v < parent.size(); ++v)
    if (parent[v]) out.emplace_back(v, *parent[v]);
  return out;
}

std::vector<VertexId> CutForest::roots() const {
  std::set<VertexId> r;
  for (VertexId v = 0; v < parent.size(); ++v)
    if (parent[v]) r.insert(path_to_root(v).back());
  return {r.begin(), r.end()};
}

CutForest algorithm1(const ConvexDomain& c, const Tolerance& tol) {
  const std::size_t n = c.vertices.size();
  std::vector<VertexId> order = c.interior_vertices();
  std::vector<double> r(n);
  for (VertexId v = 0; v < n; ++v) r[v] = dist(c.vertices[v], c.center);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return r[a] > r[b]; });

  CutForest f(n);
  std::vector<char> connected(c.on_boundary.begin(), c.on_boundary.end());
  for (VertexId v0 : order) {
    std::optional<VertexId> best;
    double best_tau = 0.0;
    double best_rejected = std::numeric_limits<double>::infinity();
    for (VertexId v1 : c.neighbors[v0]) {
      if (!connected[v1]) continue;
      std::vector<VertexId> path{v0};
      const auto tail = f.path_to_root(v1);
      path.insert(path.end(), tail.begin(), tail.end());
      const double tau = path_turn_quality(c, path);
      if (!is_rm_wrt(c.path_points(path), 0, tol)) {
        best_rejected = std::min(best_rejected, tau);
        continue;
      }
      bool better = !best;
      if (best) {
        if (tau < best_tau - tol.eps_angle) better = true;
        else if (tau <= best_tau + tol.eps_angle)
          better = r[v1] < r[*best] - tol.eps_len ||
                   (r[v1] <= r[*best] + tol.eps_len && v1 < *best);
      }
      if (better) best = v1, best_tau = tau;
    }
    if (!best) throw NoRmConnection(v0, best_rejected);
    f.parent[v0] = best;
    f.tau[v0] = best_tau;
    connected[v0] = 1;
  }
  return f;
}

ForestCheck verify_forest(const ConvexDomain& c, const CutForest& f, const Tolerance& tol) {
  ForestCheck out;
  const std::size_t n = c.vertices.size();
  if (f.parent.size() != n) return out;

  out.spanning = true;
  out.all_rm = true;
  for (VertexId v = 0; v < n; ++v) {
    if (c.on_boundary[v]) {
      if (f.parent[v]) out.spanning = false;
      continue;
    }
    if (!f.parent[v] || !c.has_edge(v, *f.parent[v])) {
      out.spanning = false;
      continue;
    }
    std::vector<VertexId> path;
    try {
      path = f.path_to_root(v);
    } catch (const CyclicCut&) {
      out.spanning = false;
      continue;
    }
    if (!c.on_boundary[path.back()]) out.spanning = false;
    if (!is_rm(c.path_points(path), tol)) out.all_rm = false;
  }

  // Faces stay connected across every uncut edge.
  std::set<std::pair<VertexId, VertexId>> cut;
  for (auto [a, b] : f.edges()) cut.insert(std::minmax(a, b));
  std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> edge_faces;
  for (std::size_t i = 0; i < c.faces.size(); ++i) {
    const auto& fc = c.faces[i];
    for (std::size_t k = 0; k < fc.size(); ++k)
      edge_faces[std::minmax(fc[k], fc[(k + 1) % fc.size()])].push_back(i);
  }
  std::vector<std::vector<std::size_t>> dual(c.faces.size());
  for (const auto& [e, fs] : edge_faces)
    if (fs.size() == 2 && !cut.count(e)) {
      dual[fs[0]].push_back(fs[1]);
      dual[fs[1]].push_back(fs[0]);
    }
  std::vector<char> seen(c.faces.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : dual[u])
      if (!seen[w]) seen[w] = 1, ++reached, queue.push_back(w);
  }
  out.dual_connected = reached == c.faces.size();
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle

namespace {

/// Neighbours of `src` that begin at least one simple path to the boundary
/// that is rm w.r.t. every one of its vertices. Prefix-checkable: the
/// condition on edge (v_j, v_{j+1}) involves only v_0 ... v_j.
std::vector<VertexId> rm_first_steps(const ConvexDomain& c, VertexId src, const Tolerance& tol) {
  std::vector<VertexId> path{src};
  std::vector<char> on_path(c.vertices.size(), 0);
  on_path[src] = 1;
  const double limit = kPi / 2 - tol.eps_angle;
  std::function<bool()> reach = [&]() -> bool {
    const VertexId last = path.back();
    const Point2 pl = c.vertices[last];
    for (VertexId nb : c.neighbors[last]) {
      if (on_path[nb]) continue;
      const Point2 fwd = c.vertices[nb] - pl;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < path.size() && ok; ++i)
        ok = angle_between(c.vertices[path[i]] - pl, fwd) >= limit;
      if (!ok) continue;
      if (c.on_boundary[nb]) return true;
      path.push_back(nb);
      on_path[nb] = 1;
      const bool found = reach();
      on_path[nb] = 0;
      path.pop_back();
      if (found) return true;
    }
    return false;
  };
  std::vector<VertexId> out;
  for (VertexId nb : c.neighbors[src]) {
    if (c.on_boundary[nb]) {
      out.push_back(nb);
      continue;
    }
    path.push_back(nb);
    on_path[nb] = 1;
    if (reach()) out.push_back(nb);
    on_path[nb] = 0;
    path.pop_back();
  }
  return out;
}

class ForestSearch {
 public:
  ForestSearch(const ConvexDomain& c, const Tolerance& tol) : c_(c), tol_(tol), f_(c.vertices.size()) {
    resolved_.assign(c.on_boundary.begin(), c.on_boundary.end());
  }

  bool run(std::vector<VertexId> order, std::vector<std::vector<VertexId>> choices) {
    order_ = std::move(order);
    choices_ = std::move(choices);
    return search(0);
  }

  const CutForest& forest() const { return f_; }

 private:
  bool search(std::size_t idx) {
    if (idx == order_.size()) return true;
    const VertexId v = order_[idx];
    for (VertexId u : choices_[v]) {
      f_.parent[v] = u;
      if (closes_cycle(v)) continue;
      std::vector<VertexId> newly;
      if (resolved_[u] && !resolve(v, newly)) {
        undo(newly);
        continue;
      }
      if (search(idx + 1)) return true;
      undo(newly);
    }
    f_.parent[v].reset();
    return false;
  }

  bool closes_cycle(VertexId v) const {
    VertexId w = *f_.parent[v];
    while (!resolved_[w] && f_.parent[w]) {
      if (w == v) return true;
      w = *f_.parent[w];
    }
    return w == v;
  }

  /// v's chain now reaches the boundary: check it and every pending subtree
  /// hanging off it, each only w.r.t. its own source (the rest of each chain
  /// was checked when it resolved).
  bool resolve(VertexId v, std::vector<VertexId>& newly) {
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
      const VertexId w = stack.back();
      stack.pop_back();
      if (!is_rm_wrt(c_.path_points(f_.path_to_root(w)), 0, tol_)) return false;
      resolved_[w] = 1;
      newly.push_back(w);
      for (VertexId y : c_.neighbors[w])
        if (!resolved_[y] && f_.parent[y] == w) stack.push_back(y);
    }
    return true;
  }

  void undo(const std::vector<VertexId>& newly) {
    for (VertexId w : newly) resolved_[w] = 0;
  }

  const ConvexDomain& c_;
  Tolerance tol_;
  CutForest f_;
  std::vector<char> resolved_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> choices_;
};

}  // namespace

OracleResult oracle_rm_forest_exists(const ConvexDomain& c, std::size_t max_interior,
                                     const Tolerance& tol) {
  const auto interior = c.interior_vertices();
  if (interior.size() > max_interior)
    throw TooLarge("oracle_rm_forest_exists: " + std::to_string(interior.size()) +
                   " interior vertices exceed the bound");

  // A vertex without any rm path to the boundary certifies nonexistence.
  std::vector<std::vector<VertexId>> choices(c.vertices.size());
  for (VertexId v : interior) {
    choices[v] = rm_first_steps(c, v, tol);
    if (choices[v].empty()) return {};
  }

  // Breadth-first from the boundary so chains resolve early.
  std::vector<int> depth(c.vertices.size(), -1);
  std::deque<VertexId> queue;
  for (VertexId b : c.boundary) depth[b] = 0, queue.push_back(b);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : c.neighbors[u])
      if (depth[w] < 0) depth[w] = depth[u] + 1, queue.push_back(w);
  }
  std::vector<VertexId> order = interior;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return depth[a] < depth[b]; });

  ForestSearch search(c, tol);
  if (!search.run(order, choices)) return {};
  return {true, search.forest()};
}

// ---------------------------------------------------------------------------
// Generators

ConvexDomain make_ring_domain(int rings, std::uint64_t seed, const Tolerance& tol) {
  if (rings < 1) throw DegenerateInput("make_ring_domain: need at least one ring");
  // Triangular lattice in axial coordinates; ring j is the hexagon of lattice
  // distance j, so the outer ring is a regular hexagon of 6 * rings vertices.
  auto ring_of = [](int q, int r) { return std::max({std::abs(q), std::abs(r), std::abs(q + r)}); };
  const Point2 e1{1.0, 0.0}, e2{0.5, std::sqrt(3.0) / 2};
  std::map<std::pair<int, int>, VertexId> id;
  std::vector<std::pair<int, int>> cells;
  for (int q = -rings; q <= rings; ++q)
    for (int r = -rings; r <= rings; ++r)
      if (ring_of(q, r) <= rings) {
        id[{q, r}] = static_cast<VertexId>(cells.size());
        cells.emplace_back(q, r);
      }
  std::vector<std::vector<VertexId>> faces;
  auto add = [&](std::initializer_list<std::pair<int, int>> t) {
    std::vector<VertexId> f;
    for (auto qr : t) {
      auto it = id.find(qr);
      if (it == id.end()) return;
      f.push_back(it->second);
    }
    faces.push_back(std::move(f));
  };
  for (int q = -rings - 1; q <= rings; ++q)
    for (int r = -rings - 1; r <= rings; ++r) {
      add({{q, r}, {q + 1, r}, {q, r + 1}});
      add({{q + 1, r}, {q + 1, r + 1}, {q, r + 1}});
    }
  std::vector<VertexId> boundary;
  for (VertexId v = 0; v < cells.size(); ++v)
    if (ring_of(cells[v].first, cells[v].second) == rings) boundary.push_back(v);
  auto base = [&](VertexId v) { return e1 * cells[v].first + e2 * cells[v].second; };
  std::sort(boundary.begin(), boundary.end(), [&](VertexId a, VertexId b) {
    const Point2 pa = base(a), pb = base(b);
    return std::atan2(pa.y, pa.x) < std::atan2(pb.y, pb.x);
  });

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 200; ++attempt) {
    // Jitter shrinks with failed attempts; the last attempt is the exact lattice.
    const double amp = attempt < 199 ? 0.15 * (1.0 - attempt / 200.0) : 0.0;
    std::vector<Point2> pts;
    for (VertexId v = 0; v < cells.size(); ++v) {
      Point2 p = base(v);
      if (ring_of(cells[v].first, cells[v].second) < rings) {
        const double rad = amp * std::sqrt(unit(rng)), ang = kTwoPi * unit(rng);
        p = p + unit_from_angle(ang) * rad;
      }
      pts.push_back(p);
    }
    ConvexDomain c = make_domain(std::move(pts), faces, boundary, tol);
    if (is_non_obtuse(c, tol) && is_round(c, tol)) return c;
  }
  throw InternalError("make_ring_domain: no valid instance");
}

ConvexDomain make_octagon_grid_domain(int half_size) {
  if (half_size < 1) throw DegenerateInput("make_octagon_grid_domain: half_size must be >= 1");
  const int h = half_size;
  // Corner cut |x| + |y| <= k with k of the parity that makes the cut run
  // along square diagonals of the alternating pattern.
  int k = static_cast<int>(std::lround(1.5 * h));
  if (k % 2 != 0) ++k;
  if (k > 2 * h) k = 2 * h;
  std::map<std::pair<int, int>, VertexId> id;
  std::vector<Point2> pts;
  auto vid = [&](int x, int y) {
    auto [it, fresh] = id.try_emplace({x, y}, static_cast<VertexId>(pts.size()));
    if (fresh) pts.push_back({double(x), double(y)});
    return it->second;
  };
  auto ok = [&](int x, int y) { return std::abs(x) + std::abs(y) <= k; };
  std::vector<std::vector<VertexId>> faces;
  std::map<std::pair<VertexId, VertexId>, int> directed;
  auto add = [&](std::array<std::pair<int, int>, 3> t) {
    for (auto [x, y] : t)
      if (!ok(x, y)) return;
    std::vector<VertexId> f;
    for (auto [x, y] : t) f.push_back(vid(x, y));
    for (std::size_t i = 0; i < 3; ++i) ++directed[{f[i], f[(i + 1) % 3]}];
    faces.push_back(std::move(f));
  };
  for (int x = -h; x < h; ++x)
    for (int y = -h; y < h; ++y) {
      if ((x + y) % 2 == 0) {
        add({{{x, y}, {x + 1, y}, {x + 1, y + 1}}});
        add({{{x, y}, {x + 1, y + 1}, {x, y + 1}}});
      } else {
        add({{{x, y}, {x + 1, y}, {x, y + 1}}});
        add({{{x + 1, y}, {x + 1, y + 1}, {x, y + 1}}});
      }
    }
  // Boundary: directed edges without a twin, chained.
  std::map<VertexId, VertexId> next;
  for (const auto& [e, cnt] : directed)
    if (!directed.count({e.second, e.first})) next[e.first] = e.second;
  std::vector<VertexId> boundary{next.begin()->first};
  while (true) {
    const VertexId nv = next.at(boundary.back());
    if (nv == boundary.front()) break;
    boundary.push_back(nv);
  }
  return make_domain(std::move(pts), std::move(faces), std::move(boundary));
}

// ---------------------------------------------------------------------------
// Counterexample fixtures

namespace {

Point2 quarter_turn(Point2 p, int k) {
  for (int i = 0; i < ((k % 4) + 4) % 4; ++i) p = perp(p);
  return p;
}

struct AppendixLayout {
  std::vector<Point2> pts;
  VertexId x = 0;
  std::array<VertexId, 4> m{}, w{}, d{}, s{}, t{};
};

AppendixLayout appendix_layout() {
  // Sector generators; every other vertex is a quarter turn of one of these.
  const Point2 m0{1.0, 0.0}, w0{1.55, 0.1}, d0{2.1, 0.95}, s0{1.6, -1.8}, t0{2.8, 0.45};
  AppendixLayout l;
  l.pts.push_back({0.0, 0.0});
  for (int k = 0; k < 4; ++k) {
    auto push = [&](Point2 p) {
      l.pts.push_back(quarter_turn(p, k));
      return static_cast<VertexId>(l.pts.size() - 1);
    };
    l.m[k] = push(m0);
    l.w[k] = push(w0);
    l.d[k] = push(d0);
    l.s[k] = push(s0);
    l.t[k] = push(t0);
  }
  return l;
}

AppendixFixture name_fixture(ConvexDomain domain, const AppendixLayout& l) {
  AppendixFixture f;
  f.domain = std::move(domain);
  f.x = l.x;
  f.ab = l.m[0];
  f.a = l.w[3];
  f.b = l.w[0];
  f.a_prime = l.d[3];
  f.ab_prime = l.s[0];
  f.cd_prime = l.d[0];
  f.b_prime = l.t[0];
  f.c_prime = l.s[1];
  return f;
}

std::vector<VertexId> appendix_boundary(const AppendixLayout& l) {
  std::vector<VertexId> b;
  for (int k = 0; k < 4; ++k) b.push_back(l.s[k]), b.push_back(l.t[k]);
  return b;
}

}  // namespace

AppendixFixture appendix_graph_g() {
  const auto l = appendix_layout();
  std::vector<std::vector<VertexId>> faces;
  for (int k = 0; k < 4; ++k) {
    const int kn = (k + 1) % 4, kp = (k + 3) % 4;
    faces.push_back({l.x, l.m[k], l.w[k], l.m[kn]});
    faces.push_back({l.w[k], l.m[k], l.w[kp], l.d[kp], l.s[k]});
    faces.push_back({l.w[k], l.s[k], l.t[k], l.d[k]});
    faces.push_back({l.t[k], l.s[kn], l.d[k]});
  }
  return name_fixture(make_domain(l.pts, std::move(faces), appendix_boundary(l)), l);
}

AppendixFixture appendix_graph_gt() {
  const auto l = appendix_layout();
  std::vector<std::vector<VertexId>> faces;
  for (int k = 0; k < 4; ++k) {
    const int kn = (k + 1) % 4, kp = (k + 3) % 4;
    faces.push_back({l.x, l.m[k], l.m[kn]});
    faces.push_back({l.m[k], l.w[k], l.m[kn]});
    faces.push_back({l.w[k], l.m[k], l.w[kp]});
    faces.push_back({l.w[k], l.w[kp], l.d[kp]});
    faces.push_back({l.w[k], l.d[kp], l.s[k]});
    faces.push_back({l.w[k], l.s[k], l.d[k]});
    faces.push_back({l.s[k], l.t[k], l.d[k]});
    faces.push_back({l.t[k], l.s[kn], l.d[k]});
  }
  return name_fixture(make_domain(l.pts, std::move(faces), appendix_boundary(l)), l);
}

}  // namespace rmcut
