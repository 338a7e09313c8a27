#include "rmcut/cut_tree.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

namespace rmcut {

std::vector<std::pair<VertexId, VertexId>> CutTree::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v = 0; v < parent.size(); ++v)
    if (parent[v]) out.emplace_back(v, *parent[v]);
  return out;
}

std::vector<VertexId> CutTree::path_to_root(VertexId v) const {
  std::vector<VertexId> path{v};
  while (parent[path.back()]) {
    if (path.size() > parent.size()) throw CyclicCut("cut tree parent chain has a cycle");
    path.push_back(*parent[path.back()]);
  }
  return path;
}

std::vector<VertexId> CutTree::leaves() const {
  std::vector<char> has_child(parent.size(), 0);
  for (const auto& p : parent)
    if (p) has_child[*p] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < parent.size(); ++v)
    if (!has_child[v] && v != root) out.push_back(v);
  return out;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

FaceId choose_base(const Polyhedron& p, bool equilateral) {
  if (!equilateral) return bottommost_triangle(p);
  // Among the eight most southward faces, the one closest to equilateral.
  std::vector<FaceId> faces(p.face_count());
  for (FaceId f = 0; f < faces.size(); ++f) faces[f] = f;
  std::stable_sort(faces.begin(), faces.end(),
                   [&](FaceId a, FaceId b) { return p.normal(a).z < p.normal(b).z; });
  faces.resize(std::min<std::size_t>(8, faces.size()));
  FaceId best = faces.front();
  double best_dev = std::numeric_limits<double>::infinity();
  for (FaceId f : faces) {
    double dev = 0;
    for (VertexId v : p.faces()[f]) dev = std::max(dev, std::abs(p.angle_at(f, v) - kPi / 3));
    if (dev < best_dev - 1e-12) best = f, best_dev = dev;
  }
  return best;
}

struct Candidate {
  VertexId v1 = 0;
  double tau = 0.0;
  bool rm = false;
};

class Grower {
 public:
  Grower(const Polyhedron& p, const Algorithm2Options& opts)
      : p_(p), opts_(opts), geo_(geodesic_order(p, opts.tol.eps_angle)), omega_(curvatures(p)) {
    base_face_ = choose_base(p, opts.equilateral_base);
    const auto& t = p.faces()[base_face_];
    boundary_ = {t[0], t[1], t[2]};
    parent_.assign(p.vertex_count(), std::nullopt);
    connected_.assign(p.vertex_count(), 0);
    tau_.assign(p.vertex_count(), kNaN);
    for (VertexId v : boundary_) connected_[v] = 1;
  }

  Algorithm2Result run() {
    if (opts_.best_first) grow_best_first();
    else grow_by_latitude();
    Algorithm2Result r;
    r.mesh = p_;
    r.forest = parent_;
    r.boundary = boundary_;
    r.base_face = base_face_;
    r.tau = tau_;
    r.non_rm_vertices = non_rm_;
    r.tree.parent = parent_;
    r.tree.parent[boundary_[0]] = boundary_[1];
    r.tree.parent[boundary_[2]] = boundary_[1];
    r.tree.root = boundary_[1];
    r.tree.base = boundary_;
    r.tree.base_face = base_face_;
    return r;
  }

 private:
  bool is_boundary(VertexId v) const {
    return v == boundary_[0] || v == boundary_[1] || v == boundary_[2];
  }

  std::vector<VertexId> root_path(VertexId v) const {
    std::vector<VertexId> path{v};
    while (parent_[path.back()]) path.push_back(*parent_[path.back()]);
    return path;
  }

  Candidate score(VertexId v0, VertexId v1) const {
    std::vector<VertexId> path{v0};
    const auto tail = root_path(v1);
    path.insert(path.end(), tail.begin(), tail.end());
    Candidate c{v1, 0.0, true};
    if (path.size() == 2) {
      // Single edge: compare with the latitude circle's tangent at v1.
      const Point3 x1 = p_.vertices()[v1];
      const Point3 tangent = cross(Point3{0, 0, 1}, x1);
      if (norm(tangent) > 1e-12) {
        const double a = angle_between(x1 - p_.vertices()[v0], tangent);
        c.tau = std::min(a, kPi - a);
      }
      return c;
    }
    const CutPath3 cp = path_angles(p_, path, nullptr, &omega_);
    const PlanarPath m = build_lmr(cp).M;
    c.rm = is_rm_wrt(m, 0, opts_.tol);
    c.tau = worst_turn_from_source(m);
    return c;
  }

  /// (tau, gamma of v1, index) with tau compared within eps_angle.
  bool better(const Candidate& a, const Candidate& b) const {
    if (a.tau < b.tau - opts_.tol.eps_angle) return true;
    if (a.tau > b.tau + opts_.tol.eps_angle) return false;
    const double ga = geo_.gamma[a.v1], gb = geo_.gamma[b.v1];
    if (std::abs(ga - gb) > opts_.tol.eps_angle) return ga < gb;
    return a.v1 < b.v1;
  }

  /// Best rm candidate, else (when allowed) best non-rm one.
  std::optional<Candidate> best_for(VertexId v0, double& best_rejected) const {
    std::optional<Candidate> best_rm, best_any;
    best_rejected = std::numeric_limits<double>::infinity();
    for (VertexId v1 : p_.ring(v0)) {
      if (!connected_[v1]) continue;
      const Candidate c = score(v0, v1);
      if (c.rm) {
        if (!best_rm || better(c, *best_rm)) best_rm = c;
      } else {
        best_rejected = std::min(best_rejected, c.tau);
      }
      if (!best_any || better(c, *best_any)) best_any = c;
    }
    if (best_rm) return best_rm;
    if (opts_.allow_non_rm) return best_any;
    return std::nullopt;
  }

  void attach(VertexId v0, const Candidate& c) {
    parent_[v0] = c.v1;
    tau_[v0] = c.tau;
    connected_[v0] = 1;
    if (!c.rm) non_rm_.push_back(v0);
  }

  void grow_by_latitude() {
    for (VertexId v0 : geo_.order) {
      if (is_boundary(v0)) continue;
      double rejected = 0.0;
      const auto c = best_for(v0, rejected);
      if (!c) throw NoRmConnection(v0, rejected);
      attach(v0, *c);
    }
  }

  void grow_best_first() {
    std::size_t remaining = p_.vertex_count() - 3;
    while (remaining > 0) {
      std::optional<std::pair<VertexId, Candidate>> pick;
      VertexId stuck = 0;
      double stuck_tau = std::numeric_limits<double>::infinity();
      bool any_frontier = false;
      for (VertexId v0 = 0; v0 < p_.vertex_count(); ++v0) {
        if (connected_[v0]) continue;
        double rejected = 0.0;
        const auto c = best_for(v0, rejected);
        const bool frontier = std::any_of(p_.ring(v0).begin(), p_.ring(v0).end(),
                                          [&](VertexId w) { return connected_[w] != 0; });
        if (frontier && !c && !any_frontier) stuck = v0, stuck_tau = rejected;
        any_frontier = any_frontier || frontier;
        if (!c) continue;
        // Prefer rm over non-rm, then the usual candidate order.
        if (!pick || (c->rm && !pick->second.rm) ||
            (c->rm == pick->second.rm && better(*c, pick->second)))
          pick = std::pair{v0, *c};
      }
      if (!pick) throw NoRmConnection(stuck, stuck_tau);
      attach(pick->first, pick->second);
      --remaining;
    }
  }

  const Polyhedron& p_;
  Algorithm2Options opts_;
  GeodesicOrder geo_;
  std::vector<double> omega_;
  FaceId base_face_ = 0;
  std::array<VertexId, 3> boundary_{};
  std::vector<std::optional<VertexId>> parent_;
  std::vector<char> connected_;
  std::vector<double> tau_;
  std::vector<VertexId> non_rm_;
};

}  // namespace

Algorithm2Result algorithm2(const Polyhedron& p, const Algorithm2Options& opts) {
  try {
    return Grower(p, opts).run();
  } catch (const NoRmConnection&) {
    if (!opts.split_obtuse_retry) throw;
  }
  const Polyhedron refined = split_obtuse(p, opts.tol);
  Algorithm2Options once = opts;
  once.split_obtuse_retry = false;
  Algorithm2Result r = Grower(refined, once).run();
  r.split_applied = true;
  return r;
}

std::size_t TreeReport::non_rm_paths() const {
  return static_cast<std::size_t>(
      std::count_if(paths.begin(), paths.end(), [](const PathReport& r) { return !r.medial_rm; }));
}

bool dual_connected_after_cut(const Polyhedron& p, const CutTree& t) {
  std::set<std::pair<VertexId, VertexId>> cut;
  for (auto [a, b] : t.edges()) cut.insert(std::minmax(a, b));
  std::vector<std::vector<FaceId>> dual(p.face_count());
  for (const auto& [e, faces] : p.edges())
    if (!cut.count(e)) {
      dual[faces.left].push_back(faces.right);
      dual[faces.right].push_back(faces.left);
    }
  std::vector<char> seen(p.face_count(), 0);
  std::deque<FaceId> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const FaceId f = queue.front();
    queue.pop_front();
    for (FaceId g : dual[f])
      if (!seen[g]) seen[g] = 1, ++reached, queue.push_back(g);
  }
  return reached == p.face_count();
}

TreeReport verify_cut_tree(const Polyhedron& p, const CutTree& t, const Tolerance& tol) {
  const std::size_t n = p.vertex_count();
  if (t.parent.size() != n) throw NotSpanning("verify_cut_tree: parent table size differs from mesh");
  TreeReport rep;
  for (VertexId v = 0; v < n; ++v) {
    if (v == t.root) {
      if (t.parent[v]) throw CyclicCut("verify_cut_tree: root has a parent");
      continue;
    }
    if (!t.parent[v]) throw NotSpanning("verify_cut_tree: vertex " + std::to_string(v) + " is detached");
    if (!p.has_edge(v, *t.parent[v]))
      throw NotSpanning("verify_cut_tree: tree edge is not a mesh edge");
    if (t.path_to_root(v).back() != t.root) throw NotSpanning("verify_cut_tree: chain misses the root");
  }
  rep.acyclic = true;
  rep.spanning = true;
  rep.dual_connected = dual_connected_after_cut(p, t);

  std::vector<char> stop(n, 0);
  if (t.base)
    for (VertexId v : *t.base) stop[v] = 1;
  else
    stop[t.root] = 1;
  const std::vector<double> omega = curvatures(p);
  for (VertexId leaf : t.leaves()) {
    if (stop[leaf]) continue;
    PathReport pr;
    pr.leaf = leaf;
    pr.path.push_back(leaf);
    while (!stop[pr.path.back()]) pr.path.push_back(*t.parent[pr.path.back()]);
    const CutPath3 cp = path_angles(p, pr.path, &t.parent, &omega);
    const LMRChains ch = build_lmr(cp);
    pr.medial_rm = is_rm(ch.M, tol);
    pr.tau = worst_turn_from_source(ch.M);
    pr.tau_max = ch.tau_max;
    pr.Omega = cp.Omega;
    pr.theorem_preconditions = ch.tau_max <= kPi / 2 + tol.eps_angle && cp.Omega <= kPi + tol.eps_angle;
    pr.crossings = lmr_cross_check(ch, tol);
    rep.paths.push_back(std::move(pr));
  }
  return rep;
}

}  // namespace rmcut
