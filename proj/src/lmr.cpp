#include "rmcut/lmr.hpp"

#include <algorithm>
#include <numeric>

namespace rmcut {

namespace {

/// Index of neighbour w in the ccw ring of v.
std::size_t ring_index(const Polyhedron& p, VertexId v, VertexId w) {
  const auto& ring = p.ring(v);
  const auto it = std::find(ring.begin(), ring.end(), w);
  if (it == ring.end()) throw NotAPath("path step is not a mesh edge");
  return static_cast<std::size_t>(it - ring.begin());
}

/// Sum of face angles at v from neighbour `from` ccw to neighbour `to`.
double fan_angle(const Polyhedron& p, VertexId v, VertexId from, VertexId to) {
  const auto& fan = p.fan(v);
  const std::size_t d = fan.size();
  std::size_t i = ring_index(p, v, from);
  const std::size_t stop = ring_index(p, v, to);
  double sum = 0.0;
  while (i != stop) {
    sum += p.angle_at(fan[i], v);
    i = (i + 1) % d;
  }
  return sum;
}

}  // namespace

CutPath3 path_angles(const Polyhedron& p, std::span<const VertexId> q,
                     const std::vector<std::optional<VertexId>>* tree,
                     const std::vector<double>* omega) {
  if (q.size() < 2) throw NotAPath("path_angles: need at least one edge");
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    if (q[i] >= p.vertex_count() || q[i + 1] >= p.vertex_count() || !p.has_edge(q[i], q[i + 1]))
      throw NotAPath("path_angles: consecutive vertices are not a mesh edge");
    if (tree && (*tree)[q[i]] != q[i + 1] && (*tree)[q[i + 1]] != q[i])
      throw NotAPath("path_angles: path edge is not in the tree");
  }
  const std::vector<double> omega_own = omega ? std::vector<double>{} : curvatures(p);
  const std::vector<double>& omega_all = omega ? *omega : omega_own;
  const std::size_t k = q.size() - 1;
  CutPath3 cp;
  cp.vertices.assign(q.begin(), q.end());
  cp.lambda.assign(k + 1, 0.0);
  cp.rho.assign(k + 1, 0.0);
  cp.omega.resize(k + 1);
  for (std::size_t i = 0; i <= k; ++i) cp.omega[i] = omega_all[q[i]];
  for (std::size_t i = 0; i < k; ++i) cp.lengths.push_back(dist(p.vertices()[q[i]], p.vertices()[q[i + 1]]));
  for (std::size_t i = 1; i < k; ++i) {
    cp.lambda[i] = fan_angle(p, q[i], q[i + 1], q[i - 1]);
    cp.rho[i] = fan_angle(p, q[i], q[i - 1], q[i + 1]);
  }
  cp.Omega = std::accumulate(cp.omega.begin(), cp.omega.end() - 1, 0.0);
  return cp;
}

CutPath3 make_cut_path(std::vector<double> lambda, std::vector<double> rho, std::vector<double> omega,
                       std::vector<double> lengths) {
  const std::size_t k = lengths.size();
  if (k == 0 || lambda.size() != k + 1 || rho.size() != k + 1 || omega.size() != k + 1)
    throw DegenerateInput("make_cut_path: need k >= 1 lengths and k + 1 angles of each kind");
  CutPath3 cp;
  cp.lambda = std::move(lambda);
  cp.rho = std::move(rho);
  cp.omega = std::move(omega);
  cp.lengths = std::move(lengths);
  cp.Omega = std::accumulate(cp.omega.begin(), cp.omega.end() - 1, 0.0);
  return cp;
}

std::vector<double> medial_directions(const CutPath3& cp) {
  std::vector<double> theta{0.0};
  for (std::size_t i = 1; i < cp.k(); ++i)
    theta.push_back(theta.back() + kPi - (cp.lambda[i] + cp.omega[i] / 2));
  return theta;
}

namespace {

PlanarPath develop(const std::vector<double>& theta, const std::vector<double>& lengths) {
  PlanarPath q;
  q.vertices.push_back({0.0, 0.0});
  for (std::size_t i = 0; i < lengths.size(); ++i)
    q.vertices.push_back(q.vertices.back() + unit_from_angle(theta[i]) * lengths[i]);
  return q;
}

}  // namespace

LMRChains build_lmr(const CutPath3& cp) {
  const std::size_t k = cp.k();
  const std::vector<double> tm = medial_directions(cp);
  std::vector<double> tl{cp.omega[0] / 2}, tr{-cp.omega[0] / 2};
  for (std::size_t i = 1; i < k; ++i) {
    tl.push_back(tl.back() + kPi - cp.lambda[i]);
    tr.push_back(tr.back() - kPi + cp.rho[i]);
  }
  LMRChains ch;
  ch.L = develop(tl, cp.lengths);
  ch.M = develop(tm, cp.lengths);
  ch.R = develop(tr, cp.lengths);
  for (double t : tm) ch.tau_max = std::max(ch.tau_max, std::abs(t));
  ch.Omega = cp.Omega;
  return ch;
}

MedialVerdict medial_is_rm(const CutPath3& cp, const Tolerance& tol) {
  const PlanarPath m = build_lmr(cp).M;
  return {is_rm(m, tol), worst_turn_from_source(m)};
}

bool chains_cross(const PlanarPath& a, const PlanarPath& b, const Tolerance& tol) {
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      if (i == 0 && j == 0) continue;
      if (segments_properly_intersect(a[i], a[i + 1], b[j], b[j + 1], tol)) return true;
    }
  return false;
}

CrossingReport lmr_cross_check(const LMRChains& ch, const Tolerance& tol) {
  return {chains_cross(ch.L, ch.M, tol), chains_cross(ch.L, ch.R, tol), chains_cross(ch.M, ch.R, tol)};
}

}  // namespace rmcut
