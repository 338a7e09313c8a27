#pragma once

// Synthetic inputs and step-by-step predicates shared by the unit tests and
// the acceptance run.

#include <set>
#include <string>
#include <vector>

#include "rmcut/lmr.hpp"
#include "rmcut/plane_forest.hpp"
#include "rmcut/spiral.hpp"
#include "support.hpp"

namespace rmcut::testing {

/// Angle swept ccw from the outgoing edge to the reversed incoming edge.
inline double ccw_side_angle(Point2 prev, Point2 cur, Point2 next) {
  double a = std::atan2((prev - cur).y, (prev - cur).x) - std::atan2((next - cur).y, (next - cur).x);
  while (a < 0) a += kTwoPi;
  while (a >= kTwoPi) a -= kTwoPi;
  return a;
}

struct ChainParams {
  double omega_total = kPi;
  double max_bend = 0.6;
};

/// Random chain: medial angles near pi, curvature spread with a total of at
/// most `omega_total`, left and right angles split around the medial angle.
inline CutPath3 random_chain(Rng& rng, std::size_t k, const ChainParams& p = {}) {
  std::vector<double> w(k + 1, 0.0);
  double s = 0;
  for (std::size_t i = 0; i < k; ++i) s += (w[i] = rng.uniform(0.1, 1.0));
  for (std::size_t i = 0; i < k; ++i) w[i] *= p.omega_total * rng.uniform(0.2, 1.0) / s;
  std::vector<double> lambda(k + 1, 0.0), rho(k + 1, 0.0), len(k);
  for (std::size_t i = 1; i < k; ++i) {
    const double mu = kPi + rng.uniform(-p.max_bend, p.max_bend);
    lambda[i] = mu - w[i] / 2;
    rho[i] = kTwoPi - mu - w[i] / 2;
  }
  for (double& l : len) l = rng.uniform(0.3, 1.5);
  return make_cut_path(lambda, rho, w, len);
}

/// Chain whose medial path is the sampled spiral, with curvature spread
/// evenly to the given total.
inline CutPath3 spiral_chain(double phi, double span, std::size_t n, double omega_total) {
  const PlanarPath s = spiral_points(LogSpiral{phi}, 0, span, n);
  const std::size_t k = s.size() - 1;
  std::vector<double> lambda(k + 1, 0.0), rho(k + 1, 0.0), w(k + 1, 0.0), len(k);
  for (std::size_t i = 0; i < k; ++i) {
    w[i] = omega_total / static_cast<double>(k);
    len[i] = dist(s[i], s[i + 1]);
  }
  for (std::size_t i = 1; i < k; ++i) {
    const double mu = ccw_side_angle(s[i - 1], s[i], s[i + 1]);
    lambda[i] = mu - w[i] / 2;
    rho[i] = kTwoPi - mu - w[i] / 2;
  }
  return make_cut_path(lambda, rho, w, len);
}

struct StepCheck {
  std::string name;
  bool ok;
};

/// The individual facts of the impossibility argument on the plane graph,
/// each computed directly from coordinates and adjacency.
inline std::vector<StepCheck> appendix_steps(const AppendixFixture& g) {
  const ConvexDomain& c = g.domain;
  auto angle_at = [&](VertexId i, VertexId j, VertexId k) {
    return angle_between(c.vertices[i] - c.vertices[j], c.vertices[k] - c.vertices[j]);
  };
  auto violates = [&](VertexId i, VertexId j, VertexId k) { return angle_at(i, j, k) < kPi / 2; };
  auto nbrs = [&](VertexId v) { return std::set<VertexId>(c.neighbors[v].begin(), c.neighbors[v].end()); };
  auto rm = [&](std::vector<VertexId> q) { return rm_by_angles(c.path_points(q)); };
  auto has_face = [&](std::vector<VertexId> want) {
    for (const auto& f : c.faces) {
      if (f.size() != want.size()) continue;
      for (std::size_t r = 0; r < f.size(); ++r) {
        bool same = true;
        for (std::size_t i = 0; i < f.size(); ++i) same &= f[(i + r) % f.size()] == want[i];
        if (same) return true;
      }
    }
    return false;
  };

  bool convex = true;
  for (const auto& f : c.faces)
    for (std::size_t i = 0; i < f.size(); ++i)
      convex &= cross(c.vertices[f[(i + 1) % f.size()]] - c.vertices[f[i]],
                      c.vertices[f[(i + 2) % f.size()]] - c.vertices[f[(i + 1) % f.size()]]) > 1e-9;
  bool symmetric = true;
  for (const Point2& p : c.vertices) {
    const Point2 q = c.center + rotated(p - c.center, kPi / 2);
    bool hit = false;
    for (const Point2& o : c.vertices) hit |= dist(o, q) < 1e-9;
    symmetric &= hit;
  }
  bool dips = false;
  {
    const Point2 x = c.vertices[g.x], p = c.vertices[g.ab], d = c.vertices[g.a] - p;
    const double t = std::clamp(dot(x - p, d) / dot(d, d), 0.0, 1.0);
    dips = dist(p + d * t, x) < dist(p, x) - 1e-6;
  }

  return {
      {"faces strictly convex", convex},
      {"quarter-turn symmetry", symmetric},
      {"step 1: x has four spokes", c.neighbors[g.x].size() == 4},
      {"step 1: ab continues only to a or b", nbrs(g.ab) == std::set<VertexId>{g.x, g.a, g.b}},
      {"step 2: (x, ab, a) is not rm", violates(g.x, g.ab, g.a)},
      {"step 2: ab-a enters the circle about x through ab", dips},
      {"step 3: (x, ab, b) is rm", rm({g.x, g.ab, g.b})},
      {"step 4: up edge b-ab' fails w.r.t. ab", violates(g.ab, g.b, g.ab_prime)},
      {"step 4: (x, ab, b, cd') is rm", rm({g.x, g.ab, g.b, g.cd_prime})},
      {"step 5: cd' continues only to c' or b'", nbrs(g.cd_prime) == std::set<VertexId>{g.b, g.c_prime, g.b_prime}},
      {"step 5: cd'-c' fails w.r.t. x", violates(g.x, g.cd_prime, g.c_prime)},
      {"step 5: cd'-b' fails w.r.t. b", violates(g.b, g.cd_prime, g.b_prime)},
      {"step 5: cd'-b' is fine w.r.t. x", !violates(g.x, g.cd_prime, g.b_prime)},
      {"boundary vertices c', b', ab'",
       c.on_boundary[g.c_prime] && c.on_boundary[g.b_prime] && c.on_boundary[g.ab_prime]},
      {"pentagon (b, ab, a, a', ab')", has_face({g.b, g.ab, g.a, g.a_prime, g.ab_prime})},
      {"quad (b, ab', b', cd')", has_face({g.b, g.ab_prime, g.b_prime, g.cd_prime})},
  };
}

/// Independent check that every interior vertex reaches the boundary along
/// forest parents by a path satisfying the angle definition of rm.
inline bool forest_paths_rm(const ConvexDomain& c, const CutForest& f) {
  for (VertexId v : c.interior_vertices()) {
    std::vector<VertexId> path{v};
    while (!c.on_boundary[path.back()]) {
      const auto& up = f.parent[path.back()];
      if (!up || !c.has_edge(path.back(), *up) || path.size() > c.vertices.size()) return false;
      path.push_back(*up);
    }
    if (!rm_by_angles(c.path_points(path))) return false;
  }
  return true;
}

}  // namespace rmcut::testing
