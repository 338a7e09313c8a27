#pragma once

// Independent oracles shared by the unit tests. Nothing here calls the
// predicate it is meant to check.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "rmcut/geom.hpp"
#include "rmcut/random.hpp"
#include "rmcut/rm_path.hpp"

namespace rmcut::testing {

/// rm by the distance definition: from every vertex v_i, the distance to
/// points sampled densely along the rest of the path never decreases.
inline bool rm_by_distance(const PlanarPath& q, std::size_t samples_per_edge = 100,
                           double slack = 1e-15) {
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    double last = 0.0;
    for (std::size_t j = i; j + 1 < q.size(); ++j) {
      // A dip right after a vertex is second order in t; probe it closely.
      std::vector<double> ts{1e-7, 1e-6, 1e-5, 1e-4, 1e-3};
      for (std::size_t s = 1; s <= samples_per_edge; ++s)
        ts.push_back(static_cast<double>(s) / static_cast<double>(samples_per_edge));
      for (double t : ts) {
        const double d = dist(q[i], q[j] + (q[j + 1] - q[j]) * t);
        if (d < last - slack) return false;
        last = d;
      }
    }
  }
  return true;
}

/// Smallest |angle(v_i, v_j, v_{j+1}) - pi/2| over all i < j: how close the
/// path is to the rm decision boundary.
inline double rm_margin(const PlanarPath& q) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < q.size(); ++j) {
      const Point2 a = q[i] - q[j], b = q[j + 1] - q[j];
      const double ang = std::atan2(std::abs(cross(a, b)), dot(a, b));
      m = std::min(m, std::abs(ang - kPi / 2));
    }
  return m;
}

/// rm by the vertex-angle definition, written out directly.
inline bool rm_by_angles(const PlanarPath& q) {
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    for (std::size_t j = i + 1; j + 1 < q.size(); ++j)
      if (dot(q[i] - q[j], q[j + 1] - q[j]) > 0) return false;
  return true;
}

/// Random walk whose turns stay within +-max_turn; not necessarily rm.
inline PlanarPath random_walk(Rng& rng, std::size_t vertices, double max_turn) {
  PlanarPath q;
  q.vertices.push_back({0, 0});
  double heading = rng.uniform(-kPi, kPi);
  for (std::size_t i = 1; i < vertices; ++i) {
    heading += rng.uniform(-max_turn, max_turn);
    q.vertices.push_back(q.vertices.back() + unit_from_angle(heading) * rng.uniform(0.2, 1.5));
  }
  return q;
}

/// Random rm path of the requested vertex count, grown by rejection against
/// the angle definition, keeping clear of the decision boundary.
inline PlanarPath random_rm_path(Rng& rng, std::size_t vertices) {
  for (;;) {
    PlanarPath q;
    q.vertices.push_back({0, 0});
    double heading = rng.uniform(-kPi, kPi);
    bool ok = true;
    while (ok && q.size() < vertices) {
      ok = false;
      for (int attempt = 0; attempt < 50 && !ok; ++attempt) {
        const double h = heading + rng.uniform(-kPi / 2, kPi / 2);
        PlanarPath next = q;
        next.vertices.push_back(q.vertices.back() + unit_from_angle(h) * rng.uniform(0.2, 1.5));
        if (rm_by_angles(next) && rm_margin(next) > 1e-6) {
          q = std::move(next);
          heading = h;
          ok = true;
        }
      }
    }
    if (ok) return q;
  }
}

}  // namespace rmcut::testing
