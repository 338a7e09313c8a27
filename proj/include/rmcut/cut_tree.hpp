#pragma once

#include <array>
#include <optional>
#include <vector>

#include "rmcut/lmr.hpp"
#include "rmcut/polyhedron.hpp"

namespace rmcut {

/// Spanning tree of mesh edges as parent pointers toward `root`.
struct CutTree {
  std::vector<std::optional<VertexId>> parent;
  VertexId root = 0;
  /// Bottom triangle (a, b, c) and its face when the tree came from
  /// algorithm2; unfolding roots its layout there.
  std::optional<std::array<VertexId, 3>> base;
  std::optional<FaceId> base_face;

  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::vector<VertexId> path_to_root(VertexId v) const;  ///< throws CyclicCut
  std::vector<VertexId> leaves() const;
};

struct Algorithm2Options {
  bool allow_non_rm = false;        ///< take the best non-rm edge instead of failing
  bool split_obtuse_retry = false;  ///< on failure, split obtuse faces once and rerun
  bool equilateral_base = false;    ///< most-equilateral face among the bottom ones
  bool best_first = false;          ///< grow by best candidate instead of latitude
  Tolerance tol{};
};

struct Algorithm2Result {
  Polyhedron mesh;  ///< the input, or its obtuse-split refinement after a retry
  CutTree tree;
  std::vector<std::optional<VertexId>> forest;  ///< before closing with ab, bc
  std::array<VertexId, 3> boundary{};           ///< a, b, c
  FaceId base_face = 0;
  std::vector<double> tau;                      ///< chosen worst turn; NaN on a, b, c
  std::vector<VertexId> non_rm_vertices;
  bool split_applied = false;
};

/// Grows medially rm paths from the degenerate boundary (a, b, c, b) of the
/// bottommost triangle, vertices taken by descending geodesic distance from
/// the north pole, then closes F with ab and bc. Throws NoRmConnection on a
/// dead end unless allowed by the options.
Algorithm2Result algorithm2(const Polyhedron& p, const Algorithm2Options& opts = {});

struct PathReport {
  VertexId leaf = 0;
  std::vector<VertexId> path;  ///< leaf to the first of a, b, c
  bool medial_rm = false;
  double tau = 0.0;            ///< worst turn of M from its source
  double tau_max = 0.0;        ///< max |direction| of M
  double Omega = 0.0;
  bool theorem_preconditions = false;  ///< tau_max <= pi/2 and Omega <= pi
  CrossingReport crossings;
};

struct TreeReport {
  bool acyclic = false;
  bool spanning = false;
  bool dual_connected = false;
  std::vector<PathReport> paths;
  std::size_t non_rm_paths() const;
};

/// Re-checks a tree without trusting its construction. Paths run from each
/// leaf to the first of `boundary`, or to the root when none is given.
/// Throws NotSpanning or CyclicCut on structurally invalid trees.
TreeReport verify_cut_tree(const Polyhedron& p, const CutTree& t, const Tolerance& tol = {});

/// Faces connected across edges not in the tree.
bool dual_connected_after_cut(const Polyhedron& p, const CutTree& t);

}  // namespace rmcut
