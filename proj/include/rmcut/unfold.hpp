#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rmcut/cut_tree.hpp"

namespace rmcut {

/// Planar layout of every face after cutting along a tree.
struct Unfolding {
  /// placed[f][i] is the image of faces()[f][i]; every triangle is ccw.
  std::vector<std::array<Point2, 3>> placed;
  /// Face each face was unfolded from (none for the root).
  std::vector<std::optional<FaceId>> dual_parent;
  FaceId root_face = 0;
};

/// Root face: the neighbour of the base face across ac when that edge is not
/// cut, else the base face itself (bottommost face when the tree carries no
/// base). Throws DisconnectedDual when the uncut edges do not reach every face.
Unfolding unfold(const Polyhedron& p, const CutTree& t);

using FacePair = std::pair<FaceId, FaceId>;

/// Pairs (lo, hi) of placed faces whose interiors overlap by more than
/// eps_len along every separating-axis candidate. Shared seams and vertex
/// contacts are not overlaps. Sorted.
std::vector<FacePair> detect_overlap(const Unfolding& u, const Tolerance& tol = {});

/// Brute-force all-pairs variant of detect_overlap, for cross-checking the
/// grid broad phase.
std::vector<FacePair> detect_overlap_all_pairs(const Unfolding& u, const Tolerance& tol = {});

/// True iff the two triangles overlap with positive area beyond eps_len.
bool triangles_overlap(const std::array<Point2, 3>& a, const std::array<Point2, 3>& b,
                       const Tolerance& tol = {});

struct UnfoldResiduals {
  double max_length_error = 0.0;  ///< relative, over every placed edge
  double max_seam_error = 0.0;    ///< absolute, over shared vertices of uncut edges
};

/// Recomputes isometry and seam closure from the mesh and the layout.
UnfoldResiduals unfold_residuals(const Polyhedron& p, const CutTree& t, const Unfolding& u);

/// Placed angle sum per vertex over all its images; equals 2 pi - omega_v
/// for a valid layout.
std::vector<double> placed_angle_sums(const Polyhedron& p, const Unfolding& u);

struct SvgStyle {
  double width = 800.0;
  double margin = 10.0;
  std::string face_fill = "#f4f1e8";
  std::string overlap_fill = "#e06060";
  std::string cut_stroke = "#c0392b";
  std::string seam_stroke = "#9a9a9a";
};

/// Deterministic SVG: faces as polygons (class "face", plus "overlap" for
/// faces in any overlapping pair), each cut edge image as a line of class
/// "cut", each uncut edge once as class "seam".
std::string render_svg(const Polyhedron& p, const Unfolding& u, const CutTree& t,
                       const std::vector<FacePair>& overlaps, const SvgStyle& style = {});

}  // namespace rmcut
