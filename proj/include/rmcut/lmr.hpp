#pragma once

#include <span>
#include <vector>

#include "rmcut/plane_forest.hpp"
#include "rmcut/polyhedron.hpp"
#include "rmcut/rm_path.hpp"

namespace rmcut {

/// Angle data of a cut path v_0 ... v_k walked from the source v_0 to the
/// boundary end v_k. Indices follow the path: lambda[i], rho[i] are defined
/// for 0 < i < k (zero elsewhere); omega[i] for every i; lengths[i] is
/// |v_i v_{i+1}|. Omega sums omega over 0 <= i < k.
struct CutPath3 {
  std::vector<VertexId> vertices;
  std::vector<double> lambda;
  std::vector<double> rho;
  std::vector<double> omega;
  std::vector<double> lengths;
  double Omega = 0.0;

  std::size_t k() const { return lengths.size(); }
};

/// Face angles on each side of the path at its interior vertices (left is
/// ccw from the outgoing edge seen from outside). A side branch of a cut tree
/// lies wholly in one side's fan, so that side keeps its full angle. When
/// `tree` is given, every path edge must be a tree edge. `omega` may carry
/// precomputed curvatures. Throws NotAPath.
CutPath3 path_angles(const Polyhedron& p, std::span<const VertexId> q,
                     const std::vector<std::optional<VertexId>>* tree = nullptr,
                     const std::vector<double>* omega = nullptr);

/// Path data without a mesh: for synthetic chains and tests. Checks sizes and
/// computes Omega.
CutPath3 make_cut_path(std::vector<double> lambda, std::vector<double> rho,
                       std::vector<double> omega, std::vector<double> lengths);

struct LMRChains {
  PlanarPath L, M, R;
  double tau_max = 0.0;  ///< max |direction of m_{i+1} - m_i|, unwrapped
  double Omega = 0.0;
};

/// M starts at the origin along +x and turns by pi - (lambda_i + omega_i/2)
/// at v_i, which gives the same turn as using right angles rho_i + omega_i/2.
/// L starts omega_0/2 ccw of M with left angles lambda_i; R starts omega_0/2
/// cw of M with right angles rho_i.
LMRChains build_lmr(const CutPath3& cp);

/// Unwrapped edge directions of M relative to its first edge.
std::vector<double> medial_directions(const CutPath3& cp);

struct MedialVerdict {
  bool rm = false;
  double worst_tau = 0.0;
};

/// is_rm of M plus its worst turn from the source (zero for a single edge).
MedialVerdict medial_is_rm(const CutPath3& cp, const Tolerance& tol = {});

struct CrossingReport {
  bool LM = false;
  bool LR = false;
  bool MR = false;
  bool any() const { return LM || LR || MR; }
};

/// Proper crossings between chains, excluding the pair of first edges that
/// meet at the shared source.
CrossingReport lmr_cross_check(const LMRChains& ch, const Tolerance& tol = {});

/// True iff two polylines properly cross anywhere, skipping the pair
/// (first edge, first edge).
bool chains_cross(const PlanarPath& a, const PlanarPath& b, const Tolerance& tol = {});

}  // namespace rmcut
