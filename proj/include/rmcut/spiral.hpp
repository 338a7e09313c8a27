#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rmcut/rm_path.hpp"

namespace rmcut {

/// Logarithmic spiral r = e^{b theta} with constant radius/tangent angle phi,
/// b = 1 / tan(phi). phi = pi/2 is the unit circle.
struct LogSpiral {
  double phi = kPi / 2;

  double b() const { return 1.0 / std::tan(phi); }
  double radius(double theta) const { return std::exp(b() * theta); }
  Point2 point(double theta) const { return unit_from_angle(theta) * radius(theta); }
  /// Unit tangent in the direction of increasing theta.
  Point2 tangent(double theta) const;
};

/// n points at uniform theta spacing over [theta_min, theta_max], ordered by
/// increasing theta (increasing radius), so index 0 is the rm source.
PlanarPath spiral_points(const LogSpiral& s, double theta_min, double theta_max, std::size_t n);

/// Radial monotonicity of the spiral discretised with n points over a theta
/// span starting at 0. The comparison slack is widened by the theta step to
/// absorb chord-versus-tangent error. Uses the self-similarity of a uniformly
/// sampled spiral: the angle (v_i, v_j, v_{j+1}) depends only on j - i, so
/// checking against v_0 decides every v_i.
bool spiral_is_rm(double phi, std::size_t n = 100000, double theta_span = 3 * kPi,
                  const Tolerance& tol = {});

/// Bisection on phi over [45 deg, 90 deg] for the largest radially monotone
/// spiral. Throws NoBracket if the predicate does not change sign there.
double extreme_rm_phi(double tol_angle, std::size_t n = 100000, double theta_span = 3 * kPi);

/// Angle at the spiral point of polar angle theta between the forward tangent
/// and the chord back to the point at theta - lookback (scale free).
double spiral_lookback_angle(double phi, double lookback);

/// One sample of the hourglass angle surface. With the centre x at the origin
/// and the inner path end a = (1, 0):
///   alpha = angle at a between the outward radial ray and the chord a -> b,
///   r     = |x b| (so r = 1 means a = b),
///   beta  = angle at b between the outward radial ray and the chord a -> b.
/// An edge b -> c inside the out-cone at b keeps angle (a, b, c) >= 90 deg
/// whenever beta <= 45 deg.
struct BetaSurfaceSample {
  double r = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
};

BetaSurfaceSample beta_at(double r, double alpha);
std::vector<BetaSurfaceSample> beta_surface(std::span<const double> r_grid,
                                            std::span<const double> alpha_grid);

/// (r, alpha, beta) along the extreme hourglass path: the clockwise 45 deg
/// spiral leaving a = (1, 0), sampled at spiral parameters s (r = e^s).
std::vector<BetaSurfaceSample> beta_spiral_trajectory(std::span<const double> s_grid);

/// Clipping test for the in-cone triangle at the inner end a = (0, 1) of the
/// 45 deg spiral r = e^{pi/2 - theta}, x at the origin, corner c = (1, 0).
struct NoClipSample {
  double theta = 0.0;
  double cos_beta = 1.0;  ///< cos of angle (x, b, c)
  double margin = 0.0;    ///< signed distance of c inside the halfplane at b
};

std::vector<NoClipSample> noclip_check(std::span<const double> theta_grid);

}  // namespace rmcut
