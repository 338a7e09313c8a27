#include "rmcut/spiral.hpp"

#include <algorithm>

namespace rmcut {

Point2 LogSpiral::tangent(double theta) const {
  const Point2 radial = unit_from_angle(theta);
  return normalized(radial * b() + perp(radial));
}

PlanarPath spiral_points(const LogSpiral& s, double theta_min, double theta_max, std::size_t n) {
  if (n < 2 || !(theta_min < theta_max))
    throw DegenerateInput("spiral_points: need n >= 2 and theta_min < theta_max");
  PlanarPath q;
  q.vertices.reserve(n);
  const double step = (theta_max - theta_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) q.vertices.push_back(s.point(theta_min + step * i));
  return q;
}

bool spiral_is_rm(double phi, std::size_t n, double theta_span, const Tolerance& tol) {
  const auto q = spiral_points(LogSpiral{phi}, 0.0, theta_span, n);
  Tolerance relaxed = tol;
  relaxed.eps_angle += theta_span / static_cast<double>(n - 1);
  return is_rm_wrt(q, 0, relaxed);
}

double extreme_rm_phi(double tol_angle, std::size_t n, double theta_span) {
  double lo = deg_to_rad(45.0), hi = deg_to_rad(90.0);
  if (!spiral_is_rm(lo, n, theta_span) || spiral_is_rm(hi, n, theta_span))
    throw NoBracket("extreme_rm_phi: rm predicate does not change sign on [45, 90] deg");
  const double stop = std::max(tol_angle, 1e-12);
  while (hi - lo > stop) {
    const double mid = 0.5 * (lo + hi);
    (spiral_is_rm(mid, n, theta_span) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double spiral_lookback_angle(double phi, double lookback) {
  const LogSpiral s{phi};
  const Point2 q = s.point(0.0);
  const Point2 p = s.point(-lookback);
  return angle_between(s.tangent(0.0), p - q);
}

BetaSurfaceSample beta_at(double r, double alpha) {
  const Point2 a{1.0, 0.0};
  // Chord a -> b leaves a at angle alpha clockwise from the outward radial.
  const Point2 dir = unit_from_angle(-alpha);
  const double c = std::cos(alpha);
  const double t = -c + std::sqrt(std::max(0.0, c * c + r * r - 1.0));
  BetaSurfaceSample s{r, alpha, alpha};
  if (t > 1e-12) {
    const Point2 b = a + dir * t;
    s.beta = angle_between(dir, b);
  }
  return s;
}

std::vector<BetaSurfaceSample> beta_surface(std::span<const double> r_grid,
                                            std::span<const double> alpha_grid) {
  std::vector<BetaSurfaceSample> out;
  out.reserve(r_grid.size() * alpha_grid.size());
  for (double r : r_grid) {
    if (r < 1.0) throw DegenerateInput("beta_surface: r must be >= 1");
    for (double alpha : alpha_grid) out.push_back(beta_at(r, alpha));
  }
  return out;
}

std::vector<BetaSurfaceSample> beta_spiral_trajectory(std::span<const double> s_grid) {
  std::vector<BetaSurfaceSample> out;
  const Point2 a{1.0, 0.0};
  for (double s : s_grid) {
    const Point2 b = unit_from_angle(-s) * std::exp(s);
    BetaSurfaceSample sample{std::exp(s), kPi / 4, kPi / 4};
    if (dist(a, b) > 1e-12) {
      sample.alpha = angle_between(a, b - a);
      sample.beta = angle_between(b - a, b);
    }
    out.push_back(sample);
  }
  return out;
}

std::vector<NoClipSample> noclip_check(std::span<const double> theta_grid) {
  const Point2 x{0.0, 0.0}, c{1.0, 0.0};
  std::vector<NoClipSample> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid) {
    if (theta > kPi / 2 + 1e-12) throw DegenerateInput("noclip_check: theta must be <= 90 deg");
    const Point2 radial = unit_from_angle(theta);
    const Point2 b = radial * std::exp(kPi / 2 - theta);
    // Outward direction along the path is decreasing theta.
    const Point2 forward = normalized(radial - perp(radial));
    NoClipSample s;
    s.theta = theta;
    s.cos_beta = dot(x - b, c - b) / (norm(x - b) * norm(c - b));
    s.margin = -dot(c - b, forward);
    out.push_back(s);
  }
  return out;
}

}  // namespace rmcut
