// Acceptance run: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "rmcut/harness.hpp"
#include "rmcut/spiral.hpp"
#include "rmcut/unfold.hpp"

using namespace rmcut;
using namespace rmcut::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Campaign reports shared by criteria 6 to 9.
struct Campaigns {
  ExperimentReport sphere, ellipsoid, random50, rm50;
} campaigns;

ExperimentReport campaign(std::size_t n, std::size_t trials, TreeMode mode, double z_scale) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.trials = trials;
  cfg.seed = 1;
  cfg.mode = mode;
  cfg.z_scale = z_scale;
  return run_experiment(cfg);
}

Outcome extremal_spiral() {
  const double phi = rad_to_deg(extreme_rm_phi(deg_to_rad(1e-3)));
  return {std::abs(phi - 74.655) <= 0.05, fmt("phi* = %.4f deg", phi)};
}

Outcome ocone_bounds() {
  Rng rng(2);
  double lo = kPi, hi = 0;
  for (int t = 0; t < 10000; ++t) {
    const PlanarPath q = random_rm_path(rng, 2 + static_cast<std::size_t>(t) % 11);
    for (std::size_t j = 1; j < q.size(); ++j) {
      const double m = ocone(q, j).measure;
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  const bool ok = lo >= kPi / 2 - 1e-6 && hi <= kPi + 1e-6;
  return {ok, fmt("measure range [%.6f, %.6f] pi", lo / kPi, hi / kPi)};
}

Outcome lmr_nonintersection() {
  Rng rng(3);
  int tested = 0, crossing = 0;
  while (tested < 10000) {
    const CutPath3 cp = random_chain(rng, 2 + static_cast<std::size_t>(tested) % 12, {kPi, 0.9});
    const LMRChains ch = build_lmr(cp);
    if (!medial_is_rm(cp).rm || ch.tau_max > kPi / 2 || ch.Omega > kPi) continue;
    ++tested;
    crossing += lmr_cross_check(ch).any();
  }
  const LMRChains spiral = build_lmr(spiral_chain(deg_to_rad(70), 2 * kTwoPi, 400, kTwoPi));
  const bool lr = lmr_cross_check(spiral).LR;
  return {crossing == 0 && lr,
          fmt("%d/%d admissible chains cross; 70 deg spiral L-R crossing: %s", crossing, tested, lr ? "yes" : "no")};
}

Outcome counterexample_graph() {
  const AppendixFixture g = appendix_graph_g(), gt = appendix_graph_gt();
  const bool g_none = !oracle_rm_forest_exists(g.domain).exists;
  const bool gt_none = !oracle_rm_forest_exists(gt.domain).exists;
  std::size_t failed = 0, total = 0;
  std::string which;
  for (const StepCheck& s : appendix_steps(g)) {
    ++total;
    std::printf("    %-52s %s\n", s.name.c_str(), s.ok ? "ok" : "FAILS");
    if (!s.ok) ++failed, which += " [" + s.name + "]";
  }
  return {g_none && gt_none && failed == 0,
          fmt("oracle G: %s, G_T: %s; %zu/%zu step predicates hold%s", g_none ? "none" : "exists",
              gt_none ? "none" : "exists", total - failed, total, which.c_str())};
}

Outcome algorithm1_instances() {
  int instances = 0, solved = 0, rm_ok = 0, valid = 0, oracle_checked = 0, oracle_agree = 0;
  std::size_t max_vertices = 0;
  for (int rings = 2; rings <= 6; ++rings)
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const ConvexDomain c = make_ring_domain(rings, seed);
      ++instances;
      max_vertices = std::max(max_vertices, c.vertices.size());
      valid += is_round(c) && is_non_obtuse(c);
      bool ok = false;
      try {
        const CutForest f = algorithm1(c);
        ok = true;
        ++solved;
        rm_ok += forest_paths_rm(c, f);
      } catch (const NoRmConnection&) {
      }
      try {
        const OracleResult r = oracle_rm_forest_exists(c);
        ++oracle_checked;
        oracle_agree += r.exists == ok;
      } catch (const TooLarge&) {
      }
    }
  const bool pass = valid == instances && solved == instances && rm_ok == instances &&
                    oracle_checked > 0 && oracle_agree == oracle_checked;
  return {pass, fmt("%d instances (<= %zu vertices), %d round and non-obtuse, %d solved, %d all paths rm, "
                    "oracle agrees on %d/%d",
                    instances, max_vertices, valid, solved, rm_ok, oracle_agree, oracle_checked)};
}

Outcome sphere_campaign() {
  campaigns.sphere = campaign(100, 200, TreeMode::rm_tree, 1.0);
  const auto& rows = campaigns.sphere.rows;
  std::size_t found = 0, overlapping = 0;
  std::string trials;
  for (const TrialRow& r : rows) {
    if (!r.ok || !r.rm_found) continue;
    ++found;
    if (r.overlap_pairs > 0) ++overlapping, trials += " " + std::to_string(r.trial);
  }
  const double rate = campaigns.sphere.aggregates.success_rate;
  const bool rate_ok = rate >= 0.90, clean = overlapping == 0;
  std::printf("    success rate >= 0.90: %s (%.3f)\n", rate_ok ? "ok" : "FAILS", rate);
  std::printf("    found trees overlap-free: %s (%zu/%zu overlap%s%s)\n", clean ? "ok" : "FAILS", overlapping,
              found, overlapping ? "; trials" : "", trials.c_str());
  return {rate_ok && clean, fmt("success %.3f over %zu trials; %zu of %zu found trees overlap", rate, rows.size(),
                                overlapping, found)};
}

Outcome ellipsoid_campaign() {
  campaigns.ellipsoid = campaign(100, 40, TreeMode::rm_tree, 0.25);
  const double failure = 1.0 - campaigns.ellipsoid.aggregates.success_rate;
  return {failure > 0.5, fmt("failure rate %.3f over %zu trials", failure, campaigns.ellipsoid.aggregates.completed)};
}

Outcome random_tree_contrast() {
  campaigns.random50 = campaign(50, 100, TreeMode::random_tree, 1.0);
  campaigns.rm50 = campaign(50, 100, TreeMode::rm_tree, 1.0);
  const double random = campaigns.random50.aggregates.overlap_rate;
  const double rm = campaigns.rm50.aggregates.overlap_rate;
  return {random >= 0.5 && random > rm, fmt("random-tree overlap %.3f vs rm-tree %.3f", random, rm)};
}

Outcome unfolding_properties() {
  const Polyhedron t = regular_tetrahedron();
  const auto trees = all_spanning_trees(t);
  std::size_t clean = 0;
  double seam = 0, length = 0;
  for (const CutTree& tree : trees) {
    const Unfolding u = unfold(t, tree);
    clean += detect_overlap(u).empty();
    const UnfoldResiduals r = unfold_residuals(t, tree, u);
    seam = std::max(seam, r.max_seam_error);
    length = std::max(length, r.max_length_error);
  }
  std::size_t unfoldings = 0, errors = 0;
  for (const ExperimentReport* rep : {&campaigns.sphere, &campaigns.ellipsoid, &campaigns.random50, &campaigns.rm50})
    for (const TrialRow& r : rep->rows) {
      if (!r.ok) {
        ++errors;
        continue;
      }
      ++unfoldings;
      seam = std::max(seam, r.max_seam_error);
      length = std::max(length, r.max_length_error);
    }
  const bool pass = trees.size() == 16 && clean == 16 && unfoldings > 0 && errors == 0 && seam < 1e-9 && length < 1e-9;
  return {pass, fmt("tetrahedron %zu/%zu trees overlap-free; %zu campaign unfoldings (%zu errors); "
                    "max seam %.2e, max relative length %.2e",
                    clean, trees.size(), unfoldings, errors, seam, length)};
}

Outcome bound_surfaces() {
  std::vector<double> grid;
  for (int i = 0; i <= 9000; ++i) grid.push_back(deg_to_rad(0.01 * i));
  const auto clip = noclip_check(grid);
  const double bound = std::sqrt(2.0) / 2;
  double min_cos = 1;
  std::size_t argmin = 0;
  for (std::size_t i = 0; i < clip.size(); ++i)
    if (clip[i].cos_beta < min_cos) min_cos = clip[i].cos_beta, argmin = i;
  // Equality only in the limit: anywhere short of 89 degrees stays clear.
  double clear_below_89 = 1;
  for (const auto& s : clip)
    if (s.theta < deg_to_rad(89)) clear_below_89 = std::min(clear_below_89, s.cos_beta - bound);

  std::vector<double> s_grid;
  for (int i = 0; i <= 3000; ++i) s_grid.push_back(3.0 * i / 3000);
  double max_beta = 0;
  for (const auto& b : beta_spiral_trajectory(s_grid)) max_beta = std::max(max_beta, b.beta);

  const bool pass = min_cos >= bound - 1e-9 && clip[argmin].theta > deg_to_rad(89.9) && clear_below_89 > 0 &&
                    max_beta <= deg_to_rad(45) + 1e-6;
  return {pass, fmt("min cos beta - sqrt2/2 = %.3e at %.2f deg; max trajectory beta %.6f deg",
                    min_cos - bound, rad_to_deg(clip[argmin].theta), rad_to_deg(max_beta))};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "extremal spiral angle", 5, extremal_spiral},
      {2, "o-cone measure bounds", 10, ocone_bounds},
      {3, "L, M, R non-intersection", 30, lmr_nonintersection},
      {4, "plane graph without rm forest", 10, counterexample_graph},
      {5, "algorithm 1 on round non-obtuse domains", 60, algorithm1_instances},
      {6, "algorithm 2 on random spheres", 600, sphere_campaign},
      {7, "ellipsoid failure mode", 180, ellipsoid_campaign},
      {8, "random-tree overlap contrast", 180, random_tree_contrast},
      {9, "unfolding correctness", 10, unfolding_properties},
      {10, "angle bound surfaces", 10, bound_surfaces},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s: %s; %.2f s (budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
