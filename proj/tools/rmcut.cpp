// rmcut command line: thin wrappers over the library, JSON in and out.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rmcut/cut_tree.hpp"
#include "rmcut/harness.hpp"
#include "rmcut/io.hpp"
#include "rmcut/plane_forest.hpp"
#include "rmcut/polyhedron.hpp"
#include "rmcut/spiral.hpp"
#include "rmcut/unfold.hpp"

using namespace rmcut;

namespace {

Polyhedron load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_obj(in);
}

void emit(const Json& j, const std::string& path) {
  if (path.empty() || path == "-") std::cout << j.dump(2) << '\n';
  else write_text_file(path, j.dump(2) + "\n");
}

std::string polyline_svg(const PlanarPath& q) {
  double lo_x = q[0].x, hi_x = lo_x, lo_y = q[0].y, hi_y = lo_y;
  for (const Point2& p : q.vertices) {
    lo_x = std::min(lo_x, p.x), hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y), hi_y = std::max(hi_y, p.y);
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double scale = 780.0 / span;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\">\n<polyline "
                    "fill=\"none\" stroke=\"#2c3e50\" points=\"";
  char buf[64];
  for (const Point2& p : q.vertices) {
    std::snprintf(buf, sizeof buf, "%.4f,%.4f ", 10 + (p.x - lo_x) * scale, 10 + (hi_y - p.y) * scale);
    svg += buf;
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

std::string forest_svg(const ConvexDomain& c, const CutForest& f) {
  const double scale = 380.0 / std::max(c.radius, 1e-12);
  auto X = [&](Point2 p) { return 400 + (p.x - c.center.x) * scale; };
  auto Y = [&](Point2 p) { return 400 - (p.y - c.center.y) * scale; };
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\">\n";
  char buf[160];
  for (VertexId v = 0; v < c.vertices.size(); ++v)
    for (VertexId w : c.neighbors[v]) {
      if (w < v) continue;
      const bool cut = f.parent[v] == w || f.parent[w] == v;
      std::snprintf(buf, sizeof buf, "<line class=\"%s\" x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\"/>\n",
                    cut ? "cut" : "edge", X(c.vertices[v]), Y(c.vertices[v]), X(c.vertices[w]),
                    Y(c.vertices[w]));
      svg += buf;
    }
  svg += "<style>.edge{stroke:#bbb;stroke-width:0.5}.cut{stroke:#c0392b;stroke-width:2}</style>\n</svg>\n";
  return svg;
}

int run_spiral(double phi_deg, bool find, double tol_deg, const std::string& svg,
               const std::string& beta_out) {
  Json out;
  if (find) {
    out["phi_star_deg"] = rad_to_deg(extreme_rm_phi(deg_to_rad(tol_deg)));
  } else {
    out["phi_deg"] = phi_deg;
    out["rm"] = spiral_is_rm(deg_to_rad(phi_deg));
  }
  if (!svg.empty())
    write_text_file(svg, polyline_svg(spiral_points(LogSpiral{deg_to_rad(phi_deg)}, 0, 3 * kPi, 400)));
  if (!beta_out.empty()) {
    std::vector<double> rs, alphas, ss, thetas;
    for (int i = 0; i <= 40; ++i) rs.push_back(1.0 + 0.05 * i);
    for (int i = 0; i <= 18; ++i) alphas.push_back(deg_to_rad(5.0 * i));
    for (int i = 0; i <= 100; ++i) ss.push_back(0.02 * i);
    for (int i = 0; i <= 90; ++i) thetas.push_back(deg_to_rad(i));
    Json j;
    for (const auto& s : beta_surface(rs, alphas))
      j["surface"].push_back({{"r", s.r}, {"alpha_deg", rad_to_deg(s.alpha)}, {"beta_deg", rad_to_deg(s.beta)}});
    for (const auto& s : beta_spiral_trajectory(ss))
      j["trajectory"].push_back({{"r", s.r}, {"alpha_deg", rad_to_deg(s.alpha)}, {"beta_deg", rad_to_deg(s.beta)}});
    for (const auto& s : noclip_check(thetas))
      j["noclip"].push_back({{"theta_deg", rad_to_deg(s.theta)}, {"cos_beta", s.cos_beta}, {"margin", s.margin}});
    write_text_file(beta_out, j.dump(2) + "\n");
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int run_plan2d(const std::string& in, const std::string& out, const std::string& svg, bool oracle) {
  const ConvexDomain c = domain_from_json(read_json_file(in));
  Json j;
  try {
    const CutForest f = algorithm1(c);
    j = forest_to_json(c, f);
    j["ok"] = true;
    if (!svg.empty()) write_text_file(svg, forest_svg(c, f));
  } catch (const NoRmConnection& e) {
    j["ok"] = false;
    j["stuck_vertex"] = e.vertex();
    j["best_tau_deg"] = rad_to_deg(e.best_tau());
  }
  if (oracle) j["oracle_exists"] = oracle_rm_forest_exists(c).exists;
  emit(j, out);
  return 0;
}

int run_gen_sphere(std::size_t n, std::uint64_t seed, bool poles, bool split, double z,
                   const std::string& out) {
  Polyhedron p = random_spherical(n, seed, poles, z);
  if (split) p = split_obtuse(p);
  std::ostringstream s;
  write_obj(s, p);
  write_text_file(out, s.str());
  return 0;
}

int run_cut(const std::string& in, const std::string& out, const Algorithm2Options& opts) {
  const Polyhedron p = load_mesh(in);
  Algorithm2Result r;
  try {
    r = algorithm2(p, opts);
  } catch (const NoRmConnection& e) {
    Json j{{"ok", false}, {"stuck_vertex", e.vertex()}, {"best_tau_deg", rad_to_deg(e.best_tau())}};
    emit(j, out);
    return 0;
  }
  const TreeReport rep = verify_cut_tree(r.mesh, r.tree, opts.tol);
  Json j = tree_to_json(r.tree, &rep, &r.non_rm_vertices);
  j["ok"] = true;
  j["split_applied"] = r.split_applied;
  if (r.split_applied) {
    // The tree indexes the refined mesh; keep it next to the tree.
    std::ostringstream s;
    write_obj(s, r.mesh);
    j["refined_mesh_obj"] = s.str();
  }
  emit(j, out);
  return 0;
}

int run_unfold(const std::string& mesh, const std::string& tree, const std::string& svg,
               const std::string& report) {
  const Polyhedron p = load_mesh(mesh);
  const CutTree t = tree_from_json(read_json_file(tree), p);
  const Unfolding u = unfold(p, t);
  const auto overlaps = detect_overlap(u);
  write_text_file(svg, render_svg(p, u, t, overlaps));
  const UnfoldResiduals res = unfold_residuals(p, t, u);
  Json j{{"overlaps", overlaps},
         {"n_faces", p.face_count()},
         {"max_seam_error", res.max_seam_error},
         {"max_length_error", res.max_length_error}};
  if (!report.empty()) write_text_file(report, j.dump(2) + "\n");
  std::cout << j.dump() << '\n';
  return 0;
}

int run_check(const std::string& mesh, const std::string& tree, VertexId leaf) {
  const Polyhedron p = load_mesh(mesh);
  const CutTree t = tree_from_json(read_json_file(tree), p);
  const TreeReport rep = verify_cut_tree(p, t);
  for (const auto& pr : rep.paths)
    if (pr.leaf == leaf) {
      std::cout << path_report_to_json(pr).dump(2) << '\n';
      return 0;
    }
  throw NotAPath("vertex " + std::to_string(leaf) + " is not a leaf of the tree");
}

int run_experiment_cmd(const std::string& config, const std::string& report, bool verbose) {
  const ExperimentConfig cfg = config_from_json(read_json_file(config));
  const auto rep = run_experiment(cfg, [&](const TrialRow& row) {
    if (verbose) std::cout << row_to_json(row).dump() << std::endl;
  });
  write_text_file(report, report_to_json(rep).dump(2) + "\n");
  return 0;
}

int run_oracle(const std::string& in) {
  const ConvexDomain c = domain_from_json(read_json_file(in));
  const OracleResult r = oracle_rm_forest_exists(c);
  Json j{{"exists", r.exists}};
  if (r.witness) j["witness"] = forest_to_json(c, *r.witness);
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radially monotone cut paths and edge unfolding"};
  app.require_subcommand(1);
  int status = 0;

  double phi = 74.0, tol_deg = 1e-3;
  bool find = false;
  std::string spiral_svg, beta_out;
  auto* sp = app.add_subcommand("spiral", "Logarithmic spiral rm checks");
  sp->add_option("--phi", phi, "Spiral angle in degrees");
  sp->add_flag("--find-extreme", find, "Bisect for the largest rm spiral angle");
  sp->add_option("--tol", tol_deg, "Bisection tolerance in degrees");
  sp->add_option("--svg", spiral_svg);
  sp->add_option("--beta-surface", beta_out, "Write beta surface, trajectory and clip samples");
  sp->callback([&] { status = run_spiral(phi, find, tol_deg, spiral_svg, beta_out); });

  std::string in, out, svg;
  bool oracle = false;
  auto* pl = app.add_subcommand("plan2d", "Algorithm 1 on a planar convex domain");
  pl->add_option("--in", in)->required();
  pl->add_option("--out", out)->required();
  pl->add_option("--svg", svg);
  pl->add_flag("--oracle", oracle, "Also run the exhaustive existence search");
  pl->callback([&] { status = run_plan2d(in, out, svg, oracle); });

  std::size_t n = 100;
  std::uint64_t seed = 1;
  bool poles = false, split = false;
  double z = 1.0;
  auto* gs = app.add_subcommand("gen-sphere", "Random polyhedron inscribed in a sphere");
  gs->add_option("--n", n)->required();
  gs->add_option("--seed", seed)->required();
  gs->add_flag("--poles", poles);
  gs->add_flag("--split-obtuse", split);
  gs->add_option("--ellipsoid", z, "z semi-axis; 1 is the sphere");
  gs->add_option("--out", out)->required();
  gs->callback([&] { status = run_gen_sphere(n, seed, poles, split, z, out); });

  Algorithm2Options opts;
  auto* cu = app.add_subcommand("cut", "Algorithm 2 cut tree");
  cu->add_option("--in", in)->required();
  cu->add_option("--out", out)->required();
  cu->add_flag("--allow-non-rm", opts.allow_non_rm);
  cu->add_flag("--split-obtuse-retry", opts.split_obtuse_retry);
  cu->add_flag("--equilateral-base", opts.equilateral_base);
  cu->add_flag("--best-first", opts.best_first);
  cu->callback([&] { status = run_cut(in, out, opts); });

  std::string mesh, tree, report;
  auto* un = app.add_subcommand("unfold", "Unfold along a cut tree");
  un->add_option("--mesh", mesh)->required();
  un->add_option("--tree", tree)->required();
  un->add_option("--svg", svg)->required();
  un->add_option("--report", report);
  un->callback([&] { status = run_unfold(mesh, tree, svg, report); });

  VertexId leaf = 0;
  auto* ch = app.add_subcommand("check", "Report one leaf's cut path");
  ch->add_option("--mesh", mesh)->required();
  ch->add_option("--tree", tree)->required();
  ch->add_option("--path", leaf, "Leaf vertex index")->required();
  ch->callback([&] { status = run_check(mesh, tree, leaf); });

  std::string config;
  bool verbose = false;
  auto* ex = app.add_subcommand("experiment", "Run an experiment campaign");
  ex->add_option("--config", config)->required();
  ex->add_option("--report", report)->required();
  ex->add_flag("--verbose", verbose, "Stream per-trial rows as JSON lines");
  ex->callback([&] { status = run_experiment_cmd(config, report, verbose); });

  auto* orc = app.add_subcommand("oracle", "Exhaustive rm forest existence");
  orc->add_option("--in", in)->required();
  orc->callback([&] { status = run_oracle(in); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
