#include "rmcut/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rmcut {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Json parent_map(const std::vector<std::optional<VertexId>>& parent) {
  Json m = Json::object();
  for (VertexId v = 0; v < parent.size(); ++v)
    if (parent[v]) m[std::to_string(v)] = *parent[v];
  return m;
}

double deg(double rad) { return std::isnan(rad) ? rad : rad_to_deg(rad); }

}  // namespace

ConvexDomain domain_from_json(const Json& j) {
  std::vector<Point2> verts;
  for (const auto& p : get<Json>(j, "vertices")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("vertex must be [x, y]");
    verts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  const char* key = j.contains("triangles") ? "triangles" : "faces";
  auto faces = get<std::vector<std::vector<VertexId>>>(j, key);
  auto boundary = get<std::vector<VertexId>>(j, "boundary");
  try {
    return make_domain(std::move(verts), std::move(faces), std::move(boundary));
  } catch (const DegenerateInput& e) {
    throw ParseError(std::string("domain: ") + e.what());
  }
}

Json domain_to_json(const ConvexDomain& c) {
  Json j;
  j["vertices"] = Json::array();
  for (const Point2& p : c.vertices) j["vertices"].push_back({p.x, p.y});
  j[c.is_triangulated() ? "triangles" : "faces"] = c.faces;
  j["boundary"] = c.boundary;
  return j;
}

Json forest_to_json(const ConvexDomain& c, const CutForest& f) {
  Json j;
  j["parent"] = parent_map(f.parent);
  j["roots"] = f.roots();
  double worst = 0.0;
  Json taus = Json::object();
  for (VertexId v = 0; v < f.tau.size(); ++v)
    if (!std::isnan(f.tau[v])) {
      worst = std::max(worst, f.tau[v]);
      taus[std::to_string(v)] = deg(f.tau[v]);
    }
  j["worst_tau_deg"] = deg(worst);
  j["tau_deg"] = taus;
  j["center"] = {c.center.x, c.center.y};
  return j;
}

Json path_report_to_json(const PathReport& r) {
  return {{"leaf", r.leaf},
          {"path", r.path},
          {"medial_rm", r.medial_rm},
          {"tau_deg", deg(r.tau)},
          {"tau_max_deg", deg(r.tau_max)},
          {"omega_deg", deg(r.Omega)},
          {"theorem_preconditions", r.theorem_preconditions},
          {"crossings", {{"LM", r.crossings.LM}, {"LR", r.crossings.LR}, {"MR", r.crossings.MR}}}};
}

Json tree_to_json(const CutTree& t, const TreeReport* report, const std::vector<VertexId>* non_rm) {
  Json j;
  j["root"] = t.root;
  j["parent"] = parent_map(t.parent);
  if (t.base) j["boundary"] = *t.base;
  j["non_rm_vertices"] = non_rm ? *non_rm : std::vector<VertexId>{};
  j["per_path"] = Json::array();
  if (report)
    for (const auto& r : report->paths) j["per_path"].push_back(path_report_to_json(r));
  return j;
}

CutTree tree_from_json(const Json& j, const Polyhedron& p) {
  CutTree t;
  t.parent.assign(p.vertex_count(), std::nullopt);
  t.root = get<VertexId>(j, "root");
  const Json parents = get<Json>(j, "parent");
  for (const auto& [k, v] : parents.items()) {
    std::size_t idx = 0;
    try {
      idx = std::stoul(k);
    } catch (const std::exception&) {
      throw ParseError("parent key is not a vertex index: " + k);
    }
    if (idx >= p.vertex_count()) throw ParseError("parent key out of range: " + k);
    t.parent[idx] = v.get<VertexId>();
  }
  if (j.contains("boundary")) {
    const auto b = get<std::vector<VertexId>>(j, "boundary");
    if (b.size() != 3) throw ParseError("boundary must list a, b, c");
    t.base = std::array<VertexId, 3>{b[0], b[1], b[2]};
    const auto f = p.face_with_edge(b[0], b[1]);
    if (!f || std::find(p.faces()[*f].begin(), p.faces()[*f].end(), b[2]) == p.faces()[*f].end())
      throw ParseError("boundary is not a ccw face of the mesh");
    t.base_face = *f;
  }
  return t;
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  c.n = j.value("n", c.n);
  c.trials = j.value("trials", c.trials);
  c.seed = j.value("seed", c.seed);
  const std::string mode = j.value("mode", std::string("rm_tree"));
  if (mode == "rm_tree") c.mode = TreeMode::rm_tree;
  else if (mode == "random_tree") c.mode = TreeMode::random_tree;
  else throw ParseError("mode must be rm_tree or random_tree");
  if (j.contains("surface")) {
    const Json& s = j["surface"];
    if (s.is_string() && s.get<std::string>() == "sphere") c.z_scale = 1.0;
    else if (s.is_object() && s.contains("ellipsoid")) c.z_scale = s["ellipsoid"].get<double>();
    else throw ParseError("surface must be \"sphere\" or {\"ellipsoid\": c}");
  }
  c.add_poles = j.value("poles", c.add_poles);
  if (j.contains("opts")) {
    const Json& o = j["opts"];
    c.opts.allow_non_rm = o.value("allow_non_rm", false);
    c.opts.split_obtuse_retry = o.value("split_obtuse_retry", false);
    c.opts.equilateral_base = o.value("equilateral_base", false);
    c.opts.best_first = o.value("best_first", false);
  }
  if (c.trials < 1) throw ParseError("trials must be >= 1");
  if (c.n < 4) throw ParseError("n must be >= 4");
  return c;
}

Json config_to_json(const ExperimentConfig& c) {
  Json j;
  j["n"] = c.n;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["mode"] = c.mode == TreeMode::rm_tree ? "rm_tree" : "random_tree";
  if (c.z_scale == 1.0) j["surface"] = "sphere";
  else j["surface"] = {{"ellipsoid", c.z_scale}};
  j["poles"] = c.add_poles;
  j["opts"] = {{"allow_non_rm", c.opts.allow_non_rm},
               {"split_obtuse_retry", c.opts.split_obtuse_retry},
               {"equilateral_base", c.opts.equilateral_base},
               {"best_first", c.opts.best_first}};
  return j;
}

Json row_to_json(const TrialRow& r) {
  Json j{{"trial", r.trial},
         {"seed", r.seed},
         {"ok", r.ok},
         {"rm_found", r.rm_found},
         {"stuck_vertices", r.stuck_vertices},
         {"overlap_pairs", r.overlap_pairs},
         {"vertices", r.vertices},
         {"faces", r.faces},
         {"split_applied", r.split_applied},
         {"max_seam_error", r.max_seam_error},
         {"max_length_error", r.max_length_error}};
  if (!r.ok) j["error"] = r.error;
  return j;
}

Json report_to_json(const ExperimentReport& r) {
  Json j;
  j["config"] = config_to_json(r.config);
  j["trials"] = Json::array();
  for (const auto& row : r.rows) j["trials"].push_back(row_to_json(row));
  const auto& a = r.aggregates;
  Json hist = Json::object();
  for (auto [k, v] : a.stuck_histogram) hist[std::to_string(k)] = v;
  j["aggregates"] = {{"completed", a.completed},
                     {"success_rate", a.success_rate},
                     {"overlap_rate", a.overlap_rate},
                     {"overlap_rate_rm_found", a.overlap_rate_rm_found},
                     {"stuck_histogram", hist},
                     {"max_seam_error", a.max_seam_error},
                     {"max_length_error", a.max_length_error}};
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

}  // namespace rmcut
