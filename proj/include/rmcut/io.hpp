#pragma once

#include <string>

#include <json.hpp>

#include "rmcut/harness.hpp"
#include "rmcut/plane_forest.hpp"

namespace rmcut {

using Json = nlohmann::json;

/// {vertices: [[x,y]...], triangles: [[i,j,k]...], boundary: [i...]};
/// "faces" is accepted in place of "triangles" for polygonal faces.
ConvexDomain domain_from_json(const Json& j);
Json domain_to_json(const ConvexDomain& c);

/// {parent: {v: u}, roots: [...], worst_tau_deg, tau_deg: {v: t}}
Json forest_to_json(const ConvexDomain& c, const CutForest& f);

/// {root, parent: {v: u}, boundary: [a,b,c], non_rm_vertices, per_path:
/// [{leaf, tau_deg, omega_deg, medial_rm}]}
Json tree_to_json(const CutTree& t, const TreeReport* report = nullptr,
                  const std::vector<VertexId>* non_rm = nullptr);
/// Reverse of tree_to_json; the base face is recovered from `boundary`.
CutTree tree_from_json(const Json& j, const Polyhedron& p);

Json path_report_to_json(const PathReport& r);

ExperimentConfig config_from_json(const Json& j);
Json config_to_json(const ExperimentConfig& c);
Json row_to_json(const TrialRow& r);
Json report_to_json(const ExperimentReport& r);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rmcut
