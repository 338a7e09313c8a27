#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rmcut/cut_tree.hpp"
#include "rmcut/unfold.hpp"

namespace rmcut {

enum class TreeMode { rm_tree, random_tree };

struct ExperimentConfig {
  std::size_t n = 100;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  TreeMode mode = TreeMode::rm_tree;
  double z_scale = 1.0;  ///< 1 is the sphere; otherwise the ellipsoid (1, 1, z_scale)
  bool add_poles = true;
  Algorithm2Options opts;
};

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  bool ok = true;             ///< false when the trial raised a structural error
  std::string error;
  bool rm_found = false;      ///< rm_tree: no stuck vertex; random_tree: every path medially rm
  std::size_t stuck_vertices = 0;
  std::size_t overlap_pairs = 0;
  std::size_t vertices = 0;
  std::size_t faces = 0;
  bool split_applied = false;
  double max_seam_error = 0.0;
  double max_length_error = 0.0;
};

struct ExperimentAggregates {
  std::size_t completed = 0;
  double success_rate = 0.0;            ///< rm_found over completed trials
  double overlap_rate = 0.0;            ///< trials with any overlap over completed
  double overlap_rate_rm_found = 0.0;   ///< same, restricted to rm_found trials
  std::map<std::size_t, std::size_t> stuck_histogram;
  double max_seam_error = 0.0;
  double max_length_error = 0.0;

  bool operator==(const ExperimentAggregates&) const = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRow> rows;
  ExperimentAggregates aggregates;
};

ExperimentAggregates aggregate(const std::vector<TrialRow>& rows);

/// Trial i uses the mesh seed sub_seed(seed, i). In rm_tree mode the tree
/// comes from algorithm2 run with non-rm edges allowed, so stuck vertices are
/// counted instead of aborting; in random_tree mode from random_spanning_tree.
/// Per-trial errors are recorded in the row.
TrialRow run_trial(const ExperimentConfig& cfg, std::size_t trial);

ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                const std::function<void(const TrialRow&)>& on_row = {});

/// Random edge weights (from `seed`) and Kruskal's minimum spanning tree,
/// rooted at vertex 0.
CutTree random_spanning_tree(const Polyhedron& p, std::uint64_t seed);

/// Every spanning tree of the 1-skeleton, rooted at vertex 0. Exponential;
/// throws TooLarge above 12 edges.
std::vector<CutTree> all_spanning_trees(const Polyhedron& p);

/// Parent pointers toward `root` from an undirected edge list that forms a
/// spanning tree. Throws NotSpanning or CyclicCut.
CutTree tree_from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                        VertexId root);

}  // namespace rmcut
