#include "rmcut/harness.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "rmcut/random.hpp"

namespace rmcut {

CutTree tree_from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                        VertexId root) {
  if (edges.size() + 1 != n) throw NotSpanning("tree_from_edges: need exactly n - 1 edges");
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw NotSpanning("tree_from_edges: vertex out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  CutTree t;
  t.parent.assign(n, std::nullopt);
  t.root = root;
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  std::deque<VertexId> queue{root};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      t.parent[w] = v;
      queue.push_back(w);
    }
  }
  if (reached != n) throw CyclicCut("tree_from_edges: edges contain a cycle");
  return t;
}

namespace {

struct DisjointSets {
  std::vector<VertexId> up;
  explicit DisjointSets(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), VertexId{0}); }
  VertexId find(VertexId v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    up[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

CutTree random_spanning_tree(const Polyhedron& p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<double, std::pair<VertexId, VertexId>>> weighted;
  for (const auto& [e, faces] : p.edges()) weighted.push_back({rng.uniform(), e});
  std::sort(weighted.begin(), weighted.end());
  DisjointSets ds(p.vertex_count());
  std::vector<std::pair<VertexId, VertexId>> chosen;
  for (const auto& [w, e] : weighted)
    if (ds.unite(e.first, e.second)) chosen.push_back(e);
  return tree_from_edges(p.vertex_count(), chosen, 0);
}

std::vector<CutTree> all_spanning_trees(const Polyhedron& p) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [e, faces] : p.edges()) edges.push_back(e);
  if (edges.size() > 12) throw TooLarge("all_spanning_trees: more than 12 edges");
  const std::size_t n = p.vertex_count();
  std::vector<CutTree> out;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) + 1 != n) continue;
    DisjointSets ds(n);
    std::vector<std::pair<VertexId, VertexId>> chosen;
    bool acyclic = true;
    for (std::size_t i = 0; i < edges.size() && acyclic; ++i)
      if (mask >> i & 1u) {
        acyclic = ds.unite(edges[i].first, edges[i].second);
        chosen.push_back(edges[i]);
      }
    if (acyclic) out.push_back(tree_from_edges(n, chosen, 0));
  }
  return out;
}

ExperimentAggregates aggregate(const std::vector<TrialRow>& rows) {
  ExperimentAggregates a;
  std::size_t success = 0, overlapping = 0, success_overlapping = 0;
  for (const TrialRow& r : rows) {
    if (!r.ok) continue;
    ++a.completed;
    success += r.rm_found;
    overlapping += r.overlap_pairs > 0;
    success_overlapping += r.rm_found && r.overlap_pairs > 0;
    ++a.stuck_histogram[r.stuck_vertices];
    a.max_seam_error = std::max(a.max_seam_error, r.max_seam_error);
    a.max_length_error = std::max(a.max_length_error, r.max_length_error);
  }
  if (a.completed > 0) {
    a.success_rate = static_cast<double>(success) / static_cast<double>(a.completed);
    a.overlap_rate = static_cast<double>(overlapping) / static_cast<double>(a.completed);
  }
  if (success > 0)
    a.overlap_rate_rm_found = static_cast<double>(success_overlapping) / static_cast<double>(success);
  return a;
}

TrialRow run_trial(const ExperimentConfig& cfg, std::size_t trial) {
  TrialRow row;
  row.trial = trial;
  row.seed = sub_seed(cfg.seed, trial);
  try {
    Polyhedron mesh = random_spherical(cfg.n, row.seed, cfg.add_poles, cfg.z_scale, cfg.opts.tol);
    CutTree tree;
    if (cfg.mode == TreeMode::rm_tree) {
      std::optional<Algorithm2Result> result;
      if (cfg.opts.split_obtuse_retry) {
        try {
          result = algorithm2(mesh, cfg.opts);
        } catch (const NoRmConnection&) {
        }
      }
      if (!result) {
        Algorithm2Options lenient = cfg.opts;
        lenient.allow_non_rm = true;
        lenient.split_obtuse_retry = false;
        result = algorithm2(mesh, lenient);
      }
      row.stuck_vertices = result->non_rm_vertices.size();
      row.rm_found = row.stuck_vertices == 0;
      row.split_applied = result->split_applied;
      mesh = result->mesh;
      tree = result->tree;
    } else {
      tree = random_spanning_tree(mesh, sub_seed(row.seed, 0x7e3eull));
      const TreeReport rep = verify_cut_tree(mesh, tree, cfg.opts.tol);
      row.stuck_vertices = rep.non_rm_paths();
      row.rm_found = row.stuck_vertices == 0;
    }
    const Unfolding u = unfold(mesh, tree);
    row.overlap_pairs = detect_overlap(u, cfg.opts.tol).size();
    const UnfoldResiduals res = unfold_residuals(mesh, tree, u);
    row.max_seam_error = res.max_seam_error;
    row.max_length_error = res.max_length_error;
    row.vertices = mesh.vertex_count();
    row.faces = mesh.face_count();
  } catch (const Error& e) {
    row.ok = false;
    row.error = e.what();
  }
  return row;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                const std::function<void(const TrialRow&)>& on_row) {
  if (cfg.trials < 1) throw DegenerateInput("run_experiment: trials must be >= 1");
  ExperimentReport rep;
  rep.config = cfg;
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    rep.rows.push_back(run_trial(cfg, i));
    if (on_row) on_row(rep.rows.back());
  }
  rep.aggregates = aggregate(rep.rows);
  return rep;
}

}  // namespace rmcut
