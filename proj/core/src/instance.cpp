#include "densesf/instance.hpp"

#include <algorithm>
#include <numeric>

#include "densesf/errors.hpp"

namespace densesf {

namespace {

// Minimal union-find for forest/component accounting.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  // Returns false if u and v were already joined (i.e. the edge closes a cycle).
  bool unite(int u, int v) {
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int count_neighbors_in(const Graph& g, int t, const NodeSet& target) {
  const auto& nb = g.neighbors(t);
  int count = 0;
  for (int w : nb)
    if (set_contains(target, w)) ++count;
  return count;
}

}  // namespace

SteinerForestInstance::SteinerForestInstance(Graph graph, std::vector<NodeSet> terminal_sets)
    : graph_(std::move(graph)) {
  set_of_node_.assign(graph_.node_count(), -1);
  for (size_t i = 0; i < terminal_sets.size(); ++i) {
    NodeSet s = sorted_unique(terminal_sets[i]);
    if (s.empty())
      throw InputError("instance: terminal set " + std::to_string(i) + " is empty");
    for (int v : s) {
      if (v < 0 || v >= graph_.node_count())
        throw InputError("instance: terminal " + std::to_string(v) + " out of range");
      if (set_of_node_[v] != -1)
        throw InputError("instance: node " + std::to_string(v) +
                         " appears in two terminal sets");
      set_of_node_[v] = static_cast<int>(i);
    }
    terminal_sets_.push_back(std::move(s));
  }
  for (int v = 0; v < graph_.node_count(); ++v)
    if (set_of_node_[v] == -1) steiner_.push_back(v);
}

NodeSet SteinerForestInstance::all_terminals() const {
  NodeSet out;
  for (const auto& s : terminal_sets_) out.insert(out.end(), s.begin(), s.end());
  return sorted_unique(std::move(out));
}

DensityReport measure_density(const SteinerForestInstance& inst) {
  DensityReport report;
  const Graph& g = inst.graph();
  const auto& sets = inst.terminal_sets();
  const NodeSet& steiner = inst.steiner_nodes();

  auto consider = [&](int t, std::optional<int> target_idx, const NodeSet& target) {
    Rational r(count_neighbors_in(g, t, target), static_cast<std::int64_t>(target.size()));
    if (!report.delta || r < *report.delta) {
      report.delta = r;
      report.witness = DensityWitness{t, target_idx};
    }
  };

  for (int i = 0; i < inst.set_count(); ++i) {
    for (int t : sets[i]) {
      for (int j = 0; j < inst.set_count(); ++j)
        if (j != i) consider(t, j, sets[j]);
      if (!steiner.empty()) consider(t, std::nullopt, steiner);
    }
  }
  return report;  // delta stays nullopt when k == 1 and S is empty
}

bool is_pairwise_dense(const SteinerForestInstance& inst, const Rational& delta) {
  auto report = measure_density(inst);
  if (!report.delta) return true;  // no constraint exists: vacuously dense
  return *report.delta >= delta;
}

std::vector<int> trivial_sets(const SteinerForestInstance& inst) {
  std::vector<int> out;
  for (int i = 0; i < inst.set_count(); ++i) {
    auto sub = induced_subgraph(inst.graph(), inst.terminal_sets()[i]);
    if (connected_components(sub.graph).size() == 1) out.push_back(i);
  }
  return out;
}

bool is_forest(int node_count, const EdgeList& edges) {
  Dsu dsu(node_count);
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= node_count || v >= node_count || !dsu.unite(u, v))
      return false;
  return true;
}

VerifyResult verify_solution(const SteinerForestInstance& inst, const SolutionForest& f) {
  VerifyResult result;
  const Graph& g = inst.graph();
  int n = g.node_count();

  Dsu dsu(n);
  for (const auto& [u, v] : f.edges) {
    if (!g.has_edge(u, v)) {
      result.violations.push_back({Violation::Kind::UnknownEdge, -1, u, v,
                                   "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") is not an edge of the instance graph"});
      continue;
    }
    if (!dsu.unite(u, v))
      result.violations.push_back({Violation::Kind::NotForest, -1, u, v,
                                   "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") closes a cycle"});
  }

  for (int i = 0; i < inst.set_count(); ++i) {
    const NodeSet& s = inst.terminal_sets()[i];
    int root = dsu.find(s[0]);
    for (int v : s) {
      if (dsu.find(v) != root) {
        result.violations.push_back({Violation::Kind::SetDisconnected, i, s[0], v,
                                     "terminal set " + std::to_string(i) + ": nodes " +
                                         std::to_string(s[0]) + " and " + std::to_string(v) +
                                         " are in different components"});
        break;
      }
    }
  }
  return result;
}

int solution_value(const SteinerForestInstance& inst, const SolutionForest& f) {
  if (!is_forest(inst.graph().node_count(), f.edges))
    throw InputError("solution_value: edge set is not a forest");
  return static_cast<int>(f.edges.size());
}

int component_count(const SteinerForestInstance& inst, const SolutionForest& f) {
  int n = inst.graph().node_count();
  if (!is_forest(n, f.edges)) throw InputError("component_count: edge set is not a forest");
  Dsu dsu(n);
  int components = n;
  for (const auto& [u, v] : f.edges)
    if (dsu.unite(u, v)) --components;
  return components;
}

}  // namespace densesf
