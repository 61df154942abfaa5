#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "densesf/generators.hpp"
#include "densesf/instance.hpp"

namespace testutil {

using densesf::EdgeList;
using densesf::Graph;
using densesf::NodeSet;
using densesf::SteinerForestInstance;

// The hexagon 0-2-4-1-3-5-0 with antipodal terminal pairs {0,1},{2,3},{4,5}:
// every terminal has exactly one neighbor in each other set.
inline SteinerForestInstance six_cycle() {
  Graph g(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  return SteinerForestInstance(std::move(g), {{0, 1}, {2, 3}, {4, 5}});
}

// T1 = {0,1}, T2 = {2,3}, complete bipartite between them, no other edges.
inline SteinerForestInstance bipartite_pair() {
  Graph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  return SteinerForestInstance(std::move(g), {{0, 1}, {2, 3}});
}

// Uniform random forest on n nodes: a random spanning forest of a random
// edge subset, built with a union-find filter.
inline EdgeList random_forest(int n, std::mt19937_64& rng) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  EdgeList edges;
  int attempts = static_cast<int>(rng() % (2 * n + 1));
  for (int i = 0; i < attempts; ++i) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    int ru = find(u), rv = find(v);
    if (ru == rv) continue;
    parent[ru] = rv;
    edges.push_back({std::min(u, v), std::max(u, v)});
  }
  return edges;
}

// Random permutation of [0, n).
inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(p[i], p[j]);
  }
  return p;
}

// The instance with every node id mapped through perm.
inline SteinerForestInstance relabel(const SteinerForestInstance& inst,
                                     const std::vector<int>& perm) {
  EdgeList edges;
  for (auto [u, v] : inst.graph().edges())
    edges.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
  std::vector<NodeSet> sets;
  for (const auto& t : inst.terminal_sets()) {
    NodeSet s;
    for (int v : t) s.push_back(perm[v]);
    sets.push_back(densesf::sorted_unique(std::move(s)));
  }
  return SteinerForestInstance(Graph(inst.graph().node_count(), std::move(edges)),
                               std::move(sets));
}

}  // namespace testutil
