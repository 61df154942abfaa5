#include "densesf/structure.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "densesf/errors.hpp"

namespace densesf {

namespace {

void check_index(const SteinerForestInstance& inst, int i) {
  if (i < 0 || i >= inst.set_count())
    throw InputError("terminal set index " + std::to_string(i) + " out of range");
}

NodeSet family_union(const SteinerForestInstance& inst, const std::vector<int>& family) {
  NodeSet nodes;
  for (int i : family) {
    check_index(inst, i);
    const auto& s = inst.terminal_sets()[i];
    nodes.insert(nodes.end(), s.begin(), s.end());
  }
  return sorted_unique(std::move(nodes));
}

}  // namespace

bool pair_connected(const SteinerForestInstance& inst, int i, int j) {
  check_index(inst, i);
  check_index(inst, j);
  if (i == j) throw InputError("pair_connected: indices must differ");
  auto sub = induced_subgraph(
      inst.graph(), set_union(inst.terminal_sets()[i], inst.terminal_sets()[j]));
  return connected_components(sub.graph).size() == 1;
}

FamilyComponents family_components(const SteinerForestInstance& inst,
                                   const std::vector<int>& family) {
  if (family.size() < 2) throw InputError("family_components: need at least 2 sets");
  auto sub = induced_subgraph(inst.graph(), family_union(inst, family));
  auto parts = connected_components(sub.graph);
  if (parts.size() > 2)
    throw InvariantError("family_components: " + std::to_string(parts.size()) +
                         " components; instance is not pairwise 1/2-dense");

  FamilyComponents out;
  out.count = static_cast<int>(parts.size());
  for (const auto& part : parts) {
    NodeSet original;
    original.reserve(part.size());
    for (int local : part) original.push_back(sub.to_original[local]);
    out.components.push_back(sorted_unique(std::move(original)));
  }
  if (out.count == 2) {
    for (int i : family) {
      const auto& s = inst.terminal_sets()[i];
      for (const auto& comp : out.components) {
        size_t inside = std::count_if(s.begin(), s.end(),
                                      [&](int v) { return set_contains(comp, v); });
        if (2 * inside != s.size())
          throw InvariantError("family_components: set " + std::to_string(i) +
                               " is not split into exact halves");
      }
    }
  }
  return out;
}

bool is_triplet(const SteinerForestInstance& inst, int i, int j, int l) {
  check_index(inst, i);
  check_index(inst, j);
  check_index(inst, l);
  if (i == j || i == l || j == l) throw InputError("is_triplet: indices must be distinct");
  NodeSet nodes = set_union(set_union(inst.terminal_sets()[i], inst.terminal_sets()[j]),
                            inst.terminal_sets()[l]);
  auto sub = induced_subgraph(inst.graph(), nodes);
  return connected_components(sub.graph).size() == 1;
}

std::optional<std::array<int, 3>> find_triplet(const SteinerForestInstance& inst,
                                               const std::vector<int>& family) {
  std::vector<int> f = family;
  std::sort(f.begin(), f.end());
  for (size_t a = 0; a < f.size(); ++a)
    for (size_t b = a + 1; b < f.size(); ++b)
      for (size_t c = b + 1; c < f.size(); ++c)
        if (is_triplet(inst, f[a], f[b], f[c]))
          return std::array<int, 3>{f[a], f[b], f[c]};
  return std::nullopt;
}

RankHistogram rank_histogram(const SteinerForestInstance& inst, const SolutionForest& f) {
  if (!verify_solution(inst, f).ok())
    throw InputError("rank_histogram: solution is not feasible for the instance");

  int n = inst.graph().node_count();
  std::vector<int> tree_id(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : f.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int trees = 0;
  for (const auto& [u, v] : f.edges) {
    if (tree_id[u] != -1) continue;
    (void)v;
    std::vector<int> stack{u};
    tree_id[u] = trees;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int w : adj[x])
        if (tree_id[w] == -1) {
          tree_id[w] = trees;
          stack.push_back(w);
        }
    }
    ++trees;
  }

  RankHistogram hist;
  for (int t = 0; t < trees; ++t) {
    int rank = 0;
    for (const auto& s : inst.terminal_sets()) {
      bool contained = std::all_of(s.begin(), s.end(),
                                   [&](int v) { return tree_id[v] == t; });
      if (contained) ++rank;
    }
    ++hist.counts[rank];
  }
  return hist;
}

}  // namespace densesf
