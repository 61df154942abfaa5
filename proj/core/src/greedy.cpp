#include "densesf/greedy.hpp"

#include <algorithm>

#include "densesf/errors.hpp"

namespace densesf {

std::optional<SolutionForest> solve_greedy(const SteinerForestInstance& inst) {
  if (!inst.steiner_nodes().empty())
    throw PreconditionError("solve_greedy: instance has Steiner nodes");
  auto density = measure_density(inst);
  if (density.delta && *density.delta <= Rational(1, 2))
    throw PreconditionError("solve_greedy: measured density " + density.delta->str() +
                            " is not > 1/2");

  const auto& sets = inst.terminal_sets();
  int k = inst.set_count();

  if (k == 1) {
    auto sub = induced_subgraph(inst.graph(), sets[0]);
    if (connected_components(sub.graph).size() > 1) return std::nullopt;
    return SolutionForest{spanning_tree(inst.graph(), sets[0])};
  }

  auto trivials = trivial_sets(inst);
  std::vector<char> is_trivial(k, 0);
  for (int i : trivials) is_trivial[i] = 1;
  std::vector<int> nontrivial;
  for (int i = 0; i < k; ++i)
    if (!is_trivial[i]) nontrivial.push_back(i);

  // Each tree is kept as its node set; edges are materialized at the end.
  std::vector<NodeSet> trees;
  int first_trivial_tree = -1;
  for (int i : trivials) {
    if (first_trivial_tree == -1) first_trivial_tree = static_cast<int>(trees.size());
    trees.push_back(sets[i]);
  }

  int last_pair_tree = -1;
  size_t p = 0;
  for (; p + 1 < nontrivial.size(); p += 2) {
    last_pair_tree = static_cast<int>(trees.size());
    trees.push_back(set_union(sets[nontrivial[p]], sets[nontrivial[p + 1]]));
  }

  if (p < nontrivial.size()) {
    // Odd leftover: merge into the last rank-2 tree when one exists (making
    // it rank 3), else into a trivial tree.
    const NodeSet& leftover = sets[nontrivial[p]];
    int host = last_pair_tree != -1 ? last_pair_tree : first_trivial_tree;
    trees[host] = set_union(trees[host], leftover);
  }

  SolutionForest forest;
  for (const auto& tree : trees) {
    auto edges = spanning_tree(inst.graph(), tree);
    forest.edges.insert(forest.edges.end(), edges.begin(), edges.end());
  }
  std::sort(forest.edges.begin(), forest.edges.end());
  return forest;
}

}  // namespace densesf
