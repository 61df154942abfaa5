#include "densesf/half_dense.hpp"

#include <algorithm>

#include "densesf/errors.hpp"
#include "densesf/structure.hpp"

namespace densesf {

namespace {

void check_preconditions(const SteinerForestInstance& inst) {
  if (!inst.steiner_nodes().empty())
    throw PreconditionError("solve_half_dense: instance has Steiner nodes");
  auto density = measure_density(inst);
  if (density.delta && *density.delta < Rational(1, 2))
    throw PreconditionError("solve_half_dense: measured density " + density.delta->str() +
                            " is below 1/2");
}

}  // namespace

PackingReduction build_packing_instance(const SteinerForestInstance& inst) {
  check_preconditions(inst);

  auto trivials = trivial_sets(inst);
  std::vector<char> is_trivial(inst.set_count(), 0);
  for (int i : trivials) is_trivial[i] = 1;

  PackingReduction red;
  for (int i = 0; i < inst.set_count(); ++i)
    if (!is_trivial[i]) red.universe_sets.push_back(i);

  int m = static_cast<int>(red.universe_sets.size());
  std::vector<std::vector<int>> family;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (pair_connected(inst, red.universe_sets[a], red.universe_sets[b])) {
        family.push_back({a, b});
        red.member_sets.push_back({red.universe_sets[a], red.universe_sets[b]});
      }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        if (is_triplet(inst, red.universe_sets[a], red.universe_sets[b],
                       red.universe_sets[c])) {
          family.push_back({a, b, c});
          red.member_sets.push_back(
              {red.universe_sets[a], red.universe_sets[b], red.universe_sets[c]});
        }
  red.packing = PackingInstance(m, std::move(family));
  return red;
}

std::optional<SolutionForest> solve_half_dense(const SteinerForestInstance& inst,
                                               const PackingBackend& backend) {
  auto red = build_packing_instance(inst);
  const auto& sets = inst.terminal_sets();

  auto trivials = trivial_sets(inst);
  Packing packing = solve_packing(red.packing, backend);

  if (packing.chosen.empty() && trivials.empty() && !red.universe_sets.empty())
    return std::nullopt;

  std::vector<NodeSet> trees;
  for (int i : trivials) trees.push_back(sets[i]);

  std::vector<char> covered(inst.set_count(), 0);
  for (int i : trivials) covered[i] = 1;
  for (int member : packing.chosen) {
    NodeSet nodes;
    for (int set_idx : red.member_sets[member]) {
      covered[set_idx] = 1;
      nodes = set_union(nodes, sets[set_idx]);
    }
    trees.push_back(std::move(nodes));
  }

  // Leftover terminal sets are all attached to the first tree; any tree
  // works, since each leftover terminal has at least half of some fully
  // contained set as neighbors, hence at least one edge into the host.
  NodeSet leftover;
  for (int i = 0; i < inst.set_count(); ++i)
    if (!covered[i]) leftover = set_union(leftover, sets[i]);
  if (!leftover.empty()) {
    if (trees.empty())
      throw InvariantError("solve_half_dense: leftovers without any host tree");
    trees[0] = set_union(trees[0], leftover);
  }

  SolutionForest forest;
  for (const auto& tree : trees) {
    auto edges = spanning_tree(inst.graph(), tree);
    forest.edges.insert(forest.edges.end(), edges.begin(), edges.end());
  }
  std::sort(forest.edges.begin(), forest.edges.end());
  return forest;
}

Rational ratio_bound(const Rational& beta) {
  if (beta <= Rational(0, 1) || beta > Rational(1, 1))
    throw InputError("ratio_bound: beta must be in (0, 1]");
  return (Rational(4, 1) - beta) / Rational(3, 1);
}

}  // namespace densesf
