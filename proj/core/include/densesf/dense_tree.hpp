#pragma once

#include <optional>

#include "densesf/instance.hpp"

namespace densesf {

// Number of terminal components the star-contraction phase reduces to
// before the exact finish takes over: max(3, ceil(1/epsilon)), capped by the
// exact-finish budget. epsilon <= 0 requests a pure exact finish.
int contraction_threshold(double epsilon);

inline constexpr int kExactFinishBudget = 14;

// Single-tree solver: connects the union of all terminal sets by one tree,
// possibly through Steiner nodes. Greedy star contraction (the Steiner node
// adjacent to the most terminal components, ties by lowest id) down to the
// threshold, then an exact Steiner tree dynamic program over the remaining
// terminal components. Returns nullopt when the terminals are not mutually
// reachable in G.
std::optional<SolutionForest> solve_single_tree(const SteinerForestInstance& inst,
                                                double epsilon);

// Combiner for pairwise (>1/2)-dense instances with Steiner nodes: the
// optimum either is a single component or avoids Steiner nodes, so it takes
// the better of solve_single_tree on the merged terminals and solve_greedy
// on the instance restricted to terminal nodes. Ties prefer the no-Steiner
// branch.
std::optional<SolutionForest> solve_theorem1(const SteinerForestInstance& inst,
                                             double epsilon);

// The instance with Steiner nodes dropped and terminals relabeled densely;
// used by the no-Steiner branch. node_map[new] = original id.
struct RestrictedInstance {
  SteinerForestInstance instance;
  std::vector<int> node_map;
};
RestrictedInstance restrict_to_terminals(const SteinerForestInstance& inst);

}  // namespace densesf
