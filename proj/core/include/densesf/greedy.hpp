#pragma once

#include <optional>

#include "densesf/instance.hpp"

namespace densesf {

// Exact greedy solver for pairwise (>1/2)-dense instances without Steiner
// nodes: spanning trees for trivial sets, remaining sets paired in ascending
// index order, an odd leftover merged into an existing tree.
//
// Returns nullopt ("no solution") exactly when k == 1, S is empty, and
// G[T_1] is disconnected. Throws PreconditionError when the instance has
// Steiner nodes or measured density <= 1/2.
std::optional<SolutionForest> solve_greedy(const SteinerForestInstance& inst);

}  // namespace densesf
