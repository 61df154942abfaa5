#pragma once

#include <optional>
#include <vector>

#include "densesf/instance.hpp"
#include "densesf/packing.hpp"

namespace densesf {

// Reduction of a pairwise (1/2)-dense no-Steiner instance to 3-Set Packing:
// the universe is the non-trivial terminal sets, the family is every
// connected pair plus every triplet among them.
struct PackingReduction {
  PackingInstance packing;
  std::vector<int> universe_sets;            // element e -> terminal set index
  std::vector<std::vector<int>> member_sets; // family member -> terminal set indices
};

PackingReduction build_packing_instance(const SteinerForestInstance& inst);

// (13/12 + eps)-style approximation for pairwise (1/2)-dense instances
// without Steiner nodes: trivial sets get their own trees, a 3-Set Packing
// over connected pairs/triplets chooses the multi-set trees, leftovers are
// merged into one existing tree.
//
// Returns nullopt ("no solution") exactly when the packing is empty, there
// are no trivial sets, and the universe is non-empty. Throws
// PreconditionError on Steiner nodes or measured density < 1/2.
std::optional<SolutionForest> solve_half_dense(const SteinerForestInstance& inst,
                                               const PackingBackend& backend);

// alpha(beta) = (4 - beta)/3: the approximation factor obtained by feeding a
// beta-guaranteed packing subroutine into the ratio analysis. beta in (0, 1].
Rational ratio_bound(const Rational& beta);

}  // namespace densesf
