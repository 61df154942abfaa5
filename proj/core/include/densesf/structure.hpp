#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "densesf/instance.hpp"

namespace densesf {

// True iff the subgraph induced by T_i union T_j is connected.
bool pair_connected(const SteinerForestInstance& inst, int i, int j);

struct FamilyComponents {
  int count = 0;                    // 1 or 2
  std::vector<NodeSet> components;  // node sets, ordered by minimum member
};

// Component structure of the subgraph induced by the union of the family's
// terminal sets. Intended for pairwise (1/2)-dense instances without Steiner
// nodes: there the count is 1 or 2, and in the 2 case each component holds
// exactly half of every member set. A count above 2, or an uneven split,
// raises InvariantError (a non-dense input slipped through).
FamilyComponents family_components(const SteinerForestInstance& inst,
                                   const std::vector<int>& family);

// True iff the union of the three (distinct) sets induces a connected graph.
bool is_triplet(const SteinerForestInstance& inst, int i, int j, int l);

// Lexicographically first triplet within the family, or nullopt.
std::optional<std::array<int, 3>> find_triplet(const SteinerForestInstance& inst,
                                               const std::vector<int>& family);

// rank of a tree H = number of terminal sets fully contained in V(H).
struct RankHistogram {
  std::map<int, int> counts;  // rank -> number of trees of that rank
};

// Histogram over the trees of f (trees are components of the subgraph formed
// by f's edges; untouched nodes are not counted). Requires verify_solution
// to pass; throws InputError otherwise.
RankHistogram rank_histogram(const SteinerForestInstance& inst, const SolutionForest& f);

}  // namespace densesf
