#pragma once

#include <optional>

#include "densesf/instance.hpp"
#include "densesf/reductions_types.hpp"

namespace densesf {

// Size caps for the exact enumeration oracles. Overridable via the
// DENSESF_ORACLE_CAPS environment variable ("max_sets,max_steiner,max_nodes").
struct OracleCaps {
  int max_sets = 8;
  int max_steiner = 10;
  int max_nodes = 18;
};

OracleCaps oracle_caps_from_env(OracleCaps defaults = {});

// Exact Steiner Forest optimum by enumerating block decompositions: the
// terminal sets are partitioned into blocks, each block augmented with a
// minimal Steiner-node set making its union induced-connected (Steiner
// choices disjoint across blocks), maximizing the component count per the
// edges/components duality. Returns nullopt when infeasible, throws
// SizeError past the caps.
std::optional<SolutionForest> oracle_steiner_forest(const SteinerForestInstance& inst,
                                                    const OracleCaps& caps = {});

struct OracleTree {
  EdgeList edges;
  NodeSet nodes;
};

// Exact Group Steiner Tree optimum: minimum-edge subtree touching every
// group, by a dynamic program over group subsets. Returns nullopt when no
// connected subgraph touches all groups. The cap limits the group count
// (the DP is exponential in it) and the node count.
std::optional<OracleTree> oracle_group_steiner(const GroupSteinerInstance& inst,
                                               int max_groups = 12, int max_nodes = 24);

// Exact minimum Set Cover size by subset enumeration; nullopt if the family
// does not cover the universe.
std::optional<int> oracle_set_cover(const SetCoverInstance& sc, int max_universe = 12,
                                    int max_family = 20);

// Exact minimum Vertex Cover size by subset enumeration.
int oracle_vertex_cover(const Graph& g, int max_nodes = 10);

}  // namespace densesf
