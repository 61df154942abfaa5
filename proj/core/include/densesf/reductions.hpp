#pragma once

#include <optional>

#include "densesf/instance.hpp"
#include "densesf/oracle.hpp"
#include "densesf/reductions_types.hpp"

namespace densesf {

// Set Cover -> dense Group Steiner Tree gadget. Layout with k = |family|:
// element nodes e(u,j) = u*k + j, set nodes s(j) = n*k + j, root r = n*k + k.
// Edges s(j)-e(u,j) iff u is in family[j], plus s(j)-r for every j. Groups:
// one per element (its k e-nodes), one holding all s-nodes, one for r; they
// partition the nodes, so the gadget has no Steiner vertices.
GroupSteinerInstance set_cover_to_group_steiner(const SetCoverInstance& sc);

struct GroupGadgetReport {
  std::optional<int> cover_size;        // nullopt: family does not cover U
  std::optional<int> group_tree_edges;  // nullopt: gadget infeasible
  bool correspondence_holds = false;    // tree = n + cover, or both infeasible
};

// Checks the cost map of the gadget: an optimal cover of size c corresponds
// to an optimal group tree of n + c edges.
GroupGadgetReport verify_group_gadget(const SetCoverInstance& sc);

// Vertex Cover -> unit-weight Steiner Tree gadget (step 1): V-nodes keep
// their ids, edge m of g becomes terminal node |V| + m adjacent to its two
// endpoints, V-nodes form a clique and are the Steiner nodes. Single
// terminal set = all edge nodes. Requires at least one edge.
SteinerForestInstance vertex_cover_to_steiner_tree(const Graph& g);

// Step 2: additionally a companion node |V| + |E| + m hangs off each edge
// node, forming a pair terminal set, and the V-nodes become one more
// terminal set. No Steiner nodes remain.
SteinerForestInstance vertex_cover_to_steiner_forest(const Graph& g);

struct ForestGadgetReport {
  int tree_value = 0;    // oracle optimum on the step-1 gadget
  int forest_value = 0;  // oracle optimum on the step-2 gadget
  int difference = 0;
  bool matches_node_count = false;  // difference == |V(g)|
  bool matches_edge_count = false;  // difference == |E(g)|
};

// Measures how the optimum changes from step 1 to step 2. The claimed
// increase is checked against both |V| and |E| and reported, not asserted.
ForestGadgetReport verify_forest_gadget(const Graph& g, const OracleCaps& caps);

}  // namespace densesf
