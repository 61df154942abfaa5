#pragma once

#include <vector>

#include "densesf/graph.hpp"

namespace densesf {

// Group Steiner Tree instance: a subtree must contain at least one node of
// every group. Groups may overlap and need not cover all nodes in general;
// the Set Cover gadget produces groups that partition the nodes.
struct GroupSteinerInstance {
  Graph graph;
  std::vector<NodeSet> groups;
};

struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> family;  // non-empty subsets of [0, universe_size)
};

}  // namespace densesf
