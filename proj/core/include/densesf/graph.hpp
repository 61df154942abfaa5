#pragma once

#include <utility>
#include <vector>

namespace densesf {

using Edge = std::pair<int, int>;          // stored normalized: first < second
using NodeSet = std::vector<int>;          // sorted, unique node ids
using EdgeList = std::vector<Edge>;

// Undirected simple graph over dense integer node ids [0, node_count).
// Immutable after construction; all queries are pure and thread-safe.
class Graph {
 public:
  Graph() = default;

  // Normalizes edge endpoints (u < v) and removes duplicates. Throws
  // InputError on self-loops or endpoints outside [0, node_count).
  // If duplicate_count is non-null, the number of dropped duplicates is
  // written there so loaders can warn.
  Graph(int node_count, EdgeList edges, int* duplicate_count = nullptr);

  int node_count() const { return node_count_; }
  const EdgeList& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

 private:
  int node_count_ = 0;
  EdgeList edges_;                       // sorted lexicographically
  std::vector<std::vector<int>> adj_;    // each list sorted ascending
};

// Result of taking an induced subgraph: the new graph plus the bijection
// local id -> original id (ascending), so solutions can be mapped back.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // to_original[local] = original id
  int to_local(int original) const;  // -1 if not present
};

// Partition of [0, node_count) into connected parts, ordered by minimum
// member (which, with sorted parts, is parts[i][0]).
std::vector<NodeSet> connected_components(const Graph& g);

// Subgraph induced by s. Throws InputError if s has out-of-range members.
InducedSubgraph induced_subgraph(const Graph& g, const NodeSet& s);

// Deterministic spanning tree of G[s]: breadth-first from the minimum node
// id, neighbors visited in ascending order. Edges use original ids.
// Throws PreconditionError naming two unreachable nodes if G[s] is
// disconnected.
EdgeList spanning_tree(const Graph& g, const NodeSet& s);

// Helpers shared across modules.
NodeSet sorted_unique(NodeSet v);
NodeSet set_union(const NodeSet& a, const NodeSet& b);
bool set_contains(const NodeSet& s, int v);

}  // namespace densesf
