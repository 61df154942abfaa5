#include "densesf/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "densesf/errors.hpp"

namespace densesf {

Graph::Graph(int node_count, EdgeList edges, int* duplicate_count)
    : node_count_(node_count) {
  if (node_count < 0) throw InputError("Graph: negative node count");
  for (auto& [u, v] : edges) {
    if (u == v) throw InputError("Graph: self-loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= node_count || v >= node_count)
      throw InputError("Graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for " + std::to_string(node_count) + " nodes");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  if (duplicate_count) *duplicate_count = static_cast<int>(edges.end() - last);
  edges.erase(last, edges.end());
  edges_ = std::move(edges);

  adj_.resize(node_count_);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= node_count_)
    throw InputError("Graph::neighbors: node " + std::to_string(v) + " out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int InducedSubgraph::to_local(int original) const {
  auto it = std::lower_bound(to_original.begin(), to_original.end(), original);
  if (it == to_original.end() || *it != original) return -1;
  return static_cast<int>(it - to_original.begin());
}

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<NodeSet> parts;
  std::vector<char> seen(g.node_count(), 0);
  for (int start = 0; start < g.node_count(); ++start) {
    if (seen[start]) continue;
    NodeSet part;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      part.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

InducedSubgraph induced_subgraph(const Graph& g, const NodeSet& s) {
  NodeSet nodes = sorted_unique(s);
  for (int v : nodes)
    if (v < 0 || v >= g.node_count())
      throw InputError("induced_subgraph: node " + std::to_string(v) + " out of range");
  InducedSubgraph out;
  out.to_original = nodes;
  EdgeList edges;
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (int w : g.neighbors(nodes[i])) {
      if (w <= nodes[i]) continue;
      auto it = std::lower_bound(nodes.begin(), nodes.end(), w);
      if (it != nodes.end() && *it == w)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(it - nodes.begin()));
    }
  }
  out.graph = Graph(static_cast<int>(nodes.size()), std::move(edges));
  return out;
}

EdgeList spanning_tree(const Graph& g, const NodeSet& s) {
  NodeSet nodes = sorted_unique(s);
  if (nodes.empty()) return {};
  for (int v : nodes)
    if (v < 0 || v >= g.node_count())
      throw InputError("spanning_tree: node " + std::to_string(v) + " out of range");

  std::vector<char> inside(g.node_count(), 0);
  for (int v : nodes) inside[v] = 1;

  EdgeList tree;
  std::vector<char> seen(g.node_count(), 0);
  std::queue<int> q;
  q.push(nodes[0]);
  seen[nodes[0]] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (!inside[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      tree.emplace_back(std::min(v, w), std::max(v, w));
      q.push(w);
    }
  }
  if (reached != nodes.size()) {
    int orphan = -1;
    for (int v : nodes)
      if (!seen[v]) {
        orphan = v;
        break;
      }
    throw PreconditionError("spanning_tree: induced subgraph disconnected; nodes " +
                            std::to_string(nodes[0]) + " and " + std::to_string(orphan) +
                            " are not connected within the set");
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

NodeSet sorted_unique(NodeSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const NodeSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

}  // namespace densesf
