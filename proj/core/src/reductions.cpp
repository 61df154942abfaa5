#include "densesf/reductions.hpp"

#include <string>

#include "densesf/errors.hpp"

namespace densesf {

GroupSteinerInstance set_cover_to_group_steiner(const SetCoverInstance& sc) {
  if (sc.family.empty()) throw InputError("set_cover_to_group_steiner: empty family");
  int n = sc.universe_size;
  int k = static_cast<int>(sc.family.size());
  for (const auto& set : sc.family) {
    if (set.empty()) throw InputError("set_cover_to_group_steiner: empty family member");
    for (int u : set)
      if (u < 0 || u >= n)
        throw InputError("set_cover_to_group_steiner: element " + std::to_string(u) +
                         " out of range");
  }

  auto e_node = [k](int u, int j) { return u * k + j; };
  int s_base = n * k;
  int root = n * k + k;

  EdgeList edges;
  for (int j = 0; j < k; ++j) {
    for (int u : sc.family[j]) edges.emplace_back(s_base + j, e_node(u, j));
    edges.emplace_back(s_base + j, root);
  }

  GroupSteinerInstance out;
  out.graph = Graph(n * k + k + 1, std::move(edges));
  for (int u = 0; u < n; ++u) {
    NodeSet group;
    for (int j = 0; j < k; ++j) group.push_back(e_node(u, j));
    out.groups.push_back(std::move(group));
  }
  NodeSet set_group;
  for (int j = 0; j < k; ++j) set_group.push_back(s_base + j);
  out.groups.push_back(std::move(set_group));
  out.groups.push_back(NodeSet{root});
  return out;
}

GroupGadgetReport verify_group_gadget(const SetCoverInstance& sc) {
  GroupGadgetReport report;
  report.cover_size = oracle_set_cover(sc);
  auto gadget = set_cover_to_group_steiner(sc);
  auto tree = oracle_group_steiner(gadget, /*max_groups=*/sc.universe_size + 2,
                                   /*max_nodes=*/gadget.graph.node_count());
  if (tree) report.group_tree_edges = static_cast<int>(tree->edges.size());

  if (!report.cover_size && !report.group_tree_edges)
    report.correspondence_holds = true;  // infeasible on both sides
  else if (report.cover_size && report.group_tree_edges)
    report.correspondence_holds =
        *report.group_tree_edges == sc.universe_size + *report.cover_size;
  return report;
}

SteinerForestInstance vertex_cover_to_steiner_tree(const Graph& g) {
  if (g.edges().empty()) throw InputError("vertex_cover_to_steiner_tree: graph has no edges");
  int nv = g.node_count();
  int ne = static_cast<int>(g.edges().size());

  EdgeList edges;
  for (int m = 0; m < ne; ++m) {
    const auto& [u, v] = g.edges()[m];
    edges.emplace_back(u, nv + m);
    edges.emplace_back(v, nv + m);
  }
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) edges.emplace_back(u, v);

  NodeSet terminals;
  for (int m = 0; m < ne; ++m) terminals.push_back(nv + m);
  return SteinerForestInstance(Graph(nv + ne, std::move(edges)), {terminals});
}

SteinerForestInstance vertex_cover_to_steiner_forest(const Graph& g) {
  if (g.edges().empty())
    throw InputError("vertex_cover_to_steiner_forest: graph has no edges");
  int nv = g.node_count();
  int ne = static_cast<int>(g.edges().size());

  EdgeList edges;
  for (int m = 0; m < ne; ++m) {
    const auto& [u, v] = g.edges()[m];
    edges.emplace_back(u, nv + m);
    edges.emplace_back(v, nv + m);
    edges.emplace_back(nv + m, nv + ne + m);  // companion node
  }
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) edges.emplace_back(u, v);

  std::vector<NodeSet> sets;
  for (int m = 0; m < ne; ++m) sets.push_back({nv + m, nv + ne + m});
  NodeSet v_nodes;
  for (int u = 0; u < nv; ++u) v_nodes.push_back(u);
  sets.push_back(std::move(v_nodes));
  return SteinerForestInstance(Graph(nv + 2 * ne, std::move(edges)), std::move(sets));
}

ForestGadgetReport verify_forest_gadget(const Graph& g, const OracleCaps& caps) {
  ForestGadgetReport report;
  auto tree_inst = vertex_cover_to_steiner_tree(g);
  auto tree_opt = oracle_steiner_forest(tree_inst, caps);
  if (!tree_opt)
    throw InvariantError("verify_forest_gadget: step-1 gadget should be feasible");
  report.tree_value = static_cast<int>(tree_opt->edges.size());

  auto forest_inst = vertex_cover_to_steiner_forest(g);
  auto forest_opt = oracle_steiner_forest(forest_inst, caps);
  if (!forest_opt)
    throw InvariantError("verify_forest_gadget: step-2 gadget should be feasible");
  report.forest_value = static_cast<int>(forest_opt->edges.size());

  report.difference = report.forest_value - report.tree_value;
  report.matches_node_count = report.difference == g.node_count();
  report.matches_edge_count = report.difference == static_cast<int>(g.edges().size());
  return report;
}

}  // namespace densesf
