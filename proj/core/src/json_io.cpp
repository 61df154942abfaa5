#include "densesf/json_io.hpp"

#include <algorithm>
#include <iostream>

#include <json.hpp>

#include "densesf/errors.hpp"

namespace densesf {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw InputError("json: malformed document");
  return doc;
}

json edges_to_json(const EdgeList& edges) {
  EdgeList sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  json out = json::array();
  for (const auto& [u, v] : sorted) out.push_back(json::array({u, v}));
  return out;
}

EdgeList edges_from_json(const json& arr) {
  if (!arr.is_array()) throw InputError("json: 'edges' must be an array");
  EdgeList edges;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw InputError("json: each edge must be a pair of integers");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

json sets_to_json(const std::vector<NodeSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) {
    NodeSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(sorted);
  }
  return out;
}

std::vector<NodeSet> sets_from_json(const json& arr, const char* key) {
  if (!arr.is_array()) throw InputError(std::string("json: '") + key + "' must be an array");
  std::vector<NodeSet> sets;
  for (const auto& s : arr) {
    if (!s.is_array()) throw InputError(std::string("json: '") + key + "' entries must be arrays");
    NodeSet set;
    for (const auto& v : s) {
      if (!v.is_number_integer())
        throw InputError(std::string("json: '") + key + "' members must be integers");
      set.push_back(v.get<int>());
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

Graph make_graph(int nodes, EdgeList edges) {
  int duplicates = 0;
  Graph g(nodes, std::move(edges), &duplicates);
  if (duplicates > 0)
    std::cerr << "warning: " << duplicates << " duplicate edge(s) dropped\n";
  return g;
}

int get_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw InputError(std::string("json: missing integer field '") + key + "'");
  return doc[key].get<int>();
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json doc;
  doc["nodes"] = g.node_count();
  doc["edges"] = edges_to_json(g.edges());
  return doc.dump();
}

Graph graph_from_json(const std::string& text) {
  json doc = parse(text);
  return make_graph(get_int(doc, "nodes"), edges_from_json(doc.value("edges", json::array())));
}

std::string instance_to_json(const SteinerForestInstance& inst) {
  json doc;
  doc["nodes"] = inst.graph().node_count();
  doc["edges"] = edges_to_json(inst.graph().edges());
  doc["terminal_sets"] = sets_to_json(inst.terminal_sets());
  return doc.dump();
}

SteinerForestInstance instance_from_json(const std::string& text) {
  json doc = parse(text);
  Graph g = make_graph(get_int(doc, "nodes"), edges_from_json(doc.value("edges", json::array())));
  if (!doc.contains("terminal_sets"))
    throw InputError("json: instance needs 'terminal_sets'");
  return SteinerForestInstance(std::move(g), sets_from_json(doc["terminal_sets"], "terminal_sets"));
}

std::string solution_to_json(const SolutionForest& f) {
  json doc;
  doc["edges"] = edges_to_json(f.edges);
  return doc.dump();
}

SolutionForest solution_from_json(const std::string& text) {
  json doc = parse(text);
  SolutionForest f{edges_from_json(doc.value("edges", json::array()))};
  for (auto& [u, v] : f.edges)
    if (u > v) std::swap(u, v);
  std::sort(f.edges.begin(), f.edges.end());
  f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
  return f;
}

std::string packing_instance_to_json(const PackingInstance& p) {
  json doc;
  doc["universe"] = p.universe_size();
  doc["family"] = sets_to_json(p.family());
  return doc.dump();
}

PackingInstance packing_instance_from_json(const std::string& text) {
  json doc = parse(text);
  auto family = sets_from_json(doc.value("family", json::array()), "family");
  return PackingInstance(get_int(doc, "universe"), std::move(family));
}

std::string packing_to_json(const Packing& p) {
  json doc;
  doc["chosen"] = p.chosen;
  return doc.dump();
}

std::string set_cover_to_json(const SetCoverInstance& sc) {
  json doc;
  doc["universe"] = sc.universe_size;
  doc["family"] = sets_to_json(sc.family);
  return doc.dump();
}

SetCoverInstance set_cover_from_json(const std::string& text) {
  json doc = parse(text);
  SetCoverInstance sc;
  sc.universe_size = get_int(doc, "universe");
  sc.family = sets_from_json(doc.value("family", json::array()), "family");
  for (auto& s : sc.family) s = sorted_unique(std::move(s));
  return sc;
}

std::string group_steiner_to_json(const GroupSteinerInstance& inst) {
  json doc;
  doc["nodes"] = inst.graph.node_count();
  doc["edges"] = edges_to_json(inst.graph.edges());
  doc["groups"] = sets_to_json(inst.groups);
  return doc.dump();
}

GroupSteinerInstance group_steiner_from_json(const std::string& text) {
  json doc = parse(text);
  GroupSteinerInstance inst;
  inst.graph = make_graph(get_int(doc, "nodes"), edges_from_json(doc.value("edges", json::array())));
  if (!doc.contains("groups")) throw InputError("json: group instance needs 'groups'");
  inst.groups = sets_from_json(doc["groups"], "groups");
  for (auto& g : inst.groups) g = sorted_unique(std::move(g));
  return inst;
}

}  // namespace densesf
