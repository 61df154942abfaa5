#pragma once

#include <optional>
#include <string>
#include <vector>

#include "densesf/graph.hpp"
#include "densesf/rational.hpp"

namespace densesf {

// A Steiner Forest instance: a graph plus pairwise-disjoint non-empty
// terminal sets. Nodes in no terminal set are Steiner nodes (derived).
class SteinerForestInstance {
 public:
  SteinerForestInstance() = default;
  // Validates disjointness, non-emptiness, id ranges. Sets are kept in the
  // given order; members are sorted.
  SteinerForestInstance(Graph graph, std::vector<NodeSet> terminal_sets);

  const Graph& graph() const { return graph_; }
  const std::vector<NodeSet>& terminal_sets() const { return terminal_sets_; }
  int set_count() const { return static_cast<int>(terminal_sets_.size()); }
  const NodeSet& steiner_nodes() const { return steiner_; }
  // set_of_node()[v] = terminal set index, or -1 for Steiner nodes.
  const std::vector<int>& set_of_node() const { return set_of_node_; }
  NodeSet all_terminals() const;

 private:
  Graph graph_;
  std::vector<NodeSet> terminal_sets_;
  NodeSet steiner_;
  std::vector<int> set_of_node_;
};

// A candidate solution: a set of graph edges forming a forest. Feasibility
// against an instance is checked by verify_solution, not the type.
struct SolutionForest {
  EdgeList edges;  // normalized u < v, sorted
};

struct DensityWitness {
  int terminal = -1;
  // Target attaining the minimum: a terminal set index, or nullopt for the
  // Steiner set S.
  std::optional<int> target_set;
};

struct DensityReport {
  // Largest delta for which the instance is pairwise delta-dense; nullopt
  // ("undefined") when no cross-set or Steiner constraint exists (k = 1 and
  // S empty).
  std::optional<Rational> delta;
  std::optional<DensityWitness> witness;
};

DensityReport measure_density(const SteinerForestInstance& inst);
bool is_pairwise_dense(const SteinerForestInstance& inst, const Rational& delta);

// Indices (0-based) of terminal sets inducing a connected subgraph.
std::vector<int> trivial_sets(const SteinerForestInstance& inst);

struct Violation {
  enum class Kind { NotForest, UnknownEdge, SetDisconnected };
  Kind kind;
  int set_index = -1;  // SetDisconnected only
  int u = -1, v = -1;  // offending edge or separated node pair
  std::string message;
};

struct VerifyResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

VerifyResult verify_solution(const SteinerForestInstance& inst, const SolutionForest& f);

// Edge count of f. Throws InputError if f is cyclic.
int solution_value(const SteinerForestInstance& inst, const SolutionForest& f);
// Number of trees of f, counting every node untouched by f as a singleton
// tree, so solution_value + component_count == node_count always.
int component_count(const SteinerForestInstance& inst, const SolutionForest& f);

// True iff `edges` is acyclic over a graph on node_count nodes.
bool is_forest(int node_count, const EdgeList& edges);

}  // namespace densesf
