#pragma once

#include <string>

#include "densesf/instance.hpp"
#include "densesf/packing.hpp"
#include "densesf/reductions_types.hpp"

namespace densesf {

// All emitters write normalized, deterministic JSON: sorted edge pairs,
// sorted member lists, fixed key order. Parsers throw InputError on
// malformed documents and warn to stderr about deduplicated edges.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string instance_to_json(const SteinerForestInstance& inst);
SteinerForestInstance instance_from_json(const std::string& text);

std::string solution_to_json(const SolutionForest& f);
SolutionForest solution_from_json(const std::string& text);

std::string packing_instance_to_json(const PackingInstance& p);
PackingInstance packing_instance_from_json(const std::string& text);

std::string packing_to_json(const Packing& p);

std::string set_cover_to_json(const SetCoverInstance& sc);
SetCoverInstance set_cover_from_json(const std::string& text);

std::string group_steiner_to_json(const GroupSteinerInstance& inst);
GroupSteinerInstance group_steiner_from_json(const std::string& text);

}  // namespace densesf
