#pragma once

#include <cstdint>
#include <vector>

#include "densesf/instance.hpp"
#include "densesf/rational.hpp"
#include "densesf/reductions_types.hpp"

namespace densesf {

// Seeded random instance whose measured density is at least delta: each
// terminal samples ceil(delta * |target|) neighbors per foreign set (and in
// S), then edges are added until the exact rational density check passes.
// Identical seeds give identical instances.
SteinerForestInstance gen_dense(int k, const std::vector<int>& sizes, int steiner_count,
                                const Rational& delta, std::uint64_t seed);

// Exactly (1/2)-dense structured family: each set is split into two equal
// halves; every pair of sets is joined by bicliques either within sides
// (halves stay separated) or across sides for the pairs listed in
// cross_pairs (which can create connected pairs and triplets, e.g. the
// 6-cycle for k=3, half_size=1, cross_pairs={{0,2}}).
SteinerForestInstance gen_parallel_bicliques(int k, int half_size,
                                             const std::vector<std::pair<int, int>>& cross_pairs,
                                             std::uint64_t seed);

// Seeded coverable Set Cover instance with m sets over [0, n).
SetCoverInstance gen_set_cover(int n, int m, std::uint64_t seed);

// Seeded random graph respecting a maximum degree.
Graph gen_bounded_degree_graph(int n, int max_degree, std::uint64_t seed);

}  // namespace densesf
