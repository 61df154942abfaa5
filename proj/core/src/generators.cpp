#include "densesf/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "densesf/errors.hpp"

namespace densesf {

namespace {

// mt19937_64 is seeded directly; all draws go through explicit
// distributions implemented by hand so the byte stream is stable across
// standard libraries.
int draw_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

std::vector<int> draw_sample(std::mt19937_64& rng, const std::vector<int>& pool, int count) {
  std::vector<int> deck = pool;
  for (int i = 0; i < count; ++i) {
    int j = i + draw_below(rng, static_cast<int>(deck.size()) - i);
    std::swap(deck[i], deck[j]);
  }
  deck.resize(count);
  return deck;
}

std::int64_t ceil_mul(const Rational& delta, std::int64_t m) {
  return (delta.num * m + delta.den - 1) / delta.den;
}

}  // namespace

SteinerForestInstance gen_dense(int k, const std::vector<int>& sizes, int steiner_count,
                                const Rational& delta, std::uint64_t seed) {
  if (k < 1 || static_cast<int>(sizes.size()) != k)
    throw InputError("gen_dense: need one size per terminal set");
  for (int s : sizes)
    if (s < 1) throw InputError("gen_dense: terminal set sizes must be >= 1");
  if (steiner_count < 0) throw InputError("gen_dense: negative steiner_count");
  if (delta <= Rational(0, 1) || delta > Rational(1, 1))
    throw InputError("gen_dense: delta must be in (0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<NodeSet> sets;
  int next = 0;
  for (int i = 0; i < k; ++i) {
    NodeSet s;
    for (int j = 0; j < sizes[i]; ++j) s.push_back(next++);
    sets.push_back(std::move(s));
  }
  NodeSet steiner;
  for (int j = 0; j < steiner_count; ++j) steiner.push_back(next++);
  int n = next;

  EdgeList edges;
  auto connect_to = [&](int t, const NodeSet& target) {
    int need = static_cast<int>(ceil_mul(delta, static_cast<std::int64_t>(target.size())));
    for (int w : draw_sample(rng, target, need))
      edges.emplace_back(std::min(t, w), std::max(t, w));
  };
  for (int i = 0; i < k; ++i)
    for (int t : sets[i]) {
      for (int j = 0; j < k; ++j)
        if (j != i) connect_to(t, sets[j]);
      if (!steiner.empty()) connect_to(t, steiner);
    }

  // Sprinkle optional intra-set and Steiner-Steiner edges for variety;
  // adding edges never lowers density.
  for (int i = 0; i < k; ++i)
    for (size_t a = 0; a < sets[i].size(); ++a)
      for (size_t b = a + 1; b < sets[i].size(); ++b)
        if (draw_below(rng, 4) == 0) edges.emplace_back(sets[i][a], sets[i][b]);
  for (size_t a = 0; a < steiner.size(); ++a)
    for (size_t b = a + 1; b < steiner.size(); ++b)
      if (draw_below(rng, 3) == 0) edges.emplace_back(steiner[a], steiner[b]);

  SteinerForestInstance inst(Graph(n, edges), sets);
  // Repair: the sampling already meets the per-terminal quota, but the exact
  // rational check is the contract, so patch any witness it reports.
  while (true) {
    auto report = measure_density(inst);
    if (!report.delta || *report.delta >= delta) break;
    const auto& w = *report.witness;
    const NodeSet& target = w.target_set ? sets[*w.target_set] : steiner;
    bool added = false;
    for (int cand : target)
      if (!inst.graph().has_edge(w.terminal, cand)) {
        edges.emplace_back(std::min(w.terminal, cand), std::max(w.terminal, cand));
        added = true;
        break;
      }
    if (!added) throw InvariantError("gen_dense: witness target already saturated");
    inst = SteinerForestInstance(Graph(n, edges), sets);
  }
  return inst;
}

SteinerForestInstance gen_parallel_bicliques(
    int k, int half_size, const std::vector<std::pair<int, int>>& cross_pairs,
    std::uint64_t seed) {
  (void)seed;  // construction is fully structural
  if (k < 2) throw InputError("gen_parallel_bicliques: need k >= 2");
  if (half_size < 1) throw InputError("gen_parallel_bicliques: half_size must be >= 1");

  std::vector<char> crossed(k * k, 0);
  for (auto [a, b] : cross_pairs) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b)
      throw InputError("gen_parallel_bicliques: bad cross pair");
    crossed[a * k + b] = crossed[b * k + a] = 1;
  }

  // Set i occupies [i*2h, (i+1)*2h): first h nodes side A, last h side B.
  int h = half_size;
  auto a_node = [&](int set, int idx) { return set * 2 * h + idx; };
  auto b_node = [&](int set, int idx) { return set * 2 * h + h + idx; };

  EdgeList edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int x = 0; x < h; ++x)
        for (int y = 0; y < h; ++y) {
          if (crossed[i * k + j]) {
            edges.emplace_back(a_node(i, x), b_node(j, y));
            edges.emplace_back(b_node(i, x), a_node(j, y));
          } else {
            edges.emplace_back(a_node(i, x), a_node(j, y));
            edges.emplace_back(b_node(i, x), b_node(j, y));
          }
        }

  std::vector<NodeSet> sets;
  for (int i = 0; i < k; ++i) {
    NodeSet s;
    for (int idx = 0; idx < 2 * h; ++idx) s.push_back(i * 2 * h + idx);
    sets.push_back(std::move(s));
  }
  return SteinerForestInstance(Graph(k * 2 * h, std::move(edges)), std::move(sets));
}

SetCoverInstance gen_set_cover(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw InputError("gen_set_cover: parameters must be positive");
  std::mt19937_64 rng(seed);
  SetCoverInstance sc;
  sc.universe_size = n;
  for (int j = 0; j < m; ++j) {
    std::vector<int> members;
    for (int u = 0; u < n; ++u)
      if (draw_below(rng, 2) == 0) members.push_back(u);
    if (members.empty()) members.push_back(draw_below(rng, n));
    sc.family.push_back(std::move(members));
  }
  // Guarantee coverage: route uncovered elements into a seeded set.
  std::vector<char> covered(n, 0);
  for (const auto& set : sc.family)
    for (int u : set) covered[u] = 1;
  for (int u = 0; u < n; ++u)
    if (!covered[u]) {
      auto& set = sc.family[draw_below(rng, m)];
      set.push_back(u);
      std::sort(set.begin(), set.end());
    }
  return sc;
}

Graph gen_bounded_degree_graph(int n, int max_degree, std::uint64_t seed) {
  if (n < 1 || max_degree < 0)
    throw InputError("gen_bounded_degree_graph: parameters must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> candidates;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  for (size_t i = 0; i + 1 < candidates.size(); ++i) {
    size_t j = i + rng() % (candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
  }
  std::vector<int> degree(n, 0);
  EdgeList edges;
  for (const auto& [u, v] : candidates)
    if (degree[u] < max_degree && degree[v] < max_degree && draw_below(rng, 2) == 0) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  return Graph(n, std::move(edges));
}

}  // namespace densesf
