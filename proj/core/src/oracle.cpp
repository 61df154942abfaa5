#include "densesf/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>

#include "densesf/errors.hpp"

namespace densesf {

namespace {

constexpr int kNegInf = std::numeric_limits<int>::min() / 4;
constexpr int kInf = std::numeric_limits<int>::max() / 4;

bool induced_connected(const Graph& g, const NodeSet& nodes) {
  if (nodes.empty()) return true;
  std::vector<char> inside(g.node_count(), 0);
  for (int v : nodes) inside[v] = 1;
  std::vector<char> seen(g.node_count(), 0);
  std::queue<int> q;
  q.push(nodes[0]);
  seen[nodes[0]] = 1;
  size_t reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (inside[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
  }
  return reached == nodes.size();
}

}  // namespace

OracleCaps oracle_caps_from_env(OracleCaps defaults) {
  const char* raw = std::getenv("DENSESF_ORACLE_CAPS");
  if (!raw) return defaults;
  int a, b, c;
  if (std::sscanf(raw, "%d,%d,%d", &a, &b, &c) != 3)
    throw InputError("DENSESF_ORACLE_CAPS: expected 'max_sets,max_steiner,max_nodes'");
  return OracleCaps{a, b, c};
}

std::optional<SolutionForest> oracle_steiner_forest(const SteinerForestInstance& inst,
                                                    const OracleCaps& caps) {
  int k = inst.set_count();
  int s_count = static_cast<int>(inst.steiner_nodes().size());
  int n = inst.graph().node_count();
  if (k > caps.max_sets || s_count > caps.max_steiner || n > caps.max_nodes)
    throw SizeError("oracle_steiner_forest: instance (k=" + std::to_string(k) +
                    ", |S|=" + std::to_string(s_count) + ", n=" + std::to_string(n) +
                    ") exceeds caps (" + std::to_string(caps.max_sets) + "," +
                    std::to_string(caps.max_steiner) + "," + std::to_string(caps.max_nodes) +
                    ")");

  const auto& sets = inst.terminal_sets();
  const NodeSet& steiner = inst.steiner_nodes();

  // For every subset of terminal sets, the minimal Steiner-node subsets
  // whose addition makes the induced union connected, in (size, mask) order.
  int full_t = (1 << k) - 1;
  std::vector<std::vector<std::pair<int, int>>> minaug(full_t + 1);  // (smask, size)
  {
    std::vector<int> by_size(1 << s_count);
    int idx = 0;
    for (int size = 0; size <= s_count; ++size)
      for (int m = 0; m < (1 << s_count); ++m)
        if (__builtin_popcount(m) == size) by_size[idx++] = m;

    for (int tmask = 1; tmask <= full_t; ++tmask) {
      NodeSet base;
      for (int i = 0; i < k; ++i)
        if (tmask & (1 << i)) base = set_union(base, sets[i]);
      for (int smask : by_size) {
        bool dominated = false;
        for (const auto& [prev, sz] : minaug[tmask])
          if ((prev & smask) == prev) {
            dominated = true;
            break;
          }
        if (dominated) continue;
        NodeSet nodes = base;
        for (int j = 0; j < s_count; ++j)
          if (smask & (1 << j)) nodes.push_back(steiner[j]);
        nodes = sorted_unique(std::move(nodes));
        if (induced_connected(inst.graph(), nodes))
          minaug[tmask].push_back({smask, __builtin_popcount(smask)});
      }
    }
  }

  // Maximize (#blocks - #Steiner nodes used) over block decompositions.
  std::unordered_map<std::uint64_t, int> memo;
  auto key = [s_count](int tmask, int smask) {
    return (static_cast<std::uint64_t>(tmask) << (s_count + 1)) | smask;
  };
  auto best = [&](auto&& self, int tmask, int smask) -> int {
    if (tmask == 0) return 0;
    auto it = memo.find(key(tmask, smask));
    if (it != memo.end()) return it->second;
    int low_bit = tmask & (-tmask);
    int value = kNegInf;
    for (int sub = tmask; sub > 0; sub = (sub - 1) & tmask) {
      if (!(sub & low_bit)) continue;
      for (const auto& [aug, aug_size] : minaug[sub]) {
        if ((aug & smask) != aug) continue;
        int rest = self(self, tmask ^ sub, smask & ~aug);
        if (rest > kNegInf) value = std::max(value, 1 - aug_size + rest);
      }
    }
    memo[key(tmask, smask)] = value;
    return value;
  };

  int full_s = (1 << s_count) - 1;
  int opt = best(best, full_t, full_s);
  if (opt <= kNegInf) return std::nullopt;

  // Re-derive the first choice sequence achieving the optimum.
  SolutionForest forest;
  int tmask = full_t, smask = full_s, remaining = opt;
  while (tmask != 0) {
    int low_bit = tmask & (-tmask);
    bool advanced = false;
    for (int sub = tmask; sub > 0 && !advanced; sub = (sub - 1) & tmask) {
      if (!(sub & low_bit)) continue;
      for (const auto& [aug, aug_size] : minaug[sub]) {
        if ((aug & smask) != aug) continue;
        int rest = best(best, tmask ^ sub, smask & ~aug);
        if (rest > kNegInf && 1 - aug_size + rest == remaining) {
          NodeSet block;
          for (int i = 0; i < k; ++i)
            if (sub & (1 << i)) block = set_union(block, sets[i]);
          for (int j = 0; j < s_count; ++j)
            if (aug & (1 << j)) block.push_back(steiner[j]);
          block = sorted_unique(std::move(block));
          auto edges = spanning_tree(inst.graph(), block);
          forest.edges.insert(forest.edges.end(), edges.begin(), edges.end());
          tmask ^= sub;
          smask &= ~aug;
          remaining = rest;
          advanced = true;
          break;
        }
      }
    }
    if (!advanced) throw InvariantError("oracle_steiner_forest: reconstruction failed");
  }
  std::sort(forest.edges.begin(), forest.edges.end());
  return forest;
}

std::optional<OracleTree> oracle_group_steiner(const GroupSteinerInstance& inst,
                                               int max_groups, int max_nodes) {
  const Graph& g = inst.graph;
  int n = g.node_count();
  int groups = static_cast<int>(inst.groups.size());
  if (groups > max_groups || n > max_nodes)
    throw SizeError("oracle_group_steiner: " + std::to_string(groups) + " groups / " +
                    std::to_string(n) + " nodes exceed caps");
  for (const auto& grp : inst.groups) {
    if (grp.empty()) throw InputError("oracle_group_steiner: empty group");
    for (int v : grp)
      if (v < 0 || v >= n) throw InputError("oracle_group_steiner: group member out of range");
  }

  std::vector<int> gmask(n, 0);
  for (int gi = 0; gi < groups; ++gi)
    for (int v : inst.groups[gi]) gmask[v] |= 1 << gi;

  std::vector<std::vector<int>> dist(n), parent(n);
  for (int src = 0; src < n; ++src) {
    dist[src].assign(n, kInf);
    parent[src].assign(n, -1);
    std::queue<int> q;
    dist[src][src] = 0;
    q.push(src);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (dist[src][w] == kInf) {
          dist[src][w] = dist[src][v] + 1;
          parent[src][w] = v;
          q.push(w);
        }
    }
  }

  int full = (1 << groups) - 1;
  std::vector<std::vector<int>> dp(full + 1, std::vector<int>(n, kInf));
  std::vector<std::vector<int>> dpm(full + 1, std::vector<int>(n, kInf));
  for (int mask = 0; mask <= full; ++mask)
    for (int v = 0; v < n; ++v)
      if ((mask & ~gmask[v]) == 0) dp[mask][v] = 0;

  for (int mask = 1; mask <= full; ++mask) {
    int low = mask & (-mask);
    for (int v = 0; v < n; ++v) {
      int best = kInf;
      for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        if (dp[sub][v] < kInf && dp[mask ^ sub][v] < kInf)
          best = std::min(best, dp[sub][v] + dp[mask ^ sub][v]);
      }
      dpm[mask][v] = best;
    }
    // Path sources are merge-layer values or base cases (a vertex covering
    // all of mask by membership).
    for (int v = 0; v < n; ++v) {
      int best = dp[mask][v];
      for (int u = 0; u < n; ++u) {
        int src = dpm[mask][u];
        if ((mask & ~gmask[u]) == 0) src = 0;
        if (src < kInf && dist[u][v] < kInf) best = std::min(best, src + dist[u][v]);
      }
      dp[mask][v] = best;
    }
  }

  int best_v = -1, best = kInf;
  for (int v = 0; v < n; ++v)
    if (dp[full][v] < best) {
      best = dp[full][v];
      best_v = v;
    }
  if (best_v == -1) return std::nullopt;

  // Collect the nodes touched by one optimal tree (deterministic scan
  // order), then span them.
  std::vector<char> touched(n, 0);
  std::vector<std::pair<int, int>> stack{{full, best_v}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    touched[v] = 1;
    if ((mask & ~gmask[v]) == 0 && dp[mask][v] == 0) continue;
    int u_hit = -1;
    bool u_is_base = false;
    for (int u = 0; u < n && u_hit == -1; ++u) {
      if (dist[u][v] >= kInf) continue;
      if ((mask & ~gmask[u]) == 0 && dist[u][v] == dp[mask][v]) {
        u_hit = u;
        u_is_base = true;
      } else if (dpm[mask][u] < kInf && dpm[mask][u] + dist[u][v] == dp[mask][v]) {
        u_hit = u;
      }
    }
    if (u_hit == -1) throw InvariantError("oracle_group_steiner: reconstruction failed");
    for (int x = v; x != -1 && x != u_hit; x = parent[u_hit][x]) touched[x] = 1;
    touched[u_hit] = 1;
    if (u_is_base) continue;
    int low = mask & (-mask);
    bool split = false;
    for (int sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      if (dp[sub][u_hit] < kInf && dp[mask ^ sub][u_hit] < kInf &&
          dp[sub][u_hit] + dp[mask ^ sub][u_hit] == dpm[mask][u_hit]) {
        stack.push_back({sub, u_hit});
        stack.push_back({mask ^ sub, u_hit});
        split = true;
        break;
      }
    }
    if (!split) throw InvariantError("oracle_group_steiner: no merge split found");
  }

  OracleTree tree;
  for (int v = 0; v < n; ++v)
    if (touched[v]) tree.nodes.push_back(v);
  tree.edges = spanning_tree(g, tree.nodes);
  if (static_cast<int>(tree.edges.size()) != best)
    throw InvariantError("oracle_group_steiner: reconstructed tree has " +
                         std::to_string(tree.edges.size()) + " edges, expected " +
                         std::to_string(best));
  return tree;
}

std::optional<int> oracle_set_cover(const SetCoverInstance& sc, int max_universe,
                                    int max_family) {
  int m = static_cast<int>(sc.family.size());
  if (sc.universe_size > max_universe || m > max_family)
    throw SizeError("oracle_set_cover: instance exceeds caps");
  int full = (1 << sc.universe_size) - 1;
  std::vector<int> masks(m, 0);
  for (int i = 0; i < m; ++i)
    for (int e : sc.family[i]) {
      if (e < 0 || e >= sc.universe_size)
        throw InputError("oracle_set_cover: element out of range");
      masks[i] |= 1 << e;
    }

  int best = kInf;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
    int count = __builtin_popcount(pick);
    if (count >= best) continue;
    int covered = 0;
    for (int i = 0; i < m; ++i)
      if (pick & (std::uint32_t{1} << i)) covered |= masks[i];
    if (covered == full) best = count;
  }
  if (best == kInf) return std::nullopt;
  return best;
}

int oracle_vertex_cover(const Graph& g, int max_nodes) {
  int n = g.node_count();
  if (n > max_nodes) throw SizeError("oracle_vertex_cover: instance exceeds caps");
  int best = n;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << n); ++pick) {
    int count = __builtin_popcount(pick);
    if (count >= best) continue;
    bool covers = true;
    for (const auto& [u, v] : g.edges())
      if (!(pick & (std::uint32_t{1} << u)) && !(pick & (std::uint32_t{1} << v))) {
        covers = false;
        break;
      }
    if (covers) best = count;
  }
  return best;
}

}  // namespace densesf
