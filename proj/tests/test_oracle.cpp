#include <doctest.h>

#include <cstdlib>
#include <random>

#include "densesf/errors.hpp"
#include "densesf/oracle.hpp"
#include "densesf/reductions_types.hpp"
#include "helpers.hpp"

using namespace densesf;

TEST_CASE("steiner forest oracle examples") {
  auto pair = oracle_steiner_forest(testutil::bipartite_pair());
  REQUIRE(pair);
  CHECK(pair->edges.size() == 3);

  CHECK(!oracle_steiner_forest(gen_parallel_bicliques(3, 1, {}, 0)));

  // two trivial sets cross-connected: two 1-edge trees beat one tree
  SteinerForestInstance two(
      Graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), {{0, 1}, {2, 3}});
  auto f = oracle_steiner_forest(two);
  REQUIRE(f);
  CHECK(f->edges.size() == 2);
}

TEST_CASE("oracle output is always feasible") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    auto inst = gen_dense(k, std::vector<int>(k, 2), static_cast<int>(rng() % 3),
                          Rational(1, 2), rng());
    auto f = oracle_steiner_forest(inst);
    if (!f) {
      // infeasible iff some terminal set straddles graph components
      auto parts = connected_components(inst.graph());
      std::vector<int> part_of(inst.graph().node_count());
      for (std::size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) part_of[v] = static_cast<int>(p);
      bool straddles = false;
      for (const auto& t : inst.terminal_sets())
        for (int v : t) straddles |= (part_of[v] != part_of[t[0]]);
      CHECK(straddles);
      continue;
    }
    CHECK(verify_solution(inst, *f).ok());
  }
}

TEST_CASE("oracle value invariant under relabeling") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = gen_dense(3, {2, 2, 2}, 1, Rational(1, 2), rng());
    auto perm = testutil::random_permutation(inst.graph().node_count(), rng);
    auto a = oracle_steiner_forest(inst);
    auto b = oracle_steiner_forest(testutil::relabel(inst, perm));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->edges.size() == b->edges.size());
  }
}

TEST_CASE("oracle caps") {
  std::vector<NodeSet> sets;
  for (int i = 0; i < 9; ++i) sets.push_back({i});
  SteinerForestInstance big(Graph(9, {}), sets);
  OracleCaps caps;
  CHECK_THROWS_AS(oracle_steiner_forest(big, caps), SizeError);
}

TEST_CASE("oracle caps from environment") {
  setenv("DENSESF_ORACLE_CAPS", "4,5,12", 1);
  auto caps = oracle_caps_from_env();
  CHECK(caps.max_sets == 4);
  CHECK(caps.max_steiner == 5);
  CHECK(caps.max_nodes == 12);
  unsetenv("DENSESF_ORACLE_CAPS");
  auto defaults = oracle_caps_from_env();
  CHECK(defaults.max_sets == 8);
}

TEST_CASE("group steiner oracle examples") {
  GroupSteinerInstance lone;
  lone.graph = Graph(1, {});
  lone.groups = {{0}};
  auto t = oracle_group_steiner(lone);
  REQUIRE(t);
  CHECK(t->edges.empty());

  GroupSteinerInstance split;
  split.graph = Graph(2, {});
  split.groups = {{0}, {1}};
  CHECK(!oracle_group_steiner(split));

  // path 0-1-2 with singleton end groups: the whole path
  GroupSteinerInstance path;
  path.graph = Graph(3, {{0, 1}, {1, 2}});
  path.groups = {{0}, {2}};
  auto pt = oracle_group_steiner(path);
  REQUIRE(pt);
  CHECK(pt->edges.size() == 2);

  // a group with two members: reaching the closer one wins
  GroupSteinerInstance choice;
  choice.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}});
  choice.groups = {{0}, {1, 3}};
  auto ct = oracle_group_steiner(choice);
  REQUIRE(ct);
  CHECK(ct->edges.size() == 1);
}

TEST_CASE("group steiner tree touches every group and is a tree") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    auto g = gen_bounded_degree_graph(n, 3, rng());
    int group_count = 2 + static_cast<int>(rng() % 3);
    std::vector<NodeSet> groups(group_count);
    for (int v = 0; v < n; ++v) groups[v % group_count].push_back(v);
    GroupSteinerInstance inst{g, groups};
    auto t = oracle_group_steiner(inst);
    if (!t) continue;
    CHECK(is_forest(n, t->edges));
    CHECK(t->nodes.size() == t->edges.size() + 1);
    for (const auto& grp : groups) {
      bool touched = false;
      for (int v : grp) touched |= set_contains(t->nodes, v);
      CHECK(touched);
    }
  }
}

TEST_CASE("set cover oracle") {
  CHECK(oracle_set_cover({1, {{0}}}) == 1);
  CHECK(oracle_set_cover({2, {{0, 1}, {1}}}) == 1);
  CHECK(oracle_set_cover({3, {{0}, {1}}}) == std::nullopt);
  CHECK(oracle_set_cover({4, {{0, 1}, {2, 3}, {0, 2}}}) == 2);
}

TEST_CASE("vertex cover oracle") {
  Graph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(oracle_vertex_cover(triangle) == 2);
  CHECK(oracle_vertex_cover(Graph(2, {{0, 1}})) == 1);
  CHECK(oracle_vertex_cover(Graph(3, {})) == 0);
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(oracle_vertex_cover(star) == 1);
}

TEST_CASE("no-Steiner oracle value follows the duality") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = gen_dense(3, {2, 2, 2}, 0, Rational(1, 2), rng());
    auto f = oracle_steiner_forest(inst);
    REQUIRE(f);
    int n = inst.graph().node_count();
    CHECK(static_cast<int>(f->edges.size()) == n - component_count(inst, *f));
  }
}
