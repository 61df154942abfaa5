#include <doctest.h>

#include <random>

#include "densesf/dense_tree.hpp"
#include "densesf/errors.hpp"
#include "densesf/greedy.hpp"
#include "densesf/oracle.hpp"
#include "helpers.hpp"

using namespace densesf;

TEST_CASE("contraction_threshold") {
  CHECK(contraction_threshold(0.0) == kExactFinishBudget);
  CHECK(contraction_threshold(-1.0) == kExactFinishBudget);
  CHECK(contraction_threshold(0.5) == 3);
  CHECK(contraction_threshold(0.25) == 4);
  CHECK(contraction_threshold(0.1) == 10);
  CHECK(contraction_threshold(0.01) == kExactFinishBudget);
}

TEST_CASE("single tree through a star center") {
  SteinerForestInstance inst(Graph(4, {{0, 3}, {1, 3}, {2, 3}}), {{0, 1, 2}});
  auto f = solve_single_tree(inst, 0.0);
  REQUIRE(f);
  CHECK(f->edges == EdgeList{{0, 3}, {1, 3}, {2, 3}});
}

TEST_CASE("single tree skips unneeded Steiner nodes") {
  // terminals form a triangle; Steiner node 3 dangles off it
  SteinerForestInstance inst(Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), {{0, 1, 2}});
  auto f = solve_single_tree(inst, 0.0);
  REQUIRE(f);
  CHECK(f->edges.size() == 2);
  for (auto [u, v] : f->edges) {
    CHECK(u < 3);
    CHECK(v < 3);
  }
}

TEST_CASE("single tree uses the only bridge Steiner node") {
  SteinerForestInstance inst(Graph(5, {{0, 1}, {2, 3}, {1, 4}, {2, 4}}),
                             {{0, 1}, {2, 3}});
  auto f = solve_single_tree(inst, 0.0);
  REQUIRE(f);
  CHECK(f->edges.size() == 4);
  bool uses_bridge = false;
  for (auto [u, v] : f->edges) uses_bridge |= (u == 4 || v == 4);
  CHECK(uses_bridge);
}

TEST_CASE("single tree reports unreachable terminals") {
  SteinerForestInstance inst(Graph(4, {{0, 1}}), {{0, 1}, {2, 3}});
  CHECK(!solve_single_tree(inst, 0.0));
}

TEST_CASE("restrict_to_terminals") {
  SteinerForestInstance inst(Graph(5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}),
                             {{0, 1}, {2, 3}});
  auto r = restrict_to_terminals(inst);
  CHECK(r.instance.graph().node_count() == 4);
  CHECK(r.instance.steiner_nodes().empty());
  CHECK(r.node_map == std::vector<int>{0, 1, 2, 3});
  CHECK(r.instance.graph().edges() == EdgeList{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("restriction preserves pairwise density") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = gen_dense(3, {2, 2, 2}, 1 + static_cast<int>(rng() % 3),
                          Rational(3, 5), rng());
    auto r = restrict_to_terminals(inst);
    auto before = measure_density(inst);
    auto after = measure_density(r.instance);
    REQUIRE(before.delta);
    REQUIRE(after.delta);
    CHECK(*after.delta >= *before.delta);
  }
}

TEST_CASE("theorem1 without Steiner nodes matches greedy") {
  auto inst = gen_dense(3, {2, 2, 2}, 0, Rational(3, 5), 9);
  auto combined = solve_theorem1(inst, 0.0);
  auto greedy = solve_greedy(inst);
  REQUIRE(combined);
  REQUIRE(greedy);
  CHECK(combined->edges == greedy->edges);
}

TEST_CASE("theorem1 prefers the Steiner hub when terminals are mutually non-adjacent") {
  // 6 mutually non-adjacent terminals, all adjacent to hub 6: the
  // terminal-only branch is infeasible, the hub star is the optimum
  EdgeList edges;
  for (int v = 0; v < 6; ++v) edges.push_back({v, 6});
  SteinerForestInstance inst(Graph(7, edges), {{0, 1, 2, 3, 4, 5}});
  auto f = solve_theorem1(inst, 0.0);
  REQUIRE(f);
  auto oracle = oracle_steiner_forest(inst);
  REQUIRE(oracle);
  CHECK(f->edges.size() == oracle->edges.size());
  CHECK(f->edges.size() == 6);
}

TEST_CASE("theorem1 connects a split set through Steiner nodes") {
  // k=1, T_1 = {0,1} non-adjacent, joined through Steiner node 2
  SteinerForestInstance inst(Graph(3, {{0, 2}, {1, 2}}), {{0, 1}});
  auto f = solve_theorem1(inst, 0.0);
  REQUIRE(f);
  CHECK(f->edges == EdgeList{{0, 2}, {1, 2}});
}

TEST_CASE("theorem1 matches the oracle on random instances") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) sizes.push_back(1 + static_cast<int>(rng() % 3));
    int steiner = 1 + static_cast<int>(rng() % 3);
    auto inst = gen_dense(k, sizes, steiner, Rational(3, 5), rng());
    auto f = solve_theorem1(inst, 0.0);
    auto oracle = oracle_steiner_forest(inst);
    REQUIRE(f);
    REQUIRE(oracle);
    CHECK(verify_solution(inst, *f).ok());
    CHECK(f->edges.size() == oracle->edges.size());
  }
}

TEST_CASE("finite epsilon never beats the exact finish") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    auto inst = gen_dense(2, {2, 3}, 3, Rational(3, 5), rng());
    auto exact = solve_theorem1(inst, 0.0);
    auto coarse = solve_theorem1(inst, 0.34);
    REQUIRE(exact);
    REQUIRE(coarse);
    CHECK(verify_solution(inst, *coarse).ok());
    CHECK(coarse->edges.size() >= exact->edges.size());
  }
}
