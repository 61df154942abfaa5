#include <doctest.h>

#include <random>

#include "densesf/errors.hpp"
#include "densesf/greedy.hpp"
#include "densesf/oracle.hpp"
#include "densesf/structure.hpp"
#include "helpers.hpp"

using namespace densesf;

TEST_CASE("greedy on the bipartite pair gives one 3-edge tree") {
  auto f = solve_greedy(testutil::bipartite_pair());
  REQUIRE(f);
  CHECK(f->edges.size() == 3);
  auto oracle = oracle_steiner_forest(testutil::bipartite_pair());
  REQUIRE(oracle);
  CHECK(oracle->edges.size() == 3);
}

TEST_CASE("greedy keeps trivial sets as separate trees") {
  // both sets trivial, full cross edges: two 1-edge trees are optimal
  SteinerForestInstance inst(
      Graph(4, {{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}), {{0, 1}, {2, 3}});
  auto f = solve_greedy(inst);
  REQUIRE(f);
  CHECK(f->edges == EdgeList{{0, 1}, {2, 3}});
  auto oracle = oracle_steiner_forest(inst);
  REQUIRE(oracle);
  CHECK(oracle->edges.size() == 2);
}

TEST_CASE("greedy no-solution case: k=1, S empty, T_1 disconnected") {
  SteinerForestInstance inst(Graph(2, {}), {{0, 1}});
  CHECK(!solve_greedy(inst));
}

TEST_CASE("greedy k=1 connected returns a spanning tree of T_1") {
  SteinerForestInstance inst(Graph(3, {{0, 1}, {1, 2}}), {{0, 1, 2}});
  auto f = solve_greedy(inst);
  REQUIRE(f);
  CHECK(f->edges.size() == 2);
}

TEST_CASE("greedy precondition errors") {
  CHECK_THROWS_AS(solve_greedy(testutil::six_cycle()), PreconditionError);  // delta = 1/2
  SteinerForestInstance steiner(Graph(3, {{0, 2}, {1, 2}}), {{0, 1}});
  CHECK_THROWS_AS(solve_greedy(steiner), PreconditionError);  // Steiner node
}

TEST_CASE("greedy matches the oracle on random dense instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 1 + static_cast<int>(rng() % 5);
    std::vector<int> sizes;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      int s = 1 + static_cast<int>(rng() % 3);
      sizes.push_back(s);
      total += s;
    }
    if (total > 14) {
      --trial;
      continue;
    }
    Rational delta(static_cast<int>(rng() % 5) + 6, 10);
    auto inst = gen_dense(k, sizes, 0, delta, rng());
    auto f = solve_greedy(inst);
    auto oracle = oracle_steiner_forest(inst);
    if (!f) {
      // only the k=1 disconnected case; the oracle must agree
      CHECK(k == 1);
      CHECK(!oracle);
      continue;
    }
    CHECK(verify_solution(inst, *f).ok());
    REQUIRE(oracle);
    CHECK(f->edges.size() == oracle->edges.size());
  }
}

TEST_CASE("greedy rank structure") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    int k = 2 + static_cast<int>(rng() % 4);
    std::vector<int> sizes(k, 2);
    auto inst = gen_dense(k, sizes, 0, Rational(3, 5), rng());
    auto f = solve_greedy(inst);
    REQUIRE(f);
    auto h = rank_histogram(inst, *f);
    int rank3 = 0;
    for (auto [rank, count] : h.counts) {
      CHECK(rank >= 1);
      CHECK(rank <= 3);
      if (rank == 3) rank3 = count;
    }
    CHECK(rank3 <= 1);
  }
}

TEST_CASE("greedy is deterministic") {
  auto inst = gen_dense(4, {2, 2, 2, 2}, 0, Rational(3, 5), 12345);
  auto a = solve_greedy(inst);
  auto b = solve_greedy(inst);
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->edges == b->edges);
}
