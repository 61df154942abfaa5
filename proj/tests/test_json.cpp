#include <doctest.h>

#include <random>

#include "densesf/errors.hpp"
#include "densesf/generators.hpp"
#include "densesf/json_io.hpp"

using namespace densesf;

TEST_CASE("graph round trip") {
  Graph g(4, {{2, 0}, {1, 3}});
  auto text = graph_to_json(g);
  CHECK(text == R"({"nodes":4,"edges":[[0,2],[1,3]]})");
  auto back = graph_from_json(text);
  CHECK(back.node_count() == 4);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("instance round trip") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = gen_dense(3, {2, 1, 3}, 2, Rational(1, 2), rng());
    auto back = instance_from_json(instance_to_json(inst));
    CHECK(back.graph().edges() == inst.graph().edges());
    CHECK(back.terminal_sets() == inst.terminal_sets());
    CHECK(instance_to_json(back) == instance_to_json(inst));
  }
}

TEST_CASE("solution round trip normalizes") {
  auto sol = solution_from_json(R"({"edges":[[3,1],[0,2],[1,3]]})");
  CHECK(sol.edges == EdgeList{{0, 2}, {1, 3}});
  CHECK(solution_to_json(sol) == R"({"edges":[[0,2],[1,3]]})");
}

TEST_CASE("packing round trip") {
  PackingInstance p(4, {{2, 0}, {1, 2, 3}});
  auto text = packing_instance_to_json(p);
  auto back = packing_instance_from_json(text);
  CHECK(back.universe_size() == 4);
  CHECK(back.family() == p.family());
}

TEST_CASE("set cover and group steiner round trips") {
  SetCoverInstance sc{3, {{0, 2}, {1}}};
  auto back = set_cover_from_json(set_cover_to_json(sc));
  CHECK(back.universe_size == 3);
  CHECK(back.family == sc.family);

  GroupSteinerInstance gs;
  gs.graph = Graph(3, {{0, 1}, {1, 2}});
  gs.groups = {{0}, {1, 2}};
  auto gs2 = group_steiner_from_json(group_steiner_to_json(gs));
  CHECK(gs2.graph.edges() == gs.graph.edges());
  CHECK(gs2.groups == gs.groups);
}

TEST_CASE("malformed input raises InputError") {
  CHECK_THROWS_AS(graph_from_json("not json"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"nodes":2,"edges":[[0]]})"), InputError);
  CHECK_THROWS_AS(instance_from_json(R"({"nodes":2,"edges":[]})"), InputError);
  CHECK_THROWS_AS(instance_from_json(R"({"nodes":2,"edges":[],"terminal_sets":[[0,0,5]]})"),
                  InputError);
  CHECK_THROWS_AS(packing_instance_from_json(R"({"universe":3,"family":[[0]]})"),
                  InputError);
}

TEST_CASE("duplicate edges are dropped") {
  auto g = graph_from_json(R"({"nodes":3,"edges":[[0,1],[1,0],[1,2]]})");
  CHECK(g.edges() == EdgeList{{0, 1}, {1, 2}});
}
