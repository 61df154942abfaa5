#include <doctest.h>

#include "densesf/errors.hpp"
#include "densesf/oracle.hpp"
#include "densesf/reductions.hpp"

using namespace densesf;

TEST_CASE("set cover gadget layout") {
  // n=2, family {{0,1},{1}}: k=2, 7 nodes
  SetCoverInstance sc{2, {{0, 1}, {1}}};
  auto gadget = set_cover_to_group_steiner(sc);
  CHECK(gadget.graph.node_count() == 7);
  // s(0)=4 adjacent to e(0,0)=0 and e(1,0)=2; s(1)=5 adjacent to e(1,1)=3
  CHECK(gadget.graph.has_edge(4, 0));
  CHECK(gadget.graph.has_edge(4, 2));
  CHECK(gadget.graph.has_edge(5, 3));
  CHECK(!gadget.graph.has_edge(5, 1));
  // root r=6 adjacent to both s-nodes
  CHECK(gadget.graph.has_edge(6, 4));
  CHECK(gadget.graph.has_edge(6, 5));
  // groups: one per element, one for s-nodes, one for the root
  REQUIRE(gadget.groups.size() == 4);
  CHECK(gadget.groups[0] == NodeSet{0, 1});
  CHECK(gadget.groups[1] == NodeSet{2, 3});
  CHECK(gadget.groups[2] == NodeSet{4, 5});
  CHECK(gadget.groups[3] == NodeSet{6});

  // every e-node has degree <= 1
  for (int u = 0; u < 4; ++u) CHECK(gadget.graph.degree(u) <= 1);

  // groups partition the nodes (no Steiner vertices)
  std::vector<int> cover(gadget.graph.node_count(), 0);
  for (const auto& g : gadget.groups)
    for (int v : g) ++cover[v];
  for (int c : cover) CHECK(c == 1);
}

TEST_CASE("smallest set cover gadget is a path") {
  SetCoverInstance sc{1, {{0}}};
  auto gadget = set_cover_to_group_steiner(sc);
  CHECK(gadget.graph.node_count() == 3);
  CHECK(gadget.graph.edges() == EdgeList{{0, 1}, {1, 2}});
}

TEST_CASE("empty family rejected") {
  CHECK_THROWS_AS(set_cover_to_group_steiner({1, {}}), InputError);
}

TEST_CASE("group gadget correspondence examples") {
  auto a = verify_group_gadget({2, {{0, 1}, {1}}});
  CHECK(a.cover_size == 1);
  CHECK(a.group_tree_edges == 3);
  CHECK(a.correspondence_holds);

  auto b = verify_group_gadget({1, {{0}}});
  CHECK(b.cover_size == 1);
  CHECK(b.group_tree_edges == 2);
  CHECK(b.correspondence_holds);

  auto c = verify_group_gadget({3, {{0}, {1}}});
  CHECK(!c.cover_size);
  CHECK(!c.group_tree_edges);
  CHECK(c.correspondence_holds);
}

TEST_CASE("vertex cover step 1 gadget") {
  Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  auto inst = vertex_cover_to_steiner_tree(triangle);
  CHECK(inst.graph().node_count() == 6);
  REQUIRE(inst.terminal_sets().size() == 1);
  CHECK(inst.terminal_sets()[0] == NodeSet{3, 4, 5});
  CHECK(inst.steiner_nodes() == NodeSet{0, 1, 2});
  // V-clique present
  CHECK(inst.graph().has_edge(0, 1));
  CHECK(inst.graph().has_edge(0, 2));
  CHECK(inst.graph().has_edge(1, 2));
  // edge node 3 corresponds to (0,1)
  CHECK(inst.graph().has_edge(3, 0));
  CHECK(inst.graph().has_edge(3, 1));
  CHECK(!inst.graph().has_edge(3, 2));

  // oracle value = |E| + |C| - 1 = 3 + 2 - 1
  auto f = oracle_steiner_forest(inst);
  REQUIRE(f);
  CHECK(f->edges.size() == 4);

  CHECK_THROWS_AS(vertex_cover_to_steiner_tree(Graph(3, {})), InputError);
}

TEST_CASE("vertex cover step 2 gadget") {
  auto single = vertex_cover_to_steiner_forest(Graph(2, {{0, 1}}));
  CHECK(single.graph().node_count() == 4);
  REQUIRE(single.terminal_sets().size() == 2);
  CHECK(single.terminal_sets()[0] == NodeSet{2, 3});
  CHECK(single.terminal_sets()[1] == NodeSet{0, 1});
  CHECK(single.steiner_nodes().empty());

  Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  auto big = vertex_cover_to_steiner_forest(triangle);
  CHECK(big.graph().node_count() == 9);
  CHECK(big.terminal_sets().size() == 4);
  CHECK(big.steiner_nodes().empty());
  // every companion pair is trivial
  auto triv = trivial_sets(big);
  for (int i = 0; i < 3; ++i) CHECK(set_contains(triv, i));
}

TEST_CASE("forest gadget report") {
  OracleCaps caps{8, 10, 24};
  Graph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
  auto rep = verify_forest_gadget(triangle, caps);
  CHECK(rep.tree_value == 4);
  CHECK(rep.difference == rep.forest_value - rep.tree_value);

  auto single = verify_forest_gadget(Graph(2, {{0, 1}}), caps);
  CHECK(single.difference == single.forest_value - single.tree_value);

  auto path = verify_forest_gadget(Graph(3, {{0, 1}, {1, 2}}), caps);
  CHECK(path.difference == path.forest_value - path.tree_value);
}
