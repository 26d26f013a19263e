#include <doctest.h>

#include "netslice/errors.hpp"
#include "netslice/graph.hpp"
#include "netslice/rng.hpp"
#include "oracles.hpp"

using namespace netslice;

TEST_CASE("degree and neighbours of a small graph") {
  Graph g(4, std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(3) == 1);
  CHECK(g.edge_count() == 3);
  CHECK(g.mean_degree() == doctest::Approx(1.5));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 3));
  CHECK_THROWS_AS(g.degree(4), UsageError);
  CHECK(g.check_invariants());
}

TEST_CASE("remove_edge updates both endpoints and rejects absent edges") {
  Graph g = oracle::complete_graph(3);
  g.remove_edge(1, 0);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_THROWS_AS(g.remove_edge(0, 1), LogicError);
  CHECK(g.check_invariants());

  g.add_edge(0, 1);
  CHECK(g == oracle::complete_graph(3));
}

TEST_CASE("add_edge rejects self-loops and duplicates") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), UsageError);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), UsageError);
  CHECK_THROWS_AS(g.add_edge(0, 7), UsageError);
}

TEST_CASE("connectivity on a path after cutting the middle edge") {
  Graph g = oracle::path_graph(4);
  const NodeSet all = NodeSet::range(4);
  CHECK(connected(g, 0, 3, all));
  g.remove_edge(1, 2);
  CHECK_FALSE(connected(g, 0, 3, all));
  CHECK(component_of(g, 0, all) == NodeSet{0, 1});
  CHECK(component_of(g, 3, all) == NodeSet{2, 3});
  // restricted to a subset, reachability may not leave it
  Graph c = oracle::cycle_graph(5);
  CHECK_FALSE(connected(c, 0, 2, NodeSet{0, 2, 3}));
  CHECK(connected(c, 0, 2, NodeSet{0, 1, 2}));
}

TEST_CASE("largest component breaks ties by smallest id") {
  Graph g(6, std::vector<Edge>{{3, 4}, {4, 5}, {0, 1}, {1, 2}});
  CHECK(largest_component(g) == NodeSet{0, 1, 2});
  CHECK(connected_components(g).size() == 2);
  Graph h(5, std::vector<Edge>{{3, 4}, {2, 3}});
  CHECK(largest_component(h) == NodeSet{2, 3, 4});
  CHECK_THROWS_AS(largest_component(Graph{}), UsageError);
}

TEST_CASE("induced subgraph relabels in ascending order") {
  Graph g(5, std::vector<Edge>{{1, 3}, {3, 4}, {0, 2}});
  Graph s = induced_subgraph(g, NodeSet{1, 3, 4});
  CHECK(s.node_count() == 3);
  CHECK(s.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("component_of agrees with transitive-closure reachability on random graphs") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.uniform_index(14);
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (rng.uniform01() < 0.2) g.add_edge(u, v);
    std::vector<NodeId> keep;
    std::vector<bool> within(n, false);
    for (NodeId u = 0; u < n; ++u)
      if (rng.uniform01() < 0.8) {
        keep.push_back(u);
        within[u] = true;
      }
    if (keep.empty()) continue;
    const NodeSet subset(keep);
    const auto reach = oracle::reachability(oracle::to_matrix(g), within);
    for (NodeId u : subset) {
      const NodeSet comp = component_of(g, u, subset);
      for (NodeId v : subset) {
        REQUIRE(comp.contains(v) == static_cast<bool>(reach[u][v]));
        REQUIRE(connected(g, u, v, subset) == static_cast<bool>(reach[u][v]));
      }
    }
  }
}
