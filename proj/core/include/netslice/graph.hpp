#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace netslice {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Sorted, duplicate-free set of node ids.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids);
  explicit NodeSet(std::vector<NodeId> ids);

  /// All ids 0..n-1.
  static NodeSet range(std::size_t n);

  bool contains(NodeId id) const;
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  NodeId front() const { return ids_.front(); }
  NodeId operator[](std::size_t i) const { return ids_[i]; }

  std::span<const NodeId> ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> ids_;
};

/// Mutable simple undirected graph over dense ids 0..N-1.
///
/// Neighbour lists are kept sorted so iteration order, and therefore every
/// seeded random choice made over them, is identical across platforms.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count);
  Graph(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Throws UsageError for an invalid id.
  std::size_t degree(NodeId i) const;
  std::span<const NodeId> neighbors(NodeId i) const;
  bool has_edge(NodeId u, NodeId v) const;

  /// Throws UsageError for self-loops, invalid ids or an existing edge.
  void add_edge(NodeId u, NodeId v);
  /// Throws LogicError when the edge is absent.
  void remove_edge(NodeId u, NodeId v);

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  double mean_degree() const;

  /// Verifies symmetry, absence of self-loops/duplicates and the edge count.
  /// Returns false instead of throwing so tests can assert on it.
  bool check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_id(NodeId i) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// True iff v is reachable from u using current edges with every visited
/// node inside `within`.
bool connected(const Graph& g, NodeId u, NodeId v, const NodeSet& within);

/// Maximal set of nodes reachable from u inside `within` (breadth-first).
NodeSet component_of(const Graph& g, NodeId u, const NodeSet& within);

/// Every connected component, ordered by smallest member.
std::vector<NodeSet> connected_components(const Graph& g);

/// A maximum-cardinality component; ties go to the one holding the smallest
/// node id. Throws UsageError on an empty graph.
NodeSet largest_component(const Graph& g);

/// Subgraph induced by `nodes`, relabelled to 0..k-1 in ascending id order.
Graph induced_subgraph(const Graph& g, const NodeSet& nodes);

bool is_connected(const Graph& g);

}  // namespace netslice
