#include "netslice/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "netslice/errors.hpp"

namespace netslice {

NodeSet::NodeSet(std::initializer_list<NodeId> ids) : NodeSet(std::vector<NodeId>(ids)) {}

NodeSet::NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::range(std::size_t n) {
  std::vector<NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
  NodeSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool NodeSet::contains(NodeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges) : Graph(node_count) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_id(NodeId i) const {
  if (i >= adjacency_.size()) {
    throw UsageError("node id " + std::to_string(i) + " out of range for graph of " +
                     std::to_string(adjacency_.size()) + " nodes");
  }
}

std::size_t Graph::degree(NodeId i) const {
  check_id(i);
  return adjacency_[i].size();
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check_id(i);
  return adjacency_[i];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_id(u);
  check_id(v);
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(NodeId u, NodeId v) {
  check_id(u);
  check_id(v);
  if (u == v) throw UsageError("self-loop at node " + std::to_string(u));
  auto& ru = adjacency_[u];
  auto it = std::lower_bound(ru.begin(), ru.end(), v);
  if (it != ru.end() && *it == v) {
    throw UsageError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  ru.insert(it, v);
  auto& rv = adjacency_[v];
  rv.insert(std::lower_bound(rv.begin(), rv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_edge(NodeId u, NodeId v) {
  check_id(u);
  check_id(v);
  auto& ru = adjacency_[u];
  auto& rv = adjacency_[v];
  auto iu = std::lower_bound(ru.begin(), ru.end(), v);
  auto iv = std::lower_bound(rv.begin(), rv.end(), u);
  if (iu == ru.end() || *iu != v || iv == rv.end() || *iv != u) {
    throw LogicError("remove_edge: no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  ru.erase(iu);
  rv.erase(iv);
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

double Graph::mean_degree() const {
  if (adjacency_.empty()) return 0.0;
  return 2.0 * static_cast<double>(edge_count_) / static_cast<double>(adjacency_.size());
}

bool Graph::check_invariants() const {
  std::size_t half_degrees = 0;
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    const auto& row = adjacency_[u];
    half_degrees += row.size();
    for (std::size_t k = 0; k < row.size(); ++k) {
      NodeId v = row[k];
      if (v >= adjacency_.size() || v == u) return false;
      if (k > 0 && row[k - 1] >= v) return false;
      const auto& back = adjacency_[v];
      if (!std::binary_search(back.begin(), back.end(), u)) return false;
    }
  }
  return half_degrees == 2 * edge_count_;
}

namespace {

// Breadth-first search from `start` restricted to `within`; stops early when
// `target` is reached. Returns visited nodes in discovery order.
std::vector<NodeId> restricted_bfs(const Graph& g, NodeId start, const NodeSet& within,
                                   const NodeId* target) {
  if (!within.contains(start)) throw UsageError("start node not inside the restriction set");
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> order{start};
  seen[start] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    NodeId u = order[head];
    if (target && u == *target) break;
    for (NodeId v : g.neighbors(u)) {
      if (seen[v] || !within.contains(v)) continue;
      seen[v] = 1;
      order.push_back(v);
    }
  }
  return order;
}

}  // namespace

bool connected(const Graph& g, NodeId u, NodeId v, const NodeSet& within) {
  if (!within.contains(v)) throw UsageError("target node not inside the restriction set");
  auto order = restricted_bfs(g, u, within, &v);
  return std::find(order.begin(), order.end(), v) != order.end();
}

NodeSet component_of(const Graph& g, NodeId u, const NodeSet& within) {
  return NodeSet(restricted_bfs(g, u, within, nullptr));
}

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<NodeSet> out;
  std::vector<char> seen(g.node_count(), 0);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> order{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (NodeId v : g.neighbors(order[head])) {
        if (!seen[v]) {
          seen[v] = 1;
          order.push_back(v);
        }
      }
    }
    out.emplace_back(std::move(order));
  }
  return out;
}

NodeSet largest_component(const Graph& g) {
  if (g.node_count() == 0) throw UsageError("largest_component: empty graph");
  auto components = connected_components(g);
  // Components come out ordered by smallest member, so the first maximum wins ties.
  std::size_t best = 0;
  for (std::size_t i = 1; i < components.size(); ++i) {
    if (components[i].size() > components[best].size()) best = i;
  }
  return components[best];
}

Graph induced_subgraph(const Graph& g, const NodeSet& nodes) {
  std::vector<NodeId> relabel(g.node_count(), static_cast<NodeId>(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i) relabel[nodes[i]] = static_cast<NodeId>(i);
  Graph out(nodes.size());
  for (NodeId u : nodes) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && relabel[v] != static_cast<NodeId>(-1)) out.add_edge(relabel[u], relabel[v]);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  return component_of(g, 0, NodeSet::range(g.node_count())).size() == g.node_count();
}

}  // namespace netslice
