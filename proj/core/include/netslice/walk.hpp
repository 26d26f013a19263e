#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "netslice/dendrogram.hpp"
#include "netslice/graph.hpp"
#include "netslice/rng.hpp"
#include "netslice/split_event.hpp"

namespace netslice {

enum class WalkMode { Sequential, Parallel };

struct Agent {
  ComponentId component_id = 0;
  NodeId position = 0;
  bool active = false;
};

/// Everything one dismantling run mutates. Confined to a single thread.
struct WalkState {
  /// Registers the whole graph as root component 0 (birth tick 0).
  /// Throws UsageError unless the graph is connected with at least one edge.
  WalkState(Graph g, std::uint64_t seed);

  Graph graph;
  std::vector<ComponentRecord> components;  // indexed by ComponentId
  std::vector<ComponentId> node_component;  // current component of each node
  std::vector<Agent> agents;
  Tick tick = 0;
  std::size_t steps_taken = 0;
  Rng rng;

  /// Adds an active agent at a uniformly chosen member of `component`.
  Agent& place_agent(ComponentId component);
};

/// Moves `agent` to a uniformly chosen current neighbour, deleting the
/// traversed edge, and reports a split if the old component fell apart.
/// The event tick is state.tick; the caller's scheduler advances the clock.
/// On a split both child records are registered (smaller child first; on a
/// size tie the child holding the smaller node id counts as smaller) and
/// the parent record is closed.
/// Throws LogicError if the agent is inactive or sits in a size-1 component.
std::optional<SplitEvent> step_agent(WalkState& state, Agent& agent);

/// Re-seats agents after `event`.
///   Sequential: the single agent follows the child holding its position and
///     is moved to a uniformly chosen node of it (possibly the same node);
///     it retires if that child has size 1.
///   Parallel: the parent's agent retires and every child of size >= 2 gets
///     a fresh agent at a uniform node, small child first.
void resolve_split(WalkState& state, const SplitEvent& event, WalkMode mode);

struct WalkOptions {
  std::optional<Tick> truncate_at_tick;
};

struct WalkTrace {
  std::uint64_t seed = 0;
  NodeId start_node = 0;
  std::size_t duration = 0;  // edge traversals
  std::vector<SplitEvent> events;
  std::vector<ComponentId> chosen_branch;  // component entered after each split
  bool truncated = false;
};

/// Single agent; stops when its component is a single node.
WalkTrace run_sequential(const Graph& g, std::uint64_t seed, const WalkOptions& options = {});

struct ParallelResult {
  Dendrogram dendrogram;
  std::vector<SplitEvent> events;
  std::vector<ComponentRecord> records;
  std::size_t total_steps = 0;
  std::size_t initial_edges = 0;
  Tick final_tick = 0;
  bool truncated = false;
};

/// One agent per component of size >= 2 on a synchronous clock. Within a
/// tick agents act in ascending component id; agents created at tick t
/// first move at t + 1. Runs until no edges remain or the truncation tick.
ParallelResult run_parallel(const Graph& g, std::uint64_t seed, const WalkOptions& options = {});

inline constexpr const char* kWalkTraceCsvHeader = "seed,start_node,duration,num_splits";

void write_walk_traces_csv(std::ostream& out, const std::vector<WalkTrace>& traces,
                           const Metadata& meta = {});

struct WalkTraceRow {
  std::uint64_t seed = 0;
  NodeId start_node = 0;
  std::size_t duration = 0;
  std::size_t num_splits = 0;
};
std::vector<WalkTraceRow> read_walk_traces_csv(std::istream& in);

}  // namespace netslice
