#include "netslice/walk.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "netslice/errors.hpp"

namespace netslice {

WalkState::WalkState(Graph g, std::uint64_t seed) : graph(std::move(g)), rng(seed) {
  if (graph.node_count() < 2 || graph.edge_count() == 0) {
    throw UsageError("walk needs a graph with at least two nodes and one edge");
  }
  if (!is_connected(graph)) {
    throw UsageError("walk needs a connected graph; extract the largest component first");
  }
  ComponentRecord root;
  root.id = 0;
  root.members = NodeSet::range(graph.node_count());
  root.size = graph.node_count();
  root.birth_tick = 0;
  components.push_back(std::move(root));
  node_component.assign(graph.node_count(), 0);
}

Agent& WalkState::place_agent(ComponentId component) {
  const auto& members = components.at(component).members;
  Agent a;
  a.component_id = component;
  a.position = members[rng.uniform_index(members.size())];
  a.active = true;
  agents.push_back(a);
  return agents.back();
}

std::optional<SplitEvent> step_agent(WalkState& state, Agent& agent) {
  if (!agent.active) throw LogicError("step_agent: agent is inactive");
  ComponentRecord& parent_ref = state.components.at(agent.component_id);
  if (parent_ref.size < 2 || parent_ref.death_tick) {
    throw LogicError("step_agent: agent sits in a component that cannot be walked");
  }

  const NodeId alpha = agent.position;
  const auto nbrs = state.graph.neighbors(alpha);
  if (nbrs.empty()) throw LogicError("step_agent: agent stranded on an isolated node");
  const NodeId beta = nbrs[state.rng.uniform_index(nbrs.size())];
  state.graph.remove_edge(alpha, beta);
  agent.position = beta;
  ++state.steps_taken;

  const NodeSet& members = parent_ref.members;
  if (connected(state.graph, alpha, beta, members)) return std::nullopt;

  NodeSet side_alpha = component_of(state.graph, alpha, members);
  NodeSet side_beta = component_of(state.graph, beta, members);
  if (side_alpha.size() + side_beta.size() != members.size()) {
    throw LogicError("step_agent: edge removal produced more than two components");
  }

  bool alpha_small = side_alpha.size() < side_beta.size() ||
                     (side_alpha.size() == side_beta.size() &&
                      side_alpha.front() < side_beta.front());
  NodeSet& small = alpha_small ? side_alpha : side_beta;
  NodeSet& big = alpha_small ? side_beta : side_alpha;

  const ComponentId parent_id = agent.component_id;
  const auto small_id = static_cast<ComponentId>(state.components.size());
  const auto big_id = static_cast<ComponentId>(small_id + 1);

  SplitEvent ev;
  ev.tick = state.tick;
  ev.parent_id = parent_id;
  ev.parent_size = members.size();
  ev.n = small.size();
  ev.m = big.size();
  ev.child_small_id = small_id;
  ev.child_big_id = big_id;

  for (auto [id, set] : {std::pair{small_id, &small}, std::pair{big_id, &big}}) {
    for (NodeId v : *set) state.node_component[v] = id;
  }

  // parent_ref is invalidated by the push_backs below.
  {
    ComponentRecord& parent = state.components[parent_id];
    parent.death_tick = state.tick;
    parent.permanence = state.tick - parent.birth_tick;
    parent.children = {small_id, big_id};
  }
  for (auto [id, set] : {std::pair{small_id, &small}, std::pair{big_id, &big}}) {
    ComponentRecord child;
    child.id = id;
    child.parent_id = parent_id;
    child.size = set->size();
    child.members = std::move(*set);
    child.birth_tick = state.tick;
    state.components.push_back(std::move(child));
  }
  return ev;
}

void resolve_split(WalkState& state, const SplitEvent& event, WalkMode mode) {
  auto it = std::find_if(state.agents.begin(), state.agents.end(), [&](const Agent& a) {
    return a.active && a.component_id == event.parent_id;
  });
  if (it == state.agents.end()) throw LogicError("resolve_split: no agent owns the parent");

  if (mode == WalkMode::Sequential) {
    Agent& agent = *it;
    const ComponentId next = state.node_component[agent.position];
    if (next != event.child_small_id && next != event.child_big_id) {
      throw LogicError("resolve_split: agent is not inside either child");
    }
    agent.component_id = next;
    const auto& members = state.components[next].members;
    agent.position = members[state.rng.uniform_index(members.size())];
    agent.active = members.size() >= 2;
    return;
  }

  it->active = false;
  for (ComponentId child : {event.child_small_id, event.child_big_id}) {
    if (state.components[child].size >= 2) state.place_agent(child);
  }
}

namespace {

bool stop_requested(const WalkState& state, const WalkOptions& options) {
  return options.truncate_at_tick && state.tick >= *options.truncate_at_tick;
}

}  // namespace

WalkTrace run_sequential(const Graph& g, std::uint64_t seed, const WalkOptions& options) {
  WalkState state(g, seed);
  WalkTrace trace;
  trace.seed = seed;
  state.agents.reserve(1);
  Agent& agent = state.place_agent(0);
  trace.start_node = agent.position;

  while (agent.active) {
    if (stop_requested(state, options)) {
      trace.truncated = true;
      break;
    }
    ++state.tick;
    if (auto ev = step_agent(state, agent)) {
      resolve_split(state, *ev, WalkMode::Sequential);
      trace.events.push_back(*ev);
      trace.chosen_branch.push_back(agent.component_id);
    }
  }
  trace.duration = state.steps_taken;
  return trace;
}

ParallelResult run_parallel(const Graph& g, std::uint64_t seed, const WalkOptions& options) {
  WalkState state(g, seed);
  ParallelResult out;
  out.initial_edges = state.graph.edge_count();
  state.place_agent(0);

  std::vector<std::size_t> roster;
  while (true) {
    roster.clear();
    for (std::size_t i = 0; i < state.agents.size(); ++i) {
      if (state.agents[i].active) roster.push_back(i);
    }
    if (roster.empty()) break;
    if (stop_requested(state, options)) {
      out.truncated = true;
      break;
    }
    std::sort(roster.begin(), roster.end(), [&](std::size_t a, std::size_t b) {
      return state.agents[a].component_id < state.agents[b].component_id;
    });
    ++state.tick;
    for (std::size_t idx : roster) {
      if (auto ev = step_agent(state, state.agents[idx])) {
        out.events.push_back(*ev);
        resolve_split(state, *ev, WalkMode::Parallel);
      }
    }
  }

  for (auto& r : state.components) r.truncated = r.is_leaf() && r.size > 1;
  out.total_steps = state.steps_taken;
  out.final_tick = state.tick;

  DendrogramMeta meta;
  meta.n = g.node_count();
  meta.edges = out.initial_edges;
  meta.seed = seed;
  meta.final_tick = state.tick;
  out.records = state.components;
  out.dendrogram = Dendrogram(std::move(state.components), std::move(meta));
  return out;
}

namespace {

void write_meta(std::ostream& out, const Metadata& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << '=' << v << '\n';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <typename T>
T field(const std::string& s, std::size_t line) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad numeric field '" + s + "'", line);
  }
  return v;
}

// Yields data rows after validating the header; comment and blank lines skipped.
template <typename Fn>
void for_each_row(std::istream& in, const std::string& header, std::size_t columns, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      if (line != header) throw ParseError("expected header '" + header + "'", line_no);
      have_header = true;
      continue;
    }
    auto cells = split_csv(line);
    if (cells.size() != columns) {
      throw ParseError("expected " + std::to_string(columns) + " columns", line_no);
    }
    fn(cells, line_no);
  }
  if (!have_header) throw ParseError("missing header '" + header + "'", line_no + 1);
}

}  // namespace

void write_split_events_csv(std::ostream& out, const std::vector<SplitEvent>& events,
                            const Metadata& meta) {
  write_meta(out, meta);
  out << kSplitEventCsvHeader << '\n';
  for (const auto& e : events) {
    out << e.tick << ',' << e.parent_id << ',' << e.parent_size << ',' << e.n << ',' << e.m << ','
        << e.child_small_id << ',' << e.child_big_id << '\n';
  }
}

std::vector<SplitEvent> read_split_events_csv(std::istream& in) {
  std::vector<SplitEvent> events;
  for_each_row(in, kSplitEventCsvHeader, 7, [&](const std::vector<std::string>& c, std::size_t l) {
    SplitEvent e;
    e.tick = field<Tick>(c[0], l);
    e.parent_id = field<ComponentId>(c[1], l);
    e.parent_size = field<std::size_t>(c[2], l);
    e.n = field<std::size_t>(c[3], l);
    e.m = field<std::size_t>(c[4], l);
    e.child_small_id = field<ComponentId>(c[5], l);
    e.child_big_id = field<ComponentId>(c[6], l);
    events.push_back(e);
  });
  return events;
}

void write_walk_traces_csv(std::ostream& out, const std::vector<WalkTrace>& traces,
                           const Metadata& meta) {
  write_meta(out, meta);
  out << kWalkTraceCsvHeader << '\n';
  for (const auto& t : traces) {
    out << t.seed << ',' << t.start_node << ',' << t.duration << ',' << t.events.size() << '\n';
  }
}

std::vector<WalkTraceRow> read_walk_traces_csv(std::istream& in) {
  std::vector<WalkTraceRow> rows;
  for_each_row(in, kWalkTraceCsvHeader, 4, [&](const std::vector<std::string>& c, std::size_t l) {
    rows.push_back({field<std::uint64_t>(c[0], l), field<NodeId>(c[1], l),
                    field<std::size_t>(c[2], l), field<std::size_t>(c[3], l)});
  });
  return rows;
}

}  // namespace netslice
