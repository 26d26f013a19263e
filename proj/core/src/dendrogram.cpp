#include "netslice/dendrogram.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <json.hpp>

#include "netslice/errors.hpp"
#include "netslice/newick.hpp"

namespace netslice {

using json = nlohmann::ordered_json;

Tick permanence_of(const ComponentRecord& record) {
  if (!record.death_tick) {
    throw UsageError("component " + std::to_string(record.id) +
                     " never split; permanence is undefined for leaves");
  }
  return *record.death_tick - record.birth_tick;
}

Dendrogram::Dendrogram(std::vector<ComponentRecord> records, DendrogramMeta meta)
    : records_(std::move(records)), meta_(std::move(meta)) {
  if (records_.empty()) throw StructuralError("dendrogram has no records");
  std::optional<ComponentId> root;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    if (r.id != i) throw StructuralError("record ids must equal their index");
    if (!r.parent_id) {
      if (root) throw StructuralError("more than one root record");
      root = r.id;
    } else if (*r.parent_id >= records_.size()) {
      throw StructuralError("record " + std::to_string(r.id) + " has an unknown parent");
    }
    if (r.children.size() != 0 && r.children.size() != 2) {
      throw StructuralError("record " + std::to_string(r.id) + " is not binary");
    }
    if (r.children.size() == 2) {
      std::size_t total = 0;
      for (ComponentId c : r.children) {
        if (c >= records_.size() || records_[c].parent_id != r.id) {
          throw StructuralError("child link of record " + std::to_string(r.id) + " is broken");
        }
        total += records_[c].size;
        if (r.death_tick && records_[c].birth_tick != *r.death_tick) {
          throw StructuralError("child birth tick differs from parent death tick");
        }
      }
      if (total != r.size) {
        throw StructuralError("children of record " + std::to_string(r.id) +
                              " do not add up to its size");
      }
    }
  }
  if (!root) throw StructuralError("no root record");
  root_ = *root;

  // Every record must hang below the root.
  std::size_t reached = 0;
  std::vector<ComponentId> stack{root_};
  while (!stack.empty()) {
    ComponentId id = stack.back();
    stack.pop_back();
    ++reached;
    for (ComponentId c : records_[id].children) stack.push_back(c);
  }
  if (reached != records_.size()) throw StructuralError("records not reachable from the root");
}

std::vector<ComponentId> Dendrogram::ordered_children(ComponentId id) const {
  std::vector<ComponentId> kids = records_.at(id).children;
  std::sort(kids.begin(), kids.end(), [&](ComponentId a, ComponentId b) {
    const auto& ra = records_[a];
    const auto& rb = records_[b];
    if (ra.is_leaf() != rb.is_leaf()) return !ra.is_leaf();
    if (!ra.is_leaf()) {
      const Tick da = ra.death_tick.value_or(0);
      const Tick db = rb.death_tick.value_or(0);
      if (da != db) return da < db;
    }
    return a < b;
  });
  return kids;
}

std::vector<ComponentId> Dendrogram::leaf_order() const {
  std::vector<ComponentId> out;
  std::function<void(ComponentId)> visit = [&](ComponentId id) {
    if (records_[id].is_leaf()) {
      out.push_back(id);
      return;
    }
    for (ComponentId c : ordered_children(id)) visit(c);
  };
  visit(root_);
  return out;
}

Dendrogram build(std::span<const SplitEvent> events, std::size_t n,
                 std::optional<DendrogramMeta> meta) {
  if (n == 0) throw StructuralError("dendrogram root must have at least one node");
  std::vector<ComponentRecord> records;
  const ComponentId root_id = events.empty() ? 0 : events.front().parent_id;
  auto ensure = [&](ComponentId id) -> ComponentRecord& {
    if (records.size() <= id) {
      const auto old = records.size();
      records.resize(id + 1);
      for (auto i = old; i < records.size(); ++i) records[i].id = static_cast<ComponentId>(i);
    }
    return records[id];
  };
  // Placeholder slots (ids never mentioned) are tracked so gaps can be rejected.
  std::vector<char> known;
  auto mark = [&](ComponentId id) {
    if (known.size() <= id) known.resize(id + 1, 0);
    known[id] = 1;
  };

  ensure(root_id).size = n;
  mark(root_id);
  for (const auto& e : events) {
    if (e.parent_id >= known.size() || !known[e.parent_id]) {
      throw StructuralError("event at tick " + std::to_string(e.tick) + " has unknown parent " +
                            std::to_string(e.parent_id));
    }
    if (e.n < 1 || e.n > e.m || e.n + e.m != e.parent_size) {
      throw StructuralError("event at tick " + std::to_string(e.tick) + " has inconsistent sizes");
    }
    if (e.child_small_id == e.child_big_id || e.child_small_id == e.parent_id ||
        e.child_big_id == e.parent_id) {
      throw StructuralError("event at tick " + std::to_string(e.tick) + " reuses an id");
    }
    for (ComponentId c : {e.child_small_id, e.child_big_id}) {
      if (c < known.size() && known[c]) {
        throw StructuralError("component id " + std::to_string(c) + " created twice");
      }
    }
    {
      auto& parent = ensure(e.parent_id);
      if (parent.size != e.parent_size) {
        throw StructuralError("event parent size disagrees with the recorded component size");
      }
      if (!parent.children.empty()) {
        throw StructuralError("component " + std::to_string(e.parent_id) + " split twice");
      }
      if (e.tick < parent.birth_tick) throw StructuralError("event precedes its parent's birth");
      parent.death_tick = e.tick;
      parent.permanence = e.tick - parent.birth_tick;
      parent.children = {e.child_small_id, e.child_big_id};
    }
    for (auto [id, size] : {std::pair{e.child_small_id, e.n}, std::pair{e.child_big_id, e.m}}) {
      auto& child = ensure(id);
      child.parent_id = e.parent_id;
      child.size = size;
      child.birth_tick = e.tick;
      mark(id);
    }
  }
  if (known.size() != records.size() ||
      std::find(known.begin(), known.end(), 0) != known.end()) {
    throw StructuralError("component ids are not dense");
  }
  for (auto& r : records) r.truncated = r.is_leaf() && r.size > 1;

  DendrogramMeta m = meta.value_or(DendrogramMeta{});
  if (!meta) {
    m.n = n;
    m.final_tick = events.empty() ? 0 : events.back().tick;
  }
  return Dendrogram(std::move(records), std::move(m));
}

namespace {

struct Layout {
  std::vector<double> x;
};

Layout layout_of(const Dendrogram& d) {
  Layout lay;
  lay.x.assign(d.size(), 0.0);
  double next = 0.0;
  std::function<double(ComponentId)> place = [&](ComponentId id) -> double {
    const auto& r = d.at(id);
    if (r.is_leaf()) return lay.x[id] = next++;
    double sum = 0.0;
    auto kids = d.ordered_children(id);
    for (ComponentId c : kids) sum += place(c);
    return lay.x[id] = sum / static_cast<double>(kids.size());
  };
  place(d.root_id());
  return lay;
}

double y_of(const Dendrogram& d, const ComponentRecord& r, Axis axis) {
  if (axis == Axis::Size) return static_cast<double>(r.size);
  return static_cast<double>(r.death_tick.value_or(d.meta().final_tick));
}

double y_top_of(const Dendrogram& d, const ComponentRecord& r, Axis axis) {
  if (axis == Axis::Time) return static_cast<double>(r.birth_tick);
  if (!r.parent_id) return static_cast<double>(r.size);
  return static_cast<double>(d.at(*r.parent_id).size);
}

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string export_json(const Dendrogram& d, Axis axis) {
  const auto& meta = d.meta();
  json j;
  j["meta"] = {{"n", meta.n},
               {"edges", meta.edges},
               {"seed", meta.seed},
               {"model", meta.model},
               {"axis", axis == Axis::Size ? "size" : "time"},
               {"final_tick", meta.final_tick},
               {"root", d.root_id()}};
  for (const auto& [k, v] : meta.extra) j["meta"][k] = v;

  const Layout lay = layout_of(d);
  json nodes = json::array();
  for (const auto& r : d.records()) {
    const double y = y_of(d, r, axis);
    const double top = y_top_of(d, r, axis);
    nodes.push_back({{"id", r.id},
                     {"parent", optional_json(r.parent_id)},
                     {"size", r.size},
                     {"birth", r.birth_tick},
                     {"death", optional_json(r.death_tick)},
                     {"permanence", optional_json(r.permanence)},
                     {"children", d.ordered_children(r.id)},
                     {"truncated", r.truncated},
                     {"x", lay.x[r.id]},
                     {"y", y},
                     {"y_top", top},
                     {"branch_length", std::fabs(top - y)}});
  }
  j["nodes"] = std::move(nodes);
  j["leaf_order"] = d.leaf_order();
  return j.dump(2) + "\n";
}

std::string export_size_axis(const Dendrogram& d) { return export_json(d, Axis::Size); }
std::string export_time_axis(const Dendrogram& d) { return export_json(d, Axis::Time); }

namespace {

NewickNode to_newick_node(const Dendrogram& d, ComponentId id, Axis axis) {
  const auto& r = d.at(id);
  NewickNode node;
  char kind = 'I';
  if (!r.parent_id) {
    kind = 'R';
  } else if (r.is_leaf()) {
    kind = r.truncated ? 'T' : 'L';
  }
  node.label = kind + std::to_string(r.id) + "_" + std::to_string(r.size);
  node.length = std::fabs(y_top_of(d, r, axis) - y_of(d, r, axis));
  for (ComponentId c : d.ordered_children(id)) node.children.push_back(to_newick_node(d, c, axis));
  return node;
}

}  // namespace

std::string export_newick(const Dendrogram& d, Axis axis) {
  return write_newick(to_newick_node(d, d.root_id(), axis));
}

Dendrogram dendrogram_from_newick(const std::string& text, Axis axis) {
  NewickNode root = parse_newick(text);
  std::map<ComponentId, ComponentRecord> by_id;
  Tick final_tick = 0;

  std::function<void(const NewickNode&, std::optional<ComponentId>, Tick)> visit =
      [&](const NewickNode& node, std::optional<ComponentId> parent, Tick birth) {
        const auto& label = node.label;
        const auto underscore = label.find('_');
        if (label.size() < 4 || underscore == std::string::npos ||
            std::string("RILT").find(label[0]) == std::string::npos) {
          throw ParseError("newick label '" + label + "' is not <kind><id>_<size>", 1);
        }
        ComponentRecord r;
        try {
          r.id = static_cast<ComponentId>(std::stoul(label.substr(1, underscore - 1)));
          r.size = std::stoul(label.substr(underscore + 1));
        } catch (const std::exception&) {
          throw ParseError("newick label '" + label + "' has a non-numeric field", 1);
        }
        if (by_id.count(r.id)) throw ParseError("duplicate component id in newick", 1);
        r.parent_id = parent;
        const Tick length = static_cast<Tick>(std::llround(node.length.value_or(0.0)));
        if (axis == Axis::Time) {
          r.birth_tick = birth;
          if (!node.children.empty()) {
            r.death_tick = birth + length;
            r.permanence = length;
          } else {
            final_tick = std::max(final_tick, birth + length);
          }
        }
        r.truncated = node.children.empty() && r.size > 1;
        for (const auto& child : node.children) {
          const auto& cl = child.label;
          const auto cu = cl.find('_');
          if (cu == std::string::npos) throw ParseError("malformed child label '" + cl + "'", 1);
          r.children.push_back(static_cast<ComponentId>(std::stoul(cl.substr(1, cu - 1))));
        }
        std::sort(r.children.begin(), r.children.end());
        const Tick child_birth = r.death_tick.value_or(0);
        by_id.emplace(r.id, r);
        for (const auto& child : node.children) visit(child, r.id, child_birth);
      };
  visit(root, std::nullopt, 0);

  std::vector<ComponentRecord> records;
  for (auto& [id, r] : by_id) {
    if (id != records.size()) throw ParseError("newick component ids are not dense", 1);
    records.push_back(std::move(r));
  }
  DendrogramMeta meta;
  meta.final_tick = final_tick;
  for (const auto& r : records) {
    if (!r.parent_id) meta.n = r.size;
  }
  return Dendrogram(std::move(records), std::move(meta));
}

}  // namespace netslice
