#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netslice/graph.hpp"
#include "netslice/split_event.hpp"

namespace netslice {

/// Lifetime of one connected component in the dismantling hierarchy.
struct ComponentRecord {
  ComponentId id = 0;
  std::optional<ComponentId> parent_id;
  NodeSet members;  // empty when the record was rebuilt from events alone
  std::size_t size = 0;
  Tick birth_tick = 0;
  std::optional<Tick> death_tick;  // set once the component splits
  std::vector<ComponentId> children;  // empty or exactly two
  std::optional<Tick> permanence;
  bool truncated = false;  // size > 1 leaf left behind by an interrupted run

  bool is_leaf() const noexcept { return children.empty(); }
};

/// Steps between a component's creation and its split. Throws UsageError for
/// a leaf, whose permanence is undefined.
Tick permanence_of(const ComponentRecord& record);

struct DendrogramMeta {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::uint64_t seed = 0;
  std::string model;
  Tick final_tick = 0;
  Metadata extra;  // audit trail entries copied verbatim into exports
};

enum class Axis { Size, Time };

/// Binary tree of component records indexed by id.
class Dendrogram {
 public:
  Dendrogram() = default;

  /// Takes records whose ids equal their index. Throws StructuralError when
  /// the records do not form a full binary tree with consistent sizes.
  Dendrogram(std::vector<ComponentRecord> records, DendrogramMeta meta);

  ComponentId root_id() const noexcept { return root_; }
  const ComponentRecord& root() const { return records_.at(root_); }
  const ComponentRecord& at(ComponentId id) const { return records_.at(id); }
  std::span<const ComponentRecord> records() const noexcept { return records_; }
  const DendrogramMeta& meta() const noexcept { return meta_; }
  std::size_t size() const noexcept { return records_.size(); }

  /// Leaf ids in drawing order (left to right).
  std::vector<ComponentId> leaf_order() const;

  /// Children of `id` in drawing order: the child that splits first goes
  /// left, internal nodes before leaves, remaining ties by smaller id.
  std::vector<ComponentId> ordered_children(ComponentId id) const;

 private:
  std::vector<ComponentRecord> records_;
  DendrogramMeta meta_;
  ComponentId root_ = 0;
};

/// Rebuilds the hierarchy from a split history over a root of `n` nodes.
/// The root id is the first event's parent (0 if there are no events).
/// Leaves of size > 1 are marked truncated. meta.final_tick defaults to
/// the last event tick when not supplied.
/// Throws StructuralError on an unknown parent, a parent that already
/// split, or sizes that do not add up.
Dendrogram build(std::span<const SplitEvent> events, std::size_t n,
                 std::optional<DendrogramMeta> meta = std::nullopt);

/// JSON drawing description. Each node carries the stored record fields plus
///   x              leaf slot (leaves 0,1,2,...; internal = mean of children)
///   y              size (size axis) or death / final tick (time axis)
///   y_top          y of the branch start: parent size, or birth tick
///   branch_length  |y_top - y|
std::string export_size_axis(const Dendrogram& d);
std::string export_time_axis(const Dendrogram& d);
std::string export_json(const Dendrogram& d, Axis axis);

/// Newick with integer branch lengths for `axis`. Labels are
/// <kind><id>_<size> where kind is R (root), I (internal), L (leaf) or T
/// (truncated leaf); e.g. a single edge on the size axis gives
/// "(L1_1:1,L2_1:1)R0_2:0;".
std::string export_newick(const Dendrogram& d, Axis axis);

/// Inverse of export_newick. With the time axis every tick is recovered;
/// with the size axis birth/death ticks are left unset.
Dendrogram dendrogram_from_newick(const std::string& text, Axis axis);

}  // namespace netslice
