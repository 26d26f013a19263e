#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netslice/geometry.hpp"
#include "netslice/graph.hpp"

namespace netslice {

enum class Model { ER, BA, GEO };

std::string_view to_string(Model m);
/// Accepts "er", "ba", "geo" in any case. Throws UsageError otherwise.
Model parse_model(std::string_view name);

/// Generator configuration. Unused fields are ignored by the other models.
struct GenSpec {
  Model model = Model::ER;
  std::size_t n_target = 100;
  double er_p = 5.7 / 99.0;
  std::size_t ba_attach = 3;
  std::size_t geo_rows = 10;
  std::size_t geo_cols = 10;
  double geo_jitter = 0.25;
  std::uint64_t seed = 0;

  /// Defaults calibrated for a mean degree near 5.7: p = 5.7/(n-1) for ER,
  /// m = 3 for BA, and for GEO the most square rows x cols factorisation
  /// of n with 0.25 lattice units of jitter.
  static GenSpec defaults(Model model, std::size_t n, std::uint64_t seed);

  /// Throws UsageError when a field required by `model` is out of range.
  void validate() const;

  /// key=value pairs describing every knob that influenced the output.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

struct GeneratedGraph {
  Graph graph;
  std::optional<std::vector<Point2D>> layout;  // GEO only
  std::vector<std::string> warnings;
};

/// G(n, p) restricted to its largest component, ids re-densified in
/// ascending original order. Throws GenerationError if that component has
/// fewer than two nodes.
GeneratedGraph gen_er(const GenSpec& spec);

/// Preferential attachment grown from a clique on m+1 nodes; every new node
/// adds m distinct edges, targets drawn proportionally to current degree
/// without replacement. Requires 1 <= m < n - 1.
GeneratedGraph gen_ba(const GenSpec& spec);

/// Delaunay graph of a rows x cols lattice, each coordinate displaced by
/// U[-jitter, +jitter]. Node id = row * cols + col at (col, row).
GeneratedGraph gen_geo(const GenSpec& spec);

GeneratedGraph generate(const GenSpec& spec);

}  // namespace netslice
