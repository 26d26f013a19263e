#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "netslice/dendrogram.hpp"
#include "netslice/graph.hpp"
#include "netslice/split_event.hpp"

namespace netslice {

/// The (n, m) triangle of split sizes: 1 <= n <= m, n + m <= n_total.
/// Points with n >= cut are on the balanced (R) side.
struct RegionSpec {
  std::size_t n_total = 100;
  double cut = 25.0;

  /// cut = n_total / 4.
  static RegionSpec with_default_cut(std::size_t n_total);
  /// Throws UsageError unless 1 <= cut <= n_total / 2.
  void validate() const;
};

enum class Region { L, R };

/// Throws DataError when (n, m) lies outside the triangle.
Region classify_region(std::size_t n, std::size_t m, const RegionSpec& spec);

enum class ScatterScope { AllLevels, RootOnly };

struct ScatterSummary {
  std::vector<std::pair<std::size_t, std::size_t>> points;
  bool defined = false;  // false when there were no points; means are NaN
  double mean_n = 0.0;
  double mean_m = 0.0;
  double std_n = 0.0;
  double std_m = 0.0;
  double p_l = 0.0;
  double p_r = 0.0;
  std::size_t count_l = 0;
  std::size_t count_r = 0;
};

/// RootOnly keeps events whose parent is component 0, the root of every
/// engine run. Every point is checked with classify_region.
ScatterSummary scatter_summary(std::span<const SplitEvent> events, const RegionSpec& spec,
                               ScatterScope scope = ScatterScope::AllLevels);

/// Population mean and standard deviation.
struct Moments {
  double mean = 0.0;
  double std = 0.0;
  std::size_t count = 0;
};
Moments describe(std::span<const double> values);

/// Half-open bins [edges[i], edges[i+1]). The last edge may be +inf for an
/// overflow bin. Values outside the covered range are clamped into the
/// first or last bin so no observation is lost.
struct Bins {
  std::vector<double> edges;

  std::size_t count() const noexcept { return edges.empty() ? 0 : edges.size() - 1; }
  std::size_t index_of(double value) const;

  static Bins uniform(double lo, double width, std::size_t count);
  /// Unit bins [lo, lo+1), ..., [hi, hi+1).
  static Bins unit(long lo, long hi);
  /// Unit bins from 1 up to the 99th percentile, then [p99+1, inf).
  static Bins permanence_default(std::span<const double> pooled);
  /// Width-25 bins from 0 covering the largest value.
  static Bins duration_default(std::span<const double> pooled);
};

/// Per-bin mean and standard deviation of replication histograms.
struct StatSummary {
  std::vector<double> bin_edges;
  std::vector<double> mean;
  std::vector<double> std;
  std::size_t replication_count = 0;
};

/// Accumulates per-replication bin counts. merge() is associative and, as
/// counts are integers summed in doubles, exact, so reduction order never
/// changes the result.
class HistogramAccumulator {
 public:
  explicit HistogramAccumulator(Bins bins);

  /// Returns the per-bin counts of this replication (they sum to values.size()).
  std::vector<std::size_t> add_replication(std::span<const double> values);
  void merge(const HistogramAccumulator& other);
  StatSummary summary() const;
  const Bins& bins() const noexcept { return bins_; }

 private:
  Bins bins_;
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
  std::size_t replications_ = 0;
};

/// Permanence of every split (non-leaf) component, one inner vector per run.
StatSummary permanence_histogram(std::span<const std::vector<ComponentRecord>> runs,
                                 std::optional<Bins> bins = std::nullopt);

/// Sequential durations grouped per network.
StatSummary duration_histogram(std::span<const std::vector<double>> durations_per_network,
                               std::optional<Bins> bins = std::nullopt);

/// Degree counts per graph over unit bins 0..max degree by default.
StatSummary degree_histogram(std::span<const Graph> graphs, std::optional<Bins> bins = std::nullopt);

/// Permanence values of split components in one run.
std::vector<double> permanence_values(std::span<const ComponentRecord> records);

/// CSV 'bin_low,bin_high,mean,std' preceded by '# key=value' metadata lines.
void write_stat_summary_csv(std::ostream& out, const StatSummary& s, const Metadata& meta = {});

}  // namespace netslice
