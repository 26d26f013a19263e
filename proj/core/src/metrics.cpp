#include "netslice/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "netslice/errors.hpp"

namespace netslice {

RegionSpec RegionSpec::with_default_cut(std::size_t n_total) {
  return {n_total, static_cast<double>(n_total) / 4.0};
}

void RegionSpec::validate() const {
  if (!(cut >= 1.0 && cut <= static_cast<double>(n_total) / 2.0)) {
    throw UsageError("region cut must satisfy 1 <= cut <= n_total / 2");
  }
}

Region classify_region(std::size_t n, std::size_t m, const RegionSpec& spec) {
  if (n < 1 || n > m || n + m > spec.n_total) {
    throw DataError("split (" + std::to_string(n) + ", " + std::to_string(m) +
                    ") lies outside the triangle for N = " + std::to_string(spec.n_total));
  }
  return static_cast<double>(n) >= spec.cut ? Region::R : Region::L;
}

ScatterSummary scatter_summary(std::span<const SplitEvent> events, const RegionSpec& spec,
                               ScatterScope scope) {
  spec.validate();
  ScatterSummary s;
  for (const auto& e : events) {
    if (scope == ScatterScope::RootOnly && e.parent_id != 0) continue;
    if (classify_region(e.n, e.m, spec) == Region::R) {
      ++s.count_r;
    } else {
      ++s.count_l;
    }
    s.points.emplace_back(e.n, e.m);
  }
  if (s.points.empty()) {
    s.mean_n = s.mean_m = s.std_n = s.std_m = std::numeric_limits<double>::quiet_NaN();
    s.p_l = s.p_r = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  std::vector<double> ns, ms;
  ns.reserve(s.points.size());
  ms.reserve(s.points.size());
  for (auto [n, m] : s.points) {
    ns.push_back(static_cast<double>(n));
    ms.push_back(static_cast<double>(m));
  }
  const Moments mn = describe(ns);
  const Moments mm = describe(ms);
  s.defined = true;
  s.mean_n = mn.mean;
  s.std_n = mn.std;
  s.mean_m = mm.mean;
  s.std_m = mm.std;
  const auto total = static_cast<double>(s.points.size());
  s.p_r = static_cast<double>(s.count_r) / total;
  s.p_l = static_cast<double>(s.count_l) / total;
  return s;
}

Moments describe(std::span<const double> values) {
  Moments m;
  m.count = values.size();
  if (values.empty()) {
    m.mean = m.std = std::numeric_limits<double>::quiet_NaN();
    return m;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - m.mean) * (v - m.mean);
  m.std = std::sqrt(sq / static_cast<double>(values.size()));
  return m;
}

std::size_t Bins::index_of(double value) const {
  if (count() == 0) throw UsageError("histogram has no bins");
  auto it = std::upper_bound(edges.begin(), edges.end(), value);
  if (it == edges.begin()) return 0;
  const auto idx = static_cast<std::size_t>(it - edges.begin()) - 1;
  return std::min(idx, count() - 1);
}

Bins Bins::uniform(double lo, double width, std::size_t count) {
  if (count == 0 || !(width > 0.0)) throw UsageError("bins need a positive width and count");
  Bins b;
  for (std::size_t i = 0; i <= count; ++i) b.edges.push_back(lo + width * static_cast<double>(i));
  return b;
}

Bins Bins::unit(long lo, long hi) {
  if (hi < lo) throw UsageError("unit bins need lo <= hi");
  Bins b;
  for (long v = lo; v <= hi + 1; ++v) b.edges.push_back(static_cast<double>(v));
  return b;
}

Bins Bins::permanence_default(std::span<const double> pooled) {
  long p99 = 1;
  if (!pooled.empty()) {
    std::vector<double> sorted(pooled.begin(), pooled.end());
    std::sort(sorted.begin(), sorted.end());
    // Nearest-rank percentile.
    const auto rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(sorted.size())));
    p99 = std::max(1L, static_cast<long>(sorted[std::max<std::size_t>(rank, 1) - 1]));
  }
  Bins b = unit(1, p99);
  b.edges.push_back(std::numeric_limits<double>::infinity());
  return b;
}

Bins Bins::duration_default(std::span<const double> pooled) {
  double hi = 0.0;
  for (double v : pooled) hi = std::max(hi, v);
  const auto count = static_cast<std::size_t>(std::floor(hi / 25.0)) + 1;
  return uniform(0.0, 25.0, count);
}

HistogramAccumulator::HistogramAccumulator(Bins bins)
    : bins_(std::move(bins)), sum_(bins_.count(), 0.0), sum_sq_(bins_.count(), 0.0) {
  if (bins_.count() == 0) throw UsageError("histogram has no bins");
  if (!std::is_sorted(bins_.edges.begin(), bins_.edges.end()) ||
      std::adjacent_find(bins_.edges.begin(), bins_.edges.end()) != bins_.edges.end()) {
    throw UsageError("bin edges must be strictly increasing");
  }
}

std::vector<std::size_t> HistogramAccumulator::add_replication(std::span<const double> values) {
  std::vector<std::size_t> counts(bins_.count(), 0);
  for (double v : values) ++counts[bins_.index_of(v)];
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto c = static_cast<double>(counts[i]);
    sum_[i] += c;
    sum_sq_[i] += c * c;
  }
  ++replications_;
  return counts;
}

void HistogramAccumulator::merge(const HistogramAccumulator& other) {
  if (other.bins_.edges != bins_.edges) throw UsageError("cannot merge histograms with different bins");
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    sum_[i] += other.sum_[i];
    sum_sq_[i] += other.sum_sq_[i];
  }
  replications_ += other.replications_;
}

StatSummary HistogramAccumulator::summary() const {
  StatSummary s;
  s.bin_edges = bins_.edges;
  s.replication_count = replications_;
  s.mean.assign(sum_.size(), 0.0);
  s.std.assign(sum_.size(), 0.0);
  if (replications_ == 0) return s;
  const auto r = static_cast<double>(replications_);
  for (std::size_t i = 0; i < sum_.size(); ++i) {
    const double mean = sum_[i] / r;
    s.mean[i] = mean;
    s.std[i] = std::sqrt(std::max(0.0, sum_sq_[i] / r - mean * mean));
  }
  return s;
}

std::vector<double> permanence_values(std::span<const ComponentRecord> records) {
  std::vector<double> out;
  for (const auto& r : records) {
    if (!r.is_leaf()) out.push_back(static_cast<double>(permanence_of(r)));
  }
  return out;
}

StatSummary permanence_histogram(std::span<const std::vector<ComponentRecord>> runs,
                                 std::optional<Bins> bins) {
  std::vector<std::vector<double>> per_run;
  std::vector<double> pooled;
  for (const auto& run : runs) {
    per_run.push_back(permanence_values(run));
    pooled.insert(pooled.end(), per_run.back().begin(), per_run.back().end());
  }
  HistogramAccumulator acc(bins ? *bins : Bins::permanence_default(pooled));
  for (const auto& values : per_run) acc.add_replication(values);
  return acc.summary();
}

StatSummary duration_histogram(std::span<const std::vector<double>> durations_per_network,
                               std::optional<Bins> bins) {
  std::vector<double> pooled;
  for (const auto& d : durations_per_network) pooled.insert(pooled.end(), d.begin(), d.end());
  HistogramAccumulator acc(bins ? *bins : Bins::duration_default(pooled));
  for (const auto& d : durations_per_network) acc.add_replication(d);
  return acc.summary();
}

StatSummary degree_histogram(std::span<const Graph> graphs, std::optional<Bins> bins) {
  std::vector<std::vector<double>> per_graph;
  long max_degree = 0;
  for (const auto& g : graphs) {
    std::vector<double> degrees;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      degrees.push_back(static_cast<double>(g.degree(v)));
      max_degree = std::max(max_degree, static_cast<long>(g.degree(v)));
    }
    per_graph.push_back(std::move(degrees));
  }
  HistogramAccumulator acc(bins ? *bins : Bins::unit(0, max_degree));
  for (const auto& d : per_graph) acc.add_replication(d);
  return acc.summary();
}

namespace {

std::string real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_stat_summary_csv(std::ostream& out, const StatSummary& s, const Metadata& meta) {
  for (const auto& [k, v] : meta) out << "# " << k << '=' << v << '\n';
  out << "# replications=" << s.replication_count << '\n';
  out << "bin_low,bin_high,mean,std\n";
  for (std::size_t i = 0; i < s.mean.size(); ++i) {
    out << real(s.bin_edges[i]) << ',' << real(s.bin_edges[i + 1]) << ',' << real(s.mean[i]) << ','
        << real(s.std[i]) << '\n';
  }
}

}  // namespace netslice
