#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netslice/generators.hpp"
#include "netslice/metrics.hpp"
#include "netslice/walk.hpp"

namespace netslice {

struct ExperimentConfig {
  std::vector<Model> models{Model::ER, Model::BA, Model::GEO};
  std::size_t n = 100;
  std::size_t replications = 50;       // networks per model
  std::size_t walks_per_network = 200;  // sequential walks (or parallel runs for `walk`)
  WalkMode mode = WalkMode::Parallel;
  std::uint64_t master_seed = 0;
  std::optional<double> region_cut;  // defaults to n / 4
  std::string output_dir = ".";
  std::optional<Tick> truncate_at_tick;
  std::size_t dendrogram_exemplars = 3;
  ScatterScope scatter_scope = ScatterScope::AllLevels;

  // Generator overrides; unset means GenSpec::defaults.
  std::optional<double> er_p;
  std::optional<std::size_t> ba_attach;
  std::optional<double> geo_jitter;

  // Execution only: never part of the config hash or of any output.
  std::size_t workers = 1;

  void validate() const;
  double effective_cut() const;
  GenSpec gen_spec(Model model, std::uint64_t seed) const;

  /// Canonical JSON of every field that influences results.
  std::string canonical_json() const;
  /// FNV-1a 64 of canonical_json(), as 16 hex digits.
  std::string hash() const;
};

/// Seed of network r of `model`.
std::uint64_t network_seed(std::uint64_t master, Model model, std::size_t replication);
/// Seed of sequential walk w on network r of `model`.
std::uint64_t walk_seed(std::uint64_t master, Model model, std::size_t replication,
                        std::size_t walk);
/// Seed of the parallel dismantling of network r of `model`.
std::uint64_t parallel_seed(std::uint64_t master, Model model, std::size_t replication);

struct GenerateReport {
  std::vector<std::string> files;
  std::string manifest_path;
  std::vector<std::string> warnings;
};

/// Writes <model>_<seed>.edges for every model and replication plus
/// manifest.json. Throws UsageError if the directory cannot be written.
GenerateReport cmd_generate(const ExperimentConfig& config);

struct WalkReport {
  std::vector<std::string> files;
  std::vector<WalkTrace> traces;           // sequential
  std::vector<ParallelResult> runs;        // parallel
};

/// Runs config.mode walks_per_network times on one edge-list file. Outputs
/// are prefixed with the file stem. Throws ParseError on malformed input.
WalkReport cmd_walk(const ExperimentConfig& config, const std::string& graph_path);

struct ReplicationFailure {
  Model model;
  std::size_t replication = 0;
  std::uint64_t seed = 0;
  std::string error;
};

struct ExperimentReport {
  std::string summary_json;
  std::string summary_path;
  std::vector<std::string> files;
  std::vector<ReplicationFailure> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Full campaign: per model, generate `replications` networks, run
/// `walks_per_network` sequential walks and one parallel dismantling on
/// each, aggregate, and write every result family plus summary.json
/// (and failures.json when a replication failed). Outputs depend only on
/// the config, never on `workers`.
ExperimentReport cmd_experiment(const ExperimentConfig& config);

struct StatsRequest {
  std::vector<std::string> event_files;
  std::vector<std::string> trace_files;  // one file per network
  std::vector<std::string> graph_files;
  std::size_t n_total = 100;
  std::optional<double> cut;
  ScatterScope scope = ScatterScope::AllLevels;
};

/// Recomputes summaries from files written by the other commands and
/// returns them as one JSON document.
std::string cmd_stats(const StatsRequest& request);

}  // namespace netslice
