// netslice: generate networks, dismantle them with edge-deleting random walks
// and aggregate the resulting statistics.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "netslice/errors.hpp"
#include "netslice/experiment.hpp"

namespace {

using netslice::ExperimentConfig;

std::vector<netslice::Model> parse_models(const std::string& spec) {
  if (spec == "all") return {netslice::Model::ER, netslice::Model::BA, netslice::Model::GEO};
  return {netslice::parse_model(spec)};
}

struct CommonFlags {
  std::string model = "all";
  std::size_t n = 100;
  std::size_t replications = 0;
  std::size_t walks = 0;
  std::uint64_t seed = 0;
  std::string out = ".";
  std::optional<double> cut;
  std::optional<netslice::Tick> truncate;
  std::optional<double> er_p;
  std::optional<std::size_t> ba_attach;
  std::optional<double> geo_jitter;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t exemplars = 3;
  std::string scope = "all";
  std::string mode = "parallel";
};

void add_generator_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--er-p", f.er_p, "ER connection probability (default 5.7/(n-1))");
  cmd->add_option("--ba-attach", f.ba_attach, "BA edges per new node (default 3)");
  cmd->add_option("--geo-jitter", f.geo_jitter, "GEO jitter in lattice units (default 0.25)");
}

void add_seed_flag(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "Master seed")->envname("NETSLICE_SEED");
}

ExperimentConfig to_config(const CommonFlags& f) {
  ExperimentConfig c;
  c.models = parse_models(f.model);
  c.n = f.n;
  c.replications = f.replications;
  c.walks_per_network = f.walks;
  c.master_seed = f.seed;
  c.output_dir = f.out;
  c.region_cut = f.cut;
  c.truncate_at_tick = f.truncate;
  c.er_p = f.er_p;
  c.ba_attach = f.ba_attach;
  c.geo_jitter = f.geo_jitter;
  c.workers = f.workers;
  c.dendrogram_exemplars = f.exemplars;
  c.scatter_scope =
      f.scope == "root" ? netslice::ScatterScope::RootOnly : netslice::ScatterScope::AllLevels;
  c.mode = f.mode == "sequential" ? netslice::WalkMode::Sequential : netslice::WalkMode::Parallel;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netslice - network dismantling by edge-deleting random walks"};
  app.set_config("--config", "", "TOML key = value file; command-line flags take precedence");
  app.require_subcommand(1);

  CommonFlags gen_flags;
  gen_flags.replications = 1;
  gen_flags.walks = 1;
  auto* generate = app.add_subcommand("generate", "Write ER/BA/GEO networks as edge lists");
  generate->add_option("--model", gen_flags.model, "er | ba | geo | all")
      ->check(CLI::IsMember({"er", "ba", "geo", "all"}));
  generate->add_option("--n", gen_flags.n, "Nodes per network");
  generate->add_option("--replications", gen_flags.replications, "Networks per model");
  generate->add_option("--out", gen_flags.out, "Output directory");
  add_seed_flag(generate, gen_flags);
  add_generator_flags(generate, gen_flags);

  CommonFlags walk_flags;
  walk_flags.walks = 1;
  std::string graph_path;
  auto* walk = app.add_subcommand("walk", "Dismantle one edge-list graph");
  walk->add_option("graph", graph_path, "Edge-list file")->required();
  walk->add_option("--mode", walk_flags.mode, "sequential | parallel")
      ->check(CLI::IsMember({"sequential", "parallel"}));
  walk->add_option("--walks", walk_flags.walks, "Number of walks (or parallel runs)");
  walk->add_option("--out", walk_flags.out, "Output directory");
  walk->add_option("--truncate-at-tick", walk_flags.truncate, "Stop after this tick");
  add_seed_flag(walk, walk_flags);

  CommonFlags exp_flags;
  exp_flags.replications = 50;
  exp_flags.walks = 200;
  auto* experiment = app.add_subcommand("experiment", "Run a full campaign and aggregate it");
  experiment->add_option("--model", exp_flags.model, "er | ba | geo | all")
      ->check(CLI::IsMember({"er", "ba", "geo", "all"}));
  experiment->add_option("--n", exp_flags.n, "Nodes per network");
  experiment->add_option("--replications", exp_flags.replications, "Networks per model");
  experiment->add_option("--walks", exp_flags.walks, "Sequential walks per network");
  experiment->add_option("--cut", exp_flags.cut, "Region boundary on n (default n/4)");
  experiment->add_option("--scope", exp_flags.scope, "Scatter events: all | root")
      ->check(CLI::IsMember({"all", "root"}));
  experiment->add_option("--exemplars", exp_flags.exemplars, "Dendrograms exported per model");
  experiment->add_option("--truncate-at-tick", exp_flags.truncate, "Stop runs after this tick");
  experiment->add_option("--workers", exp_flags.workers, "Worker threads");
  experiment->add_option("--out", exp_flags.out, "Output directory");
  add_seed_flag(experiment, exp_flags);
  add_generator_flags(experiment, exp_flags);

  netslice::StatsRequest stats_req;
  std::optional<double> stats_cut;
  std::string stats_scope = "all";
  std::string stats_out;
  auto* stats = app.add_subcommand("stats", "Summarise event, trace or graph files");
  stats->add_option("--events", stats_req.event_files, "Split-event CSV files");
  stats->add_option("--traces", stats_req.trace_files, "Walk-trace CSV files, one per network");
  stats->add_option("--graphs", stats_req.graph_files, "Edge-list files");
  stats->add_option("--n", stats_req.n_total, "Size of the initial structure");
  stats->add_option("--cut", stats_cut, "Region boundary on n (default n/4)");
  stats->add_option("--scope", stats_scope, "all | root")->check(CLI::IsMember({"all", "root"}));
  stats->add_option("--out", stats_out, "Write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; every other parse failure is a usage error.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*generate) {
      auto report = netslice::cmd_generate(to_config(gen_flags));
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
      for (const auto& f : report.files) std::cout << f << '\n';
      std::cout << report.manifest_path << '\n';
      return 0;
    }
    if (*walk) {
      auto report = netslice::cmd_walk(to_config(walk_flags), graph_path);
      for (const auto& f : report.files) std::cout << f << '\n';
      return 0;
    }
    if (*experiment) {
      auto report = netslice::cmd_experiment(to_config(exp_flags));
      std::cout << report.summary_path << '\n';
      for (const auto& f : report.failures) {
        std::cerr << "failed: " << netslice::to_string(f.model) << " replication "
                  << f.replication << ": " << f.error << '\n';
      }
      return report.ok() ? 0 : 1;
    }
    if (*stats) {
      stats_req.cut = stats_cut;
      stats_req.scope =
          stats_scope == "root" ? netslice::ScatterScope::RootOnly : netslice::ScatterScope::AllLevels;
      const std::string json = netslice::cmd_stats(stats_req);
      if (stats_out.empty()) {
        std::cout << json;
      } else {
        std::ofstream(stats_out) << json;
      }
      return 0;
    }
  } catch (const netslice::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const netslice::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
