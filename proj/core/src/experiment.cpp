#include "netslice/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "netslice/edge_list.hpp"
#include "netslice/errors.hpp"
#include "netslice/rng.hpp"

namespace netslice {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kParallelStream = 0x5041524cULL << 32;  // "PARL"
constexpr std::uint64_t kWalkCommandStream = 0x57414c4bULL;     // "WALK"

std::uint64_t model_code(Model m) {
  switch (m) {
    case Model::ER: return 1;
    case Model::BA: return 2;
    case Model::GEO: return 3;
  }
  return 0;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw UsageError("cannot create output directory '" + dir.string() + "'");
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw UsageError("write failed for '" + path.string() + "'");
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
  };
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    body();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(body);
}

json moments_json(const Moments& m) {
  return {{"mean", m.mean}, {"std", m.std}, {"count", m.count}};
}

json summary_json(const StatSummary& s) {
  json bins = json::array();
  for (std::size_t i = 0; i < s.mean.size(); ++i) {
    const double hi = s.bin_edges[i + 1];
    bins.push_back({{"bin_low", s.bin_edges[i]},
                    {"bin_high", std::isinf(hi) ? json("inf") : json(hi)},
                    {"mean", s.mean[i]},
                    {"std", s.std[i]}});
  }
  return {{"replications", s.replication_count}, {"bins", std::move(bins)}};
}

json scatter_json(const ScatterSummary& s, const RegionSpec& spec) {
  return {{"count", s.points.size()},
          {"defined", s.defined},
          {"n_total", spec.n_total},
          {"cut", spec.cut},
          {"mean_n", s.mean_n},
          {"mean_m", s.mean_m},
          {"std_n", s.std_n},
          {"std_m", s.std_m},
          {"count_l", s.count_l},
          {"count_r", s.count_r},
          {"p_l", s.p_l},
          {"p_r", s.p_r}};
}

std::string csv_text(const StatSummary& s, const Metadata& meta) {
  std::ostringstream out;
  write_stat_summary_csv(out, s, meta);
  return out.str();
}

std::string with_newick_header(const Metadata& meta, const std::string& tree) {
  std::string out = "[";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    if (i) out += ' ';
    out += meta[i].first + "=" + meta[i].second;
  }
  return out + "]\n" + tree + "\n";
}

struct Exemplar {
  std::string size_json, time_json, size_newick, time_newick;
};

struct ReplicationResult {
  bool ok = false;
  std::string error;
  std::uint64_t seed = 0;
  std::vector<std::string> warnings;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::vector<double> degrees;
  std::vector<WalkTraceRow> walks;
  std::vector<SplitEvent> events;
  std::vector<double> permanences;
  std::optional<Exemplar> exemplar;
};

Exemplar make_exemplar(const Dendrogram& d, const Metadata& meta) {
  return {export_size_axis(d), export_time_axis(d),
          with_newick_header(meta, export_newick(d, Axis::Size)),
          with_newick_header(meta, export_newick(d, Axis::Time))};
}

}  // namespace

void ExperimentConfig::validate() const {
  if (models.empty()) throw UsageError("at least one model is required");
  if (n < 3) throw UsageError("n must be at least 3");
  if (replications < 1) throw UsageError("replications must be at least 1");
  if (walks_per_network < 1) throw UsageError("walks per network must be at least 1");
  if (truncate_at_tick && *truncate_at_tick < 0) throw UsageError("truncation tick must be >= 0");
  RegionSpec{n, effective_cut()}.validate();
  for (Model m : models) gen_spec(m, 0).validate();
}

double ExperimentConfig::effective_cut() const {
  return region_cut.value_or(static_cast<double>(n) / 4.0);
}

GenSpec ExperimentConfig::gen_spec(Model model, std::uint64_t seed) const {
  GenSpec s = GenSpec::defaults(model, n, seed);
  if (er_p) s.er_p = *er_p;
  if (ba_attach) s.ba_attach = *ba_attach;
  if (geo_jitter) s.geo_jitter = *geo_jitter;
  return s;
}

std::string ExperimentConfig::canonical_json() const {
  json j;
  json ms = json::array();
  for (Model m : models) ms.push_back(std::string(to_string(m)));
  j["models"] = ms;
  j["n"] = n;
  j["replications"] = replications;
  j["walks_per_network"] = walks_per_network;
  j["mode"] = mode == WalkMode::Parallel ? "parallel" : "sequential";
  j["master_seed"] = master_seed;
  j["region_cut"] = effective_cut();
  j["truncate_at_tick"] = truncate_at_tick ? json(*truncate_at_tick) : json(nullptr);
  j["dendrogram_exemplars"] = dendrogram_exemplars;
  j["scatter_scope"] = scatter_scope == ScatterScope::AllLevels ? "all" : "root";
  json gen;
  for (Model m : models) {
    json g;
    for (const auto& [k, v] : gen_spec(m, 0).describe()) {
      if (k != "seed") g[k] = v;
    }
    gen[std::string(to_string(m))] = g;
  }
  j["generators"] = gen;
  return j.dump();
}

std::string ExperimentConfig::hash() const { return hex64(fnv1a(canonical_json())); }

std::uint64_t network_seed(std::uint64_t master, Model model, std::size_t replication) {
  return derive_seed(master, {model_code(model), replication});
}

std::uint64_t walk_seed(std::uint64_t master, Model model, std::size_t replication,
                        std::size_t walk) {
  return derive_seed(master, {model_code(model), replication, walk});
}

std::uint64_t parallel_seed(std::uint64_t master, Model model, std::size_t replication) {
  return derive_seed(master, {model_code(model), replication, kParallelStream});
}

GenerateReport cmd_generate(const ExperimentConfig& config) {
  config.validate();
  const fs::path dir(config.output_dir);
  ensure_directory(dir);
  const std::string hash = config.hash();

  GenerateReport report;
  json manifest;
  manifest["config_hash"] = hash;
  manifest["master_seed"] = config.master_seed;
  manifest["config"] = json::parse(config.canonical_json());
  json files = json::array();

  for (Model model : config.models) {
    for (std::size_t r = 0; r < config.replications; ++r) {
      const std::uint64_t seed = network_seed(config.master_seed, model, r);
      const GenSpec spec = config.gen_spec(model, seed);
      GeneratedGraph gen = generate(spec);

      EdgeListDocument doc;
      doc.graph = std::move(gen.graph);
      doc.layout = std::move(gen.layout);
      doc.metadata = spec.describe();
      doc.metadata.emplace_back("replication", std::to_string(r));
      doc.metadata.emplace_back("config_hash", hash);
      doc.metadata.emplace_back("master_seed", std::to_string(config.master_seed));

      const std::string name = std::string(to_string(model)) + "_" + std::to_string(seed) + ".edges";
      save_edge_list((dir / name).string(), doc);
      report.files.push_back((dir / name).string());
      for (auto& w : gen.warnings) report.warnings.push_back(name + ": " + w);

      json spec_json;
      for (const auto& [k, v] : spec.describe()) spec_json[k] = v;
      files.push_back({{"file", name},
                       {"model", std::string(to_string(model))},
                       {"replication", r},
                       {"seed", seed},
                       {"nodes", doc.graph.node_count()},
                       {"edges", doc.graph.edge_count()},
                       {"mean_degree", doc.graph.mean_degree()},
                       {"gen_spec", spec_json},
                       {"warnings", gen.warnings}});
    }
  }
  manifest["files"] = std::move(files);
  report.manifest_path = (dir / "manifest.json").string();
  write_file(report.manifest_path, manifest.dump(2) + "\n");
  return report;
}

WalkReport cmd_walk(const ExperimentConfig& config, const std::string& graph_path) {
  if (config.walks_per_network < 1) throw UsageError("walks per network must be at least 1");
  EdgeListDocument doc = load_edge_list(graph_path);
  const fs::path dir(config.output_dir);
  ensure_directory(dir);
  const std::string stem = fs::path(graph_path).stem().string();
  const std::string hash = config.hash();
  std::string model_name = "unknown";
  for (const auto& [k, v] : doc.metadata) {
    if (k == "model") model_name = v;
  }
  const Metadata meta{{"config_hash", hash},
                      {"master_seed", std::to_string(config.master_seed)},
                      {"graph", fs::path(graph_path).filename().string()}};
  WalkOptions options{config.truncate_at_tick};

  WalkReport report;
  if (config.mode == WalkMode::Sequential) {
    std::ostringstream events;
    for (const auto& [k, v] : meta) events << "# " << k << '=' << v << '\n';
    events << kSplitEventCsvHeader << '\n';
    for (std::size_t w = 0; w < config.walks_per_network; ++w) {
      const std::uint64_t seed = derive_seed(config.master_seed, {kWalkCommandStream, w});
      WalkTrace trace = run_sequential(doc.graph, seed, options);
      events << "# walk=" << w << " seed=" << seed << '\n';
      std::ostringstream rows;
      write_split_events_csv(rows, trace.events);
      const std::string body = rows.str();
      events << body.substr(body.find('\n') + 1);
      report.traces.push_back(std::move(trace));
    }
    const fs::path events_path = dir / (stem + "_sequential_events.csv");
    const fs::path traces_path = dir / (stem + "_sequential_traces.csv");
    write_file(events_path, events.str());
    std::ostringstream traces;
    write_walk_traces_csv(traces, report.traces, meta);
    write_file(traces_path, traces.str());
    report.files = {events_path.string(), traces_path.string()};
    return report;
  }

  for (std::size_t w = 0; w < config.walks_per_network; ++w) {
    const std::uint64_t seed = derive_seed(config.master_seed, {kWalkCommandStream, w});
    ParallelResult run = run_parallel(doc.graph, seed, options);
    DendrogramMeta dmeta = run.dendrogram.meta();
    dmeta.model = model_name;
    dmeta.extra = meta;
    Dendrogram d(std::vector<ComponentRecord>(run.records), dmeta);

    const std::string base = stem + "_parallel_r" + std::to_string(w);
    std::ostringstream events;
    write_split_events_csv(events, run.events, meta);
    const Exemplar ex = make_exemplar(d, meta);
    const std::vector<std::pair<std::string, std::string>> outputs{
        {base + "_events.csv", events.str()},
        {base + "_size.json", ex.size_json},
        {base + "_time.json", ex.time_json},
        {base + "_size.nwk", ex.size_newick},
        {base + "_time.nwk", ex.time_newick}};
    for (const auto& [name, content] : outputs) {
      write_file(dir / name, content);
      report.files.push_back((dir / name).string());
    }
    run.dendrogram = std::move(d);
    report.runs.push_back(std::move(run));
  }
  return report;
}

ExperimentReport cmd_experiment(const ExperimentConfig& config) {
  config.validate();
  const fs::path dir(config.output_dir);
  ensure_directory(dir);
  const std::string hash = config.hash();
  const RegionSpec region{config.n, config.effective_cut()};
  const WalkOptions options{config.truncate_at_tick};

  struct Task {
    Model model;
    std::size_t replication;
  };
  std::vector<Task> tasks;
  for (Model m : config.models) {
    for (std::size_t r = 0; r < config.replications; ++r) tasks.push_back({m, r});
  }
  std::vector<ReplicationResult> results(tasks.size());

  parallel_for(tasks.size(), config.workers, [&](std::size_t i) {
    const Task& t = tasks[i];
    ReplicationResult& out = results[i];
    out.seed = network_seed(config.master_seed, t.model, t.replication);
    try {
      GeneratedGraph gen = generate(config.gen_spec(t.model, out.seed));
      const Graph& g = gen.graph;
      out.warnings = std::move(gen.warnings);
      out.nodes = g.node_count();
      out.edges = g.edge_count();
      for (NodeId v = 0; v < g.node_count(); ++v) out.degrees.push_back(static_cast<double>(g.degree(v)));

      for (std::size_t w = 0; w < config.walks_per_network; ++w) {
        const auto seed = walk_seed(config.master_seed, t.model, t.replication, w);
        WalkTrace trace = run_sequential(g, seed, options);
        out.walks.push_back({trace.seed, trace.start_node, trace.duration, trace.events.size()});
      }

      const auto pseed = parallel_seed(config.master_seed, t.model, t.replication);
      ParallelResult run = run_parallel(g, pseed, options);
      if (!options.truncate_at_tick && run.total_steps != run.initial_edges) {
        throw LogicError("parallel run did not remove every edge");
      }
      out.events = std::move(run.events);
      out.permanences = permanence_values(run.records);
      if (t.replication < config.dendrogram_exemplars) {
        DendrogramMeta dmeta = run.dendrogram.meta();
        dmeta.model = std::string(to_string(t.model));
        dmeta.extra = {{"config_hash", hash},
                       {"master_seed", std::to_string(config.master_seed)},
                       {"replication", std::to_string(t.replication)}};
        Dendrogram d(std::move(run.records), dmeta);
        out.exemplar = make_exemplar(d, dmeta.extra);
      }
      out.ok = true;
    } catch (const std::exception& e) {
      out.ok = false;
      out.error = e.what();
    }
  });

  ExperimentReport report;
  json summary;
  summary["config_hash"] = hash;
  summary["master_seed"] = config.master_seed;
  summary["config"] = json::parse(config.canonical_json());
  json models_json;

  std::size_t cursor = 0;
  for (Model model : config.models) {
    const std::string name(to_string(model));
    const fs::path mdir = dir / name;
    ensure_directory(mdir);
    const Metadata meta{{"config_hash", hash},
                        {"master_seed", std::to_string(config.master_seed)},
                        {"model", name}};

    std::vector<const ReplicationResult*> ok;
    json warnings = json::array();
    for (std::size_t r = 0; r < config.replications; ++r, ++cursor) {
      const auto& res = results[cursor];
      for (const auto& w : res.warnings) warnings.push_back("replication " + std::to_string(r) + ": " + w);
      if (res.ok) {
        ok.push_back(&res);
      } else {
        report.failures.push_back({model, r, res.seed, res.error});
      }
    }

    json mj;
    mj["networks"] = config.replications;
    mj["succeeded"] = ok.size();
    mj["failed"] = config.replications - ok.size();
    mj["gen_spec"] = json::object();
    for (const auto& [k, v] : config.gen_spec(model, 0).describe()) {
      if (k != "seed") mj["gen_spec"][k] = v;
    }
    mj["warnings"] = warnings;

    std::vector<double> mean_degrees, nodes, durations, permanences;
    std::vector<std::vector<double>> durations_per_network, degrees_per_network;
    std::vector<SplitEvent> events;
    long max_degree = 0;
    std::vector<WalkTrace> trace_rows;
    for (const auto* res : ok) {
      nodes.push_back(static_cast<double>(res->nodes));
      mean_degrees.push_back(2.0 * static_cast<double>(res->edges) / static_cast<double>(res->nodes));
      for (double k : res->degrees) max_degree = std::max(max_degree, static_cast<long>(k));
      degrees_per_network.push_back(res->degrees);
      std::vector<double> d;
      for (const auto& w : res->walks) {
        d.push_back(static_cast<double>(w.duration));
        WalkTrace t;
        t.seed = w.seed;
        t.start_node = w.start_node;
        t.duration = w.duration;
        t.events.resize(w.num_splits);
        trace_rows.push_back(std::move(t));
      }
      durations.insert(durations.end(), d.begin(), d.end());
      durations_per_network.push_back(std::move(d));
      events.insert(events.end(), res->events.begin(), res->events.end());
      permanences.insert(permanences.end(), res->permanences.begin(), res->permanences.end());
    }

    mj["nodes"] = moments_json(describe(nodes));
    mj["mean_degree"] = moments_json(describe(mean_degrees));
    mj["duration"] = moments_json(describe(durations));
    mj["permanence"] = moments_json(describe(permanences));
    const ScatterSummary scatter = scatter_summary(events, region, config.scatter_scope);
    mj["scatter"] = scatter_json(scatter, region);

    if (!ok.empty()) {
      HistogramAccumulator degree_acc(Bins::unit(0, max_degree));
      for (const auto& d : degrees_per_network) degree_acc.add_replication(d);
      const StatSummary degree_hist = degree_acc.summary();
      const StatSummary duration_hist = duration_histogram(durations_per_network);
      HistogramAccumulator perm_acc(Bins::permanence_default(permanences));
      for (const auto* res : ok) perm_acc.add_replication(res->permanences);
      const StatSummary perm_hist = perm_acc.summary();

      mj["degree_histogram"] = summary_json(degree_hist);
      mj["duration_histogram"] = summary_json(duration_hist);
      mj["permanence_histogram"] = summary_json(perm_hist);

      std::vector<std::pair<std::string, std::string>> outputs{
          {"degree_hist.csv", csv_text(degree_hist, meta)},
          {"duration_hist.csv", csv_text(duration_hist, meta)},
          {"permanence_hist.csv", csv_text(perm_hist, meta)}};
      {
        std::ostringstream pts;
        for (const auto& [k, v] : meta) pts << "# " << k << '=' << v << '\n';
        pts << "# cut=" << region.cut << "\n# n_total=" << region.n_total << '\n';
        pts << "n,m\n";
        for (auto [n, m] : scatter.points) pts << n << ',' << m << '\n';
        outputs.emplace_back("scatter_points.csv", pts.str());
      }
      {
        std::ostringstream tr;
        write_walk_traces_csv(tr, trace_rows, meta);
        outputs.emplace_back("walk_traces.csv", tr.str());
      }
      for (std::size_t r = 0; r < config.replications; ++r) {
        const auto& res = results[cursor - config.replications + r];
        if (!res.ok || !res.exemplar) continue;
        const std::string base = "dendrogram_r" + std::to_string(r);
        outputs.emplace_back(base + "_size.json", res.exemplar->size_json);
        outputs.emplace_back(base + "_time.json", res.exemplar->time_json);
        outputs.emplace_back(base + "_size.nwk", res.exemplar->size_newick);
        outputs.emplace_back(base + "_time.nwk", res.exemplar->time_newick);
      }
      for (const auto& [file, content] : outputs) {
        write_file(mdir / file, content);
        report.files.push_back((mdir / file).string());
      }
    }
    models_json[name] = std::move(mj);
  }
  summary["models"] = std::move(models_json);
  summary["failures"] = report.failures.size();

  report.summary_json = summary.dump(2) + "\n";
  report.summary_path = (dir / "summary.json").string();
  write_file(report.summary_path, report.summary_json);

  const fs::path failures_path = dir / "failures.json";
  if (!report.failures.empty()) {
    json fj = json::array();
    for (const auto& f : report.failures) {
      fj.push_back({{"model", std::string(to_string(f.model))},
                    {"replication", f.replication},
                    {"seed", f.seed},
                    {"error", f.error}});
    }
    json doc{{"config_hash", hash}, {"master_seed", config.master_seed}, {"failures", fj}};
    write_file(failures_path, doc.dump(2) + "\n");
    report.files.push_back(failures_path.string());
  } else {
    std::error_code ec;
    fs::remove(failures_path, ec);
  }
  return report;
}

std::string cmd_stats(const StatsRequest& request) {
  json out;
  const RegionSpec region{request.n_total,
                          request.cut.value_or(static_cast<double>(request.n_total) / 4.0)};
  if (!request.event_files.empty()) {
    std::vector<SplitEvent> events;
    for (const auto& path : request.event_files) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw UsageError("cannot open '" + path + "'");
      auto e = read_split_events_csv(in);
      events.insert(events.end(), e.begin(), e.end());
    }
    out["scatter"] = scatter_json(scatter_summary(events, region, request.scope), region);
  }
  if (!request.trace_files.empty()) {
    std::vector<std::vector<double>> per_network;
    std::vector<double> pooled;
    for (const auto& path : request.trace_files) {
      std::ifstream in(path, std::ios::binary);
      if (!in) throw UsageError("cannot open '" + path + "'");
      std::vector<double> d;
      for (const auto& row : read_walk_traces_csv(in)) d.push_back(static_cast<double>(row.duration));
      pooled.insert(pooled.end(), d.begin(), d.end());
      per_network.push_back(std::move(d));
    }
    out["duration"] = moments_json(describe(pooled));
    out["duration_histogram"] = summary_json(duration_histogram(per_network));
  }
  if (!request.graph_files.empty()) {
    std::vector<Graph> graphs;
    std::vector<double> mean_degrees;
    for (const auto& path : request.graph_files) {
      graphs.push_back(load_edge_list(path).graph);
      mean_degrees.push_back(graphs.back().mean_degree());
    }
    out["mean_degree"] = moments_json(describe(mean_degrees));
    out["degree_histogram"] = summary_json(degree_histogram(graphs));
  }
  if (out.is_null()) throw UsageError("stats needs --events, --traces or --graphs input");
  return out.dump(2) + "\n";
}

}  // namespace netslice
