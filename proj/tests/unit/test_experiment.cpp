#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netslice/edge_list.hpp"
#include "netslice/errors.hpp"
#include "netslice/experiment.hpp"

using namespace netslice;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("netslice_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig small_config(const fs::path& dir) {
  ExperimentConfig c;
  c.n = 36;
  c.replications = 6;
  c.walks_per_network = 5;
  c.master_seed = 2024;
  c.output_dir = dir.string();
  c.dendrogram_exemplars = 1;
  return c;
}

}  // namespace

TEST_CASE("seed derivation separates models, replications and walks") {
  CHECK(network_seed(1, Model::ER, 0) != network_seed(1, Model::BA, 0));
  CHECK(network_seed(1, Model::ER, 0) != network_seed(1, Model::ER, 1));
  CHECK(walk_seed(1, Model::ER, 0, 0) != walk_seed(1, Model::ER, 0, 1));
  CHECK(parallel_seed(1, Model::ER, 0) != walk_seed(1, Model::ER, 0, 0));
  CHECK(network_seed(1, Model::GEO, 3) == network_seed(1, Model::GEO, 3));
}

TEST_CASE("config hash ignores execution-only fields") {
  ExperimentConfig a, b;
  b.workers = 8;
  b.output_dir = "/elsewhere";
  CHECK(a.hash() == b.hash());
  CHECK(a.hash().size() == 16);
  b.master_seed = 1;
  CHECK(a.hash() != b.hash());
  ExperimentConfig bad;
  bad.region_cut = 80;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = ExperimentConfig{};
  bad.models.clear();
  CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("campaign output is identical for any worker count") {
  const fs::path d1 = scratch("w1"), d4 = scratch("w4");
  ExperimentConfig c = small_config(d1);
  c.workers = 1;
  auto r1 = cmd_experiment(c);
  c.output_dir = d4.string();
  c.workers = 4;
  auto r4 = cmd_experiment(c);
  CHECK(r1.ok());
  CHECK(r1.summary_json == r4.summary_json);
  for (const auto& entry : fs::recursive_directory_iterator(d1)) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), d1);
    CAPTURE(rel.string());
    CHECK(slurp(entry.path()) == slurp(d4 / rel));
  }

  json s = json::parse(r1.summary_json);
  CHECK(s["master_seed"] == 2024);
  for (const char* m : {"er", "ba", "geo"}) {
    const auto& sc = s["models"][m]["scatter"];
    CHECK(sc["p_l"].get<double>() + sc["p_r"].get<double>() == doctest::Approx(1.0));
    CHECK(s["models"][m]["succeeded"] == 6);
    for (const char* f : {"degree_hist.csv", "duration_hist.csv", "permanence_hist.csv",
                          "scatter_points.csv", "walk_traces.csv", "dendrogram_r0_size.json",
                          "dendrogram_r0_time.json", "dendrogram_r0_size.nwk", "dendrogram_r0_time.nwk"}) {
      CHECK(fs::exists(d1 / m / f));
    }
    const std::string hist = slurp(d1 / m / "degree_hist.csv");
    CHECK(hist.find("# config_hash=" + c.hash()) == 0);
    CHECK(slurp(d1 / m / "dendrogram_r0_size.nwk").find("config_hash=" + c.hash()) != std::string::npos);
  }
  CHECK_FALSE(fs::exists(d1 / "failures.json"));
}

TEST_CASE("failed replications are recorded and the rest still aggregate") {
  const fs::path dir = scratch("fail");
  ExperimentConfig c = small_config(dir);
  c.models = {Model::ER, Model::BA};
  c.er_p = 0.0;  // every ER network is edgeless
  auto r = cmd_experiment(c);
  CHECK_FALSE(r.ok());
  CHECK(r.failures.size() == 6);
  json f = json::parse(slurp(dir / "failures.json"));
  CHECK(f["failures"].size() == 6);
  CHECK(f["failures"][0]["model"] == "er");
  json s = json::parse(r.summary_json);
  CHECK(s["models"]["er"]["succeeded"] == 0);
  CHECK(s["models"]["ba"]["succeeded"] == 6);
  CHECK(fs::exists(dir / "ba" / "scatter_points.csv"));
}

TEST_CASE("generate, walk and stats work from files") {
  const fs::path dir = scratch("files");
  ExperimentConfig c;
  c.models = {Model::GEO};
  c.n = 25;
  c.replications = 2;
  c.walks_per_network = 3;
  c.master_seed = 5;
  c.output_dir = dir.string();
  auto gen = cmd_generate(c);
  REQUIRE(gen.files.size() == 2);
  auto doc = load_edge_list(gen.files[0]);
  CHECK(doc.graph.node_count() == 25);
  CHECK(doc.layout);
  CHECK(json::parse(slurp(gen.manifest_path))["files"].size() == 2);

  c.mode = WalkMode::Parallel;
  auto par = cmd_walk(c, gen.files[0]);
  CHECK(par.runs.size() == 3);
  c.mode = WalkMode::Sequential;
  auto seq = cmd_walk(c, gen.files[0]);
  CHECK(seq.traces.size() == 3);

  StatsRequest req;
  req.n_total = 25;
  for (const auto& f : par.files)
    if (f.ends_with("_events.csv")) req.event_files.push_back(f);
  req.graph_files = gen.files;
  req.trace_files = {seq.files[1]};
  json stats = json::parse(cmd_stats(req));
  CHECK(stats["scatter"]["count"] == 3 * 24);
  CHECK(stats.contains("degree_histogram"));
  CHECK(stats.contains("duration"));
}

TEST_CASE("walk rejects malformed edge lists with the line number") {
  const fs::path dir = scratch("bad");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.edges") << "# nodes=3\n0 1\n1 q\n";
  ExperimentConfig c;
  c.output_dir = dir.string();
  try {
    cmd_walk(c, (dir / "bad.edges").string());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}
