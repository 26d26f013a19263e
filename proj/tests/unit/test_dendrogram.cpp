#include <doctest.h>

#include <json.hpp>

#include "netslice/dendrogram.hpp"
#include "netslice/errors.hpp"
#include "netslice/generators.hpp"
#include "netslice/walk.hpp"
#include "oracles.hpp"

using namespace netslice;
using nlohmann::json;

namespace {

void check_same_tree(const Dendrogram& a, const Dendrogram& b, bool with_ticks) {
  REQUIRE(a.size() == b.size());
  for (const auto& r : a.records()) {
    const auto& s = b.at(r.id);
    CHECK(s.size == r.size);
    CHECK(s.parent_id == r.parent_id);
    CHECK(s.children == r.children);
    CHECK(s.truncated == r.truncated);
    if (with_ticks) {
      CHECK(s.birth_tick == r.birth_tick);
      CHECK(s.death_tick == r.death_tick);
      CHECK(s.permanence == r.permanence);
    }
  }
  // drawing order depends on death ticks, which the size axis does not carry
  if (with_ticks) CHECK(a.leaf_order() == b.leaf_order());
}

}  // namespace

TEST_CASE("no events: a single truncated root") {
  Dendrogram d = build({}, 5);
  CHECK(d.size() == 1);
  CHECK(d.root().size == 5);
  CHECK(d.root().truncated);
  CHECK(d.leaf_order() == std::vector<ComponentId>{0});
  // the root keeps its R label even when the run never split it
  CHECK(export_newick(d, Axis::Size) == "R0_5:0;");
  CHECK(dendrogram_from_newick("R0_5:0;", Axis::Size).root().truncated);
}

TEST_CASE("single edge on the size axis") {
  std::vector<SplitEvent> ev{{1, 0, 2, 1, 1, 1, 2}};
  Dendrogram d = build(ev, 2);
  CHECK(export_newick(d, Axis::Size) == "(L1_1:1,L2_1:1)R0_2:0;");
  CHECK(export_newick(d, Axis::Time) == "(L1_1:0,L2_1:0)R0_2:1;");
}

TEST_CASE("triangle hierarchy and layout") {
  // (1,2) at tick 2, then the pair splits at tick 3
  std::vector<SplitEvent> ev{{2, 0, 3, 1, 2, 1, 2}, {3, 2, 2, 1, 1, 3, 4}};
  Dendrogram d = build(ev, 3);
  CHECK(permanence_of(d.at(0)) == 2);
  CHECK(permanence_of(d.at(2)) == 1);
  CHECK(d.ordered_children(0) == std::vector<ComponentId>{2, 1});
  CHECK(d.leaf_order() == std::vector<ComponentId>{3, 4, 1});

  json j = json::parse(export_size_axis(d));
  CHECK(j["meta"]["axis"] == "size");
  CHECK(j["leaf_order"] == json::array({3, 4, 1}));
  const auto& n2 = j["nodes"][2];
  CHECK(n2["x"] == 0.5);
  CHECK(n2["y"] == 2.0);
  CHECK(n2["y_top"] == 3.0);
  CHECK(n2["branch_length"] == 1.0);
  CHECK(j["nodes"][0]["x"] == 1.25);
  CHECK(j["nodes"][1]["branch_length"] == 2.0);

  json t = json::parse(export_time_axis(d));
  CHECK(t["meta"]["final_tick"] == 3);
  CHECK(t["nodes"][0]["y"] == 2.0);
  CHECK(t["nodes"][1]["y"] == 3.0);    // leaf: final tick
  CHECK(t["nodes"][1]["y_top"] == 2.0);
  CHECK(t["nodes"][2]["permanence"] == 1);
  CHECK(t["nodes"][1]["permanence"].is_null());
}

TEST_CASE("inconsistent histories are rejected") {
  std::vector<SplitEvent> bad_sum{{1, 0, 4, 1, 2, 1, 2}};
  CHECK_THROWS_AS(build(bad_sum, 4), StructuralError);
  std::vector<SplitEvent> unknown_parent{{1, 0, 3, 1, 2, 1, 2}, {2, 7, 2, 1, 1, 3, 4}};
  CHECK_THROWS_AS(build(unknown_parent, 3), StructuralError);
  std::vector<SplitEvent> twice{{1, 0, 3, 1, 2, 1, 2}, {2, 0, 3, 1, 2, 3, 4}};
  CHECK_THROWS_AS(build(twice, 3), StructuralError);
  std::vector<SplitEvent> wrong_root{{1, 0, 5, 2, 3, 1, 2}};
  CHECK_THROWS_AS(build(wrong_root, 4), StructuralError);
}

TEST_CASE("build from events reproduces the engine's records") {
  for (Model m : {Model::ER, Model::BA, Model::GEO}) {
    auto g = generate(GenSpec::defaults(m, 100, 6)).graph;
    auto r = run_parallel(g, 6);
    Dendrogram rebuilt = build(r.events, g.node_count(), r.dendrogram.meta());
    check_same_tree(r.dendrogram, rebuilt, true);
    CHECK(export_time_axis(rebuilt) == export_time_axis(r.dendrogram));
  }
}

TEST_CASE("newick round trip on both axes") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = generate(GenSpec::defaults(Model::ER, 80, seed)).graph;
    WalkOptions opt;
    if (seed % 3 == 0) opt.truncate_at_tick = 4;
    auto r = run_parallel(g, seed, opt);
    const Dendrogram& d = r.dendrogram;
    Dendrogram by_time = dendrogram_from_newick(export_newick(d, Axis::Time), Axis::Time);
    check_same_tree(d, by_time, true);
    CHECK(by_time.meta().final_tick == d.meta().final_tick);
    Dendrogram by_size = dendrogram_from_newick(export_newick(d, Axis::Size), Axis::Size);
    check_same_tree(d, by_size, false);
    CHECK(export_newick(by_time, Axis::Time) == export_newick(d, Axis::Time));
  }
}

TEST_CASE("truncated runs mark leaves with T") {
  auto g = generate(GenSpec::defaults(Model::BA, 100, 2)).graph;
  WalkOptions opt;
  opt.truncate_at_tick = 40;
  auto r = run_parallel(g, 2, opt);
  REQUIRE(r.events.size() > 0);
  const std::string nwk = export_newick(r.dendrogram, Axis::Size);
  CHECK(nwk.find('T') != std::string::npos);
  std::size_t leaf_sum = 0;
  for (const auto& rec : r.records)
    if (rec.is_leaf()) leaf_sum += rec.size;
  CHECK(leaf_sum == 100);
}

TEST_CASE("both axes share leaf order") {
  auto g = generate(GenSpec::defaults(Model::GEO, 100, 4)).graph;
  auto r = run_parallel(g, 4);
  json s = json::parse(export_size_axis(r.dendrogram));
  json t = json::parse(export_time_axis(r.dendrogram));
  CHECK(s["leaf_order"] == t["leaf_order"]);
  CHECK(s["leaf_order"].size() == 100);
}

TEST_CASE("malformed newick labels") {
  CHECK_THROWS_AS(dendrogram_from_newick("(a:1,b:1)c:0;", Axis::Size), ParseError);
  CHECK_THROWS_AS(dendrogram_from_newick("(L1_1:1,L1_1:1)R0_2:0;", Axis::Size), ParseError);
}
