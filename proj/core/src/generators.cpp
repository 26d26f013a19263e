#include "netslice/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "netslice/delaunay.hpp"
#include "netslice/errors.hpp"
#include "netslice/rng.hpp"

namespace netslice {
namespace {

constexpr int kMaxJitterAttempts = 64;

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool has_duplicate(std::vector<Point2D> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point2D& a, const Point2D& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  return std::adjacent_find(pts.begin(), pts.end()) != pts.end();
}

std::vector<Point2D> jittered_lattice(const GenSpec& spec, Rng& rng) {
  std::vector<Point2D> pts;
  pts.reserve(spec.geo_rows * spec.geo_cols);
  for (std::size_t r = 0; r < spec.geo_rows; ++r) {
    for (std::size_t c = 0; c < spec.geo_cols; ++c) {
      Point2D p{static_cast<double>(c), static_cast<double>(r)};
      if (spec.geo_jitter > 0.0) {
        p.x += rng.uniform(-spec.geo_jitter, spec.geo_jitter);
        p.y += rng.uniform(-spec.geo_jitter, spec.geo_jitter);
      }
      pts.push_back(p);
    }
  }
  return pts;
}

}  // namespace

std::string_view to_string(Model m) {
  switch (m) {
    case Model::ER: return "er";
    case Model::BA: return "ba";
    case Model::GEO: return "geo";
  }
  return "?";
}

Model parse_model(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "er") return Model::ER;
  if (lower == "ba") return Model::BA;
  if (lower == "geo") return Model::GEO;
  throw UsageError("unknown model '" + std::string(name) + "' (expected er, ba or geo)");
}

GenSpec GenSpec::defaults(Model model, std::size_t n, std::uint64_t seed) {
  GenSpec s;
  s.model = model;
  s.n_target = n;
  s.seed = seed;
  s.er_p = n > 1 ? std::min(1.0, 5.7 / static_cast<double>(n - 1)) : 0.0;
  s.ba_attach = 3;
  std::size_t rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (rows > 1 && n % rows != 0) --rows;
  s.geo_rows = std::max<std::size_t>(rows, 1);
  s.geo_cols = n / s.geo_rows;
  s.geo_jitter = 0.25;
  return s;
}

void GenSpec::validate() const {
  if (n_target == 0) throw UsageError("n must be positive");
  switch (model) {
    case Model::ER:
      // The closed interval is accepted so the p = 0 and p = 1 limits can be exercised.
      if (!(er_p >= 0.0 && er_p <= 1.0)) throw UsageError("er_p must lie in [0, 1]");
      break;
    case Model::BA:
      if (ba_attach < 1) throw UsageError("ba_attach must be at least 1");
      // m = n - 1 leaves only the seed clique and no attachment step at all.
      if (ba_attach + 1 >= n_target) throw UsageError("ba_attach must be smaller than n - 1");
      break;
    case Model::GEO:
      if (geo_rows == 0 || geo_cols == 0) throw UsageError("geo lattice must be non-empty");
      if (geo_rows * geo_cols != n_target) throw UsageError("geo_rows * geo_cols must equal n");
      if (n_target < 3) throw UsageError("geo lattice needs at least three nodes");
      if (!(geo_jitter >= 0.0) || !std::isfinite(geo_jitter)) {
        throw UsageError("geo_jitter must be a finite non-negative value");
      }
      break;
  }
}

std::vector<std::pair<std::string, std::string>> GenSpec::describe() const {
  std::vector<std::pair<std::string, std::string>> out{
      {"model", std::string(to_string(model))},
      {"n_target", std::to_string(n_target)},
      {"seed", std::to_string(seed)},
  };
  switch (model) {
    case Model::ER: out.emplace_back("er_p", format_real(er_p)); break;
    case Model::BA: out.emplace_back("ba_attach", std::to_string(ba_attach)); break;
    case Model::GEO:
      out.emplace_back("geo_rows", std::to_string(geo_rows));
      out.emplace_back("geo_cols", std::to_string(geo_cols));
      out.emplace_back("geo_jitter", format_real(geo_jitter));
      break;
  }
  return out;
}

GeneratedGraph gen_er(const GenSpec& spec) {
  if (spec.model != Model::ER) throw UsageError("gen_er: spec.model is not ER");
  spec.validate();
  Rng rng(spec.seed);
  Graph full(spec.n_target);
  for (NodeId i = 0; i < spec.n_target; ++i) {
    for (NodeId j = i + 1; j < spec.n_target; ++j) {
      if (rng.uniform01() < spec.er_p) full.add_edge(i, j);
    }
  }
  NodeSet keep = largest_component(full);
  if (keep.size() < 2) {
    throw GenerationError("ER largest component has fewer than two nodes");
  }
  return {induced_subgraph(full, keep), std::nullopt, {}};
}

GeneratedGraph gen_ba(const GenSpec& spec) {
  if (spec.model != Model::BA) throw UsageError("gen_ba: spec.model is not BA");
  spec.validate();
  const std::size_t m = spec.ba_attach;
  Rng rng(spec.seed);
  Graph g(spec.n_target);
  for (NodeId i = 0; i <= m; ++i) {
    for (NodeId j = i + 1; j <= m; ++j) g.add_edge(i, j);
  }

  std::vector<NodeId> targets;
  std::vector<char> chosen(spec.n_target, 0);
  for (NodeId t = static_cast<NodeId>(m + 1); t < spec.n_target; ++t) {
    std::uint64_t total = 2 * g.edge_count();
    targets.clear();
    for (std::size_t k = 0; k < m; ++k) {
      std::uint64_t r = rng.uniform_index(total);
      NodeId pick = 0;
      for (NodeId v = 0; v < t; ++v) {
        if (chosen[v]) continue;
        const std::uint64_t w = g.degree(v);
        if (r < w) {
          pick = v;
          break;
        }
        r -= w;
      }
      chosen[pick] = 1;
      total -= g.degree(pick);
      targets.push_back(pick);
    }
    for (NodeId v : targets) {
      g.add_edge(t, v);
      chosen[v] = 0;
    }
  }
  return {std::move(g), std::nullopt, {}};
}

GeneratedGraph gen_geo(const GenSpec& spec) {
  if (spec.model != Model::GEO) throw UsageError("gen_geo: spec.model is not GEO");
  spec.validate();
  GeneratedGraph out;
  Rng rng(spec.seed);
  std::vector<Point2D> pts = jittered_lattice(spec, rng);
  for (int attempt = 1; has_duplicate(pts); ++attempt) {
    if (attempt > kMaxJitterAttempts) {
      throw GenerationError("GEO jitter kept producing duplicate points");
    }
    out.warnings.push_back("duplicate points after jitter; regenerated with substream " +
                           std::to_string(attempt));
    Rng retry(derive_seed(spec.seed, {static_cast<std::uint64_t>(attempt)}));
    pts = jittered_lattice(spec, retry);
  }
  auto edges = delaunay(pts);
  out.graph = Graph(pts.size(), edges);
  out.layout = std::move(pts);
  return out;
}

GeneratedGraph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::ER: return gen_er(spec);
    case Model::BA: return gen_ba(spec);
    case Model::GEO: return gen_geo(spec);
  }
  throw UsageError("unknown model");
}

}  // namespace netslice
