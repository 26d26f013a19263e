#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using netslice::Edge;
using netslice::Graph;
using netslice::NodeId;
using netslice::Point2D;
using Rational = boost::multiprecision::cpp_rational;

AdjMatrix to_matrix(const Graph& g) {
  const std::size_t n = g.node_count();
  AdjMatrix adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

std::vector<std::vector<bool>> reachability(const AdjMatrix& adj, const std::vector<bool>& within) {
  const std::size_t n = adj.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    if (!within[i]) continue;
    r[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (within[j] && adj[i][j]) r[i][j] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

// ---------------------------------------------------------------------------
// Delaunay

namespace {

using Mat4 = std::array<std::array<Rational, 4>, 4>;

Rational det3(const Rational m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Laplace expansion along the first row.
Rational det4(const Mat4& m) {
  Rational total = 0;
  for (int c = 0; c < 4; ++c) {
    Rational minor[3][3];
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int k = 0; k < 4; ++k) {
        if (k == c) continue;
        minor[r - 1][cc++] = m[r][k];
      }
    }
    const Rational term = m[0][c] * det3(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

Rational orient_exact(const Point2D& a, const Point2D& b, const Point2D& c) {
  return (Rational(b.x) - Rational(a.x)) * (Rational(c.y) - Rational(a.y)) -
         (Rational(b.y) - Rational(a.y)) * (Rational(c.x) - Rational(a.x));
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Sign of the lifted determinant with z_i + eps^(i+1); rows a, b, c, d.
int perturbed_incircle(const std::vector<Point2D>& pts, std::array<std::size_t, 4> ids) {
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    const Point2D& p = pts[ids[r]];
    m[r] = {Rational(p.x), Rational(p.y), Rational(p.x) * p.x + Rational(p.y) * p.y, Rational(1)};
  }
  const Rational base = det4(m);
  if (base != 0) return sign(base);
  // The determinant is linear in each lifted entry, so the coefficient of
  // eps^(id+1) is det(z_r + 1) - det(z_r).
  std::array<int, 4> rows{0, 1, 2, 3};
  std::sort(rows.begin(), rows.end(), [&](int a, int b) { return ids[a] < ids[b]; });
  for (int r : rows) {
    Mat4 bumped = m;
    bumped[r][2] += 1;
    const Rational coeff = det4(bumped) - base;
    if (coeff != 0) return sign(coeff);
  }
  return 0;
}

}  // namespace

std::set<Edge> brute_force_delaunay(const std::vector<Point2D>& pts) {
  const std::size_t n = pts.size();
  std::set<Edge> out;
  auto add = [&](std::size_t u, std::size_t v) {
    out.insert({static_cast<NodeId>(std::min(u, v)), static_cast<NodeId>(std::max(u, v))});
  };

  bool any_triangle = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const int o = sign(orient_exact(pts[i], pts[j], pts[k]));
        if (o == 0) continue;
        any_triangle = true;
        std::array<std::size_t, 3> t = o > 0 ? std::array<std::size_t, 3>{i, j, k}
                                             : std::array<std::size_t, 3>{i, k, j};
        bool empty = true;
        for (std::size_t l = 0; l < n && empty; ++l) {
          if (l == i || l == j || l == k) continue;
          if (perturbed_incircle(pts, {t[0], t[1], t[2], l}) > 0) empty = false;
        }
        if (empty) {
          add(i, j);
          add(j, k);
          add(i, k);
        }
      }

  if (!any_triangle) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(pts[a].x, pts[a].y) < std::tie(pts[b].x, pts[b].y);
    });
    for (std::size_t i = 0; i + 1 < n; ++i) add(order[i], order[i + 1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Walk enumeration

namespace {

struct OAgent {
  std::vector<std::size_t> members;
  std::size_t pos = 0;
  long birth = 0;
  bool is_root = false;
};

struct PState {
  AdjMatrix adj;
  std::vector<OAgent> acting;  // agents that move this tick
  std::size_t next = 0;        // index into acting
  std::vector<OAgent> waiting; // agents for the next tick
  long tick = 1;
  ParallelOutcome outcome;
};

std::vector<std::size_t> neighbours_of(const AdjMatrix& adj, std::size_t u) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (adj[u][v]) out.push_back(v);
  return out;
}

// Splits `members` after removing u-v. Returns {side of u, side of v} or an
// empty pair when still connected.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_sides(
    const AdjMatrix& adj, const std::vector<std::size_t>& members, std::size_t u, std::size_t v) {
  std::vector<bool> within(adj.size(), false);
  for (auto x : members) within[x] = true;
  const auto reach = reachability(adj, within);
  if (reach[u][v]) return {};
  std::vector<std::size_t> su, sv;
  for (auto x : members) (reach[u][x] ? su : sv).push_back(x);
  return {su, sv};
}

void explore_parallel(PState s, double prob, std::map<ParallelOutcome, double>& out);

void finish_tick(PState s, double prob, std::map<ParallelOutcome, double>& out) {
  if (s.waiting.empty()) {
    std::sort(s.outcome.events.begin(), s.outcome.events.end());
    out[s.outcome] += prob;
    return;
  }
  s.acting = std::move(s.waiting);
  s.waiting.clear();
  s.next = 0;
  ++s.tick;
  explore_parallel(std::move(s), prob, out);
}

// Every way of seating agents on the children in `kids`, appended to waiting.
void seat_children(PState s, double prob, std::vector<std::vector<std::size_t>> kids,
                   std::size_t k, std::map<ParallelOutcome, double>& out) {
  if (k == kids.size()) {
    ++s.next;
    if (s.next == s.acting.size()) {
      finish_tick(std::move(s), prob, out);
    } else {
      explore_parallel(std::move(s), prob, out);
    }
    return;
  }
  if (kids[k].size() < 2) {
    seat_children(std::move(s), prob, std::move(kids), k + 1, out);
    return;
  }
  for (auto start : kids[k]) {
    PState t = s;
    t.waiting.push_back({kids[k], start, t.tick, false});
    seat_children(std::move(t), prob / static_cast<double>(kids[k].size()), kids, k + 1, out);
  }
}

void explore_parallel(PState s, double prob, std::map<ParallelOutcome, double>& out) {
  const OAgent agent = s.acting[s.next];
  const auto nbrs = neighbours_of(s.adj, agent.pos);
  for (auto v : nbrs) {
    PState t = s;
    const double p = prob / static_cast<double>(nbrs.size());
    t.adj[agent.pos][v] = t.adj[v][agent.pos] = false;
    ++t.outcome.total_steps;
    auto [su, sv] = split_sides(t.adj, agent.members, agent.pos, v);
    if (su.empty()) {
      OAgent moved = agent;
      moved.pos = v;
      t.waiting.push_back(moved);
      ++t.next;
      if (t.next == t.acting.size()) {
        finish_tick(std::move(t), p, out);
      } else {
        explore_parallel(std::move(t), p, out);
      }
      continue;
    }
    const std::size_t n = std::min(su.size(), sv.size());
    const std::size_t m = std::max(su.size(), sv.size());
    t.outcome.events.emplace_back(t.tick, agent.members.size(), n, m);
    if (agent.is_root) t.outcome.root_permanence = t.tick - agent.birth;
    seat_children(std::move(t), p, {su, sv}, 0, out);
  }
}

void explore_sequential(AdjMatrix adj, std::vector<std::size_t> members, std::size_t pos,
                        std::size_t steps, double prob, std::map<std::size_t, double>& out) {
  const auto nbrs = neighbours_of(adj, pos);
  for (auto v : nbrs) {
    AdjMatrix a = adj;
    a[pos][v] = a[v][pos] = false;
    const double p = prob / static_cast<double>(nbrs.size());
    auto [su, sv] = split_sides(a, members, pos, v);
    if (su.empty()) {
      explore_sequential(std::move(a), members, v, steps + 1, p, out);
      continue;
    }
    if (sv.size() == 1) {
      out[steps + 1] += p;
      continue;
    }
    for (auto start : sv) {
      explore_sequential(a, sv, start, steps + 1, p / static_cast<double>(sv.size()), out);
    }
  }
}

}  // namespace

std::map<ParallelOutcome, double> enumerate_parallel(const AdjMatrix& adj) {
  std::map<ParallelOutcome, double> out;
  const std::size_t n = adj.size();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t start = 0; start < n; ++start) {
    PState s;
    s.adj = adj;
    s.acting.push_back({all, start, 0, true});
    explore_parallel(std::move(s), 1.0 / static_cast<double>(n), out);
  }
  return out;
}

std::map<std::size_t, double> enumerate_sequential_durations(const AdjMatrix& adj) {
  std::map<std::size_t, double> out;
  const std::size_t n = adj.size();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  for (std::size_t start = 0; start < n; ++start) {
    explore_sequential(adj, all, start, 0, 1.0 / static_cast<double>(n), out);
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (NodeId u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<NodeId>(n - 1));
  return g;
}

}  // namespace oracle
