#include <algorithm>
#include <deque>
#include <numeric>

#include "cozero/error.hpp"
#include "cozero/graph.hpp"

namespace cozero {

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

SimpleGraph SimpleGraph::complete_bipartite(std::size_t m, std::size_t n) {
  SimpleGraph g(m + n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < n; ++b) g.add_edge(a, m + b);
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  SimpleGraph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

void SimpleGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b || adjacent(a, b)) return;
  adj_[a * n_ + b] = 1;
  adj_[b * n_ + a] = 1;
  ++edges_;
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < n_; ++w)
    if (adjacent(v, w)) out.push_back(w);
  return out;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < n_; ++w) d += adjacent(v, w) ? 1 : 0;
  return d;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (adjacent(a, b)) out.emplace_back(a, b);
  return out;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::size_t>& keep) const {
  SimpleGraph g(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) g.add_edge(i, j);
  return g;
}

namespace {

std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t source) {
  constexpr auto unreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.vertex_count(), unreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
      if (g.adjacent(u, w) && dist[w] == unreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

void require_cap(const SimpleGraph& g, const MetricLimits& limits, const char* metric) {
  if (g.vertex_count() > limits.exact_vertex_cap)
    throw Error(ErrorKind::cap_exceeded,
                std::string(metric) + ": " + std::to_string(g.vertex_count()) +
                    " vertices exceed exact-computation cap " +
                    std::to_string(limits.exact_vertex_cap));
}

// Greedy sequential coloring of `order`; colors[i] is the color class
// (1-based) of order[i], nondecreasing after the sort below.
void color_sort(const SimpleGraph& g, std::vector<std::size_t>& order,
                std::vector<std::size_t>& colors) {
  std::vector<std::vector<std::size_t>> classes;
  for (auto v : order) {
    std::size_t k = 0;
    for (; k < classes.size(); ++k) {
      bool clash = false;
      for (auto w : classes[k])
        if (g.adjacent(v, w)) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    if (k == classes.size()) classes.emplace_back();
    classes[k].push_back(v);
  }
  order.clear();
  colors.clear();
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (auto v : classes[k]) {
      order.push_back(v);
      colors.push_back(k + 1);
    }
}

struct CliqueSearch {
  const SimpleGraph& g;
  std::size_t best = 0;

  void expand(std::size_t depth, std::vector<std::size_t> candidates) {
    std::vector<std::size_t> colors;
    color_sort(g, candidates, colors);
    while (!candidates.empty()) {
      if (depth + colors.back() <= best) return;
      const auto v = candidates.back();
      candidates.pop_back();
      colors.pop_back();
      std::vector<std::size_t> next;
      for (auto w : candidates)
        if (g.adjacent(v, w)) next.push_back(w);
      if (next.empty())
        best = std::max(best, depth + 1);
      else
        expand(depth + 1, std::move(next));
    }
  }
};

// DSatur-ordered backtracking for a proper coloring with at most k colors.
struct ColoringSearch {
  const SimpleGraph& g;
  std::size_t k;
  std::vector<int> color;

  bool solve(std::size_t colored, int used) {
    const auto n = g.vertex_count();
    if (colored == n) return true;
    std::size_t pick = n;
    std::size_t best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::vector<bool> seen(k, false);
      std::size_t sat = 0, deg = 0;
      for (std::size_t w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (color[w] >= 0) {
          if (!seen[color[w]]) {
            seen[color[w]] = true;
            ++sat;
          }
        } else {
          ++deg;
        }
      }
      if (pick == n || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const int limit = std::min<int>(static_cast<int>(k), used + 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      for (std::size_t w = 0; w < n && ok; ++w) ok = !(g.adjacent(pick, w) && color[w] == c);
      if (!ok) continue;
      color[pick] = c;
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      color[pick] = -1;
    }
    return false;
  }
};

std::size_t greedy_color_count(const SimpleGraph& g) {
  std::vector<std::size_t> order(g.vertex_count()), colors;
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  color_sort(g, order, colors);
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

}  // namespace

std::vector<std::vector<std::size_t>> components(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (std::size_t w = 0; w < g.vertex_count(); ++w)
        if (g.adjacent(u, w) && !seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const SimpleGraph& g) { return components(g).size() <= 1; }

ExtendedNat distance(const SimpleGraph& g, std::size_t a, std::size_t b) {
  if (a >= g.vertex_count() || b >= g.vertex_count())
    throw Error(ErrorKind::not_a_vertex, "distance: argument is not a vertex");
  auto d = bfs_distances(g, a)[b];
  return d == static_cast<std::size_t>(-1) ? ExtendedNat::infinity() : ExtendedNat(d);
}

ExtendedNat diameter(const SimpleGraph& g) {
  std::uint64_t best = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == static_cast<std::size_t>(-1)) return ExtendedNat::infinity();
      best = std::max<std::uint64_t>(best, d);
    }
  }
  return best;
}

ExtendedNat girth(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  std::size_t best = static_cast<std::size_t>(-1);
  constexpr auto none = static_cast<std::size_t>(-1);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> dist(n, none), parent(n, none);
    std::deque<std::size_t> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (dist[w] == none) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == none ? ExtendedNat::infinity() : ExtendedNat(best);
}

std::size_t clique_number(const SimpleGraph& g, const MetricLimits& limits) {
  require_cap(g, limits, "clique_number");
  if (g.vertex_count() == 0) return 0;
  std::vector<std::size_t> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  std::sort(all.begin(), all.end(), [&](auto a, auto b) { return g.degree(a) > g.degree(b); });
  CliqueSearch search{g};
  search.expand(0, all);
  return search.best;
}

std::size_t chromatic_number(const SimpleGraph& g, const MetricLimits& limits) {
  require_cap(g, limits, "chromatic_number");
  if (g.vertex_count() == 0) return 0;
  const auto lower = clique_number(g, limits);
  const auto upper = greedy_color_count(g);
  for (std::size_t k = lower; k < upper; ++k) {
    ColoringSearch search{g, k, std::vector<int>(g.vertex_count(), -1)};
    if (search.solve(0, 0)) return k;
  }
  return upper;
}

bool is_r_partite(const SimpleGraph& g, std::size_t r, const MetricLimits& limits) {
  return chromatic_number(g, limits) <= r;
}

PartiteStructure partite_structure(const SimpleGraph& g) {
  PartiteStructure out;
  const auto n = g.vertex_count();
  out.complete = g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;

  std::vector<int> side(n, -1);
  std::vector<std::size_t> isolated;
  bool ok = true;
  for (std::size_t s = 0; s < n && ok; ++s) {
    if (side[s] >= 0) continue;
    if (g.degree(s) == 0) {
      isolated.push_back(s);
      continue;
    }
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && ok) {
      auto u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w) {
        if (!g.adjacent(u, w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          ok = false;
          break;
        }
      }
    }
  }
  out.bipartite = ok;
  if (!ok) return out;

  std::vector<std::size_t> a, b;
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v] == 0) a.push_back(v);
    if (side[v] == 1) b.push_back(v);
  }
  for (auto v : isolated) (a.size() <= b.size() ? a : b).push_back(v);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto first = [](const std::vector<std::size_t>& p) { return p.empty() ? SIZE_MAX : p.front(); };
  if (b.size() < a.size() || (b.size() == a.size() && first(b) < first(a))) std::swap(a, b);
  if (!a.empty() && !b.empty() && g.edge_count() == a.size() * b.size())
    out.complete_bipartite = std::make_pair(a.size(), b.size());
  out.parts = std::make_pair(std::move(a), std::move(b));
  return out;
}

MetricsReport compute_metrics(const SimpleGraph& g, const MetricLimits& limits) {
  MetricsReport r;
  r.connected = is_connected(g);
  r.diameter = diameter(g);
  r.girth = girth(g);
  r.clique_number = clique_number(g, limits);
  r.chromatic_number = chromatic_number(g, limits);
  auto partite = partite_structure(g);
  r.bipartite = partite.bipartite;
  r.complete_bipartite = partite.complete_bipartite;
  r.complete = partite.complete;
  r.planar = is_planar(g, limits);
  return r;
}

}  // namespace cozero
