#include "fgr/fast_algos.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <set>

#include "fgr/errors.hpp"
#include "fgr/parallel.hpp"
#include "fgr/reduce_cycle.hpp"
#include "fgr/rng.hpp"

namespace fgr {

namespace {

SolveResult cycle_result(const std::vector<NodeId>& nodes, Weight w) {
  std::vector<std::int64_t> items(nodes.begin(), nodes.end());
  return SolveResult::of({WitnessKind::Cycle, canonical_cycle(std::move(items)), w});
}

void merge_stats(AlgoStats& into, const AlgoStats& from) {
  into.paths_enumerated = std::max(into.paths_enumerated, from.paths_enumerated);
  into.paths_total += from.paths_total;
  into.relaxations += from.relaxations;
  into.trials_used += from.trials_used;
}

}  // namespace

SolveResult shortest_kcycle_through(const WeightedDigraph& g, NodeId s, int k, std::uint64_t seed,
                                    std::int64_t trials, AlgoStats* stats) {
  if (k < 3) throw PreconditionError("k must be at least 3");
  const int n = g.node_count();
  if (s < 0 || s >= n) throw PreconditionError("source out of range");
  SolveResult best;
  // Colors are drawn lazily for the nodes a trial touches; stamp marks the
  // trial a color belongs to.
  std::vector<int> color(n);
  std::vector<std::int64_t> stamp(n, -1);
  std::vector<std::optional<Weight>> dist(n);
  std::vector<NodeId> pred(n, -1);
  std::vector<std::vector<NodeId>> frontier(k);
  for (std::int64_t t = 0; t < trials; ++t) {
    SplitMixRng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    auto color_of = [&](NodeId v) {
      if (stamp[v] != t) {
        stamp[v] = t;
        color[v] = v == s ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(k));
      }
      return color[v];
    };
    for (auto& f : frontier) f.clear();
    frontier[0].push_back(s);
    dist[s] = 0;
    // Only edges from color c to c+1 are relaxed, so the kept graph is acyclic.
    for (int c = 0; c + 1 < k; ++c) {
      std::sort(frontier[c].begin(), frontier[c].end());
      for (NodeId u : frontier[c]) {
        for (const Arc& a : g.out(u)) {
          if (a.node == s || color_of(a.node) != c + 1) continue;
          if (color[a.node] <= color[u]) throw Error("colored graph is not acyclic");
          if (stats) ++stats->relaxations;
          Weight cand = checked_add(*dist[u], a.weight);
          if (!dist[a.node]) {
            frontier[c + 1].push_back(a.node);
          } else if (cand >= *dist[a.node]) {
            continue;
          }
          dist[a.node] = cand;
          pred[a.node] = u;
        }
      }
    }
    for (NodeId u : frontier[k - 1]) {
      auto back = g.weight(u, s);
      if (!back) continue;
      std::vector<NodeId> cycle;
      for (NodeId v = u; v != -1; v = pred[v]) cycle.push_back(v);
      std::reverse(cycle.begin(), cycle.end());
      best = better_min(std::move(best), cycle_result(cycle, checked_add(*dist[u], *back)));
    }
    for (const auto& f : frontier)
      for (NodeId v : f) {
        dist[v].reset();
        pred[v] = -1;
      }
    if (stats) ++stats->trials_used;
  }
  return best;
}

std::int64_t default_split_trials(int n, int k) {
  return static_cast<std::int64_t>(std::ceil(3.0 * std::pow(2.0, k) * std::log(n + 2.0)));
}

std::int64_t heavy_degree_threshold(std::int64_t m, int k) {
  const int h = (k + 1) / 2;
  std::int64_t d = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(std::pow(double(m), 1.0 / h))));
  auto power_at_least_m = [&](std::int64_t x) {
    long double p = 1;
    for (int i = 0; i < h; ++i) p *= x;
    return p >= static_cast<long double>(m);
  };
  while (d > 1 && power_at_least_m(d - 1)) --d;
  while (!power_at_least_m(d)) ++d;
  return d;
}

std::vector<PathEntry> enumerate_bounded_paths(const WeightedDigraph& g, int length, const std::vector<int>& color,
                                               int internal_color, std::int64_t* built) {
  if (length < 1) throw PreconditionError("path length must be positive");
  const int n = g.node_count();
  std::vector<PathEntry> table;
  std::int64_t count = 0;
  std::vector<NodeId> path;
  std::vector<char> on_path(n, 0);
  // best[to] for the current source, indexing into table.
  std::vector<std::int64_t> slot(n, -1);

  auto dfs = [&](auto&& self, NodeId u, Weight w) -> void {
    const int depth = static_cast<int>(path.size()) - 1;
    for (const Arc& a : g.out(u)) {
      if (on_path[a.node]) continue;
      const Weight nw = checked_add(w, a.weight);
      if (depth + 1 == length) {
        ++count;
        std::int64_t& s = slot[a.node];
        if (s < 0) {
          s = static_cast<std::int64_t>(table.size());
          path.push_back(a.node);
          table.push_back({path.front(), a.node, nw, path});
          path.pop_back();
        } else if (nw < table[s].weight) {
          path.push_back(a.node);
          table[s].weight = nw;
          table[s].path = path;
          path.pop_back();
        }
        continue;
      }
      if (color[a.node] != internal_color) continue;
      on_path[a.node] = 1;
      path.push_back(a.node);
      self(self, a.node, nw);
      path.pop_back();
      on_path[a.node] = 0;
    }
  };

  for (NodeId a = 0; a < n; ++a) {
    const std::size_t first = table.size();
    path.assign(1, a);
    on_path[a] = 1;
    dfs(dfs, a, 0);
    on_path[a] = 0;
    for (std::size_t i = first; i < table.size(); ++i) slot[table[i].to] = -1;
    std::sort(table.begin() + static_cast<std::ptrdiff_t>(first), table.end(),
              [](const PathEntry& x, const PathEntry& y) { return x.to < y.to; });
  }
  if (built) *built = count;
  return table;
}

SolveResult min_weight_kcycle(const WeightedDigraph& g, int k, std::uint64_t seed, AlgoStats* stats,
                              const MinCycleOptions& options) {
  if (k < 3) throw PreconditionError("k must be at least 3");
  const int n = g.node_count();
  const std::int64_t m = static_cast<std::int64_t>(g.edge_count());
  AlgoStats local;
  local.delta = heavy_degree_threshold(m, k);

  std::vector<NodeId> heavy, light;
  for (NodeId v = 0; v < n; ++v) {
    if (static_cast<std::int64_t>(g.out_degree(v) + g.in_degree(v)) >= local.delta)
      heavy.push_back(v);
    else
      light.push_back(v);
  }
  local.heavy_node_count = static_cast<std::int64_t>(heavy.size());

  SolveResult best;
  std::mutex merge;
  const std::int64_t heavy_trials = options.heavy_trials >= 0 ? options.heavy_trials : default_color_trials(n, k);
  parallel_for(static_cast<std::int64_t>(heavy.size()), options.threads, [&](std::int64_t i) {
    AlgoStats mine;
    SolveResult r = shortest_kcycle_through(g, heavy[i], k, derive_seed(seed, static_cast<std::uint64_t>(i)),
                                            heavy_trials, &mine);
    std::lock_guard<std::mutex> lock(merge);
    best = better_min(std::move(best), std::move(r));
    merge_stats(local, mine);
  });

  // Light phase on the graph without heavy nodes; ids are mapped back.
  WeightedDigraph rest = induced_subgraph(g, light);
  const int L1 = (k + 1) / 2;
  const int L2 = k / 2;
  const std::int64_t split_trials = options.split_trials >= 0 ? options.split_trials : default_split_trials(n, k);
  const std::uint64_t split_seed = splitmix64(seed ^ 0x5eedULL);
  parallel_for(split_trials, options.threads, [&](std::int64_t t) {
    SplitMixRng rng(derive_seed(split_seed, static_cast<std::uint64_t>(t)));
    std::vector<int> color(rest.node_count());
    for (int& c : color) c = static_cast<int>(rng() >> 63);  // 0 red, 1 blue
    AlgoStats mine;
    std::int64_t built_x = 0, built_y = 0;
    auto X = enumerate_bounded_paths(rest, L1, color, 0, &built_x);
    auto Y = enumerate_bounded_paths(rest, L2, color, 1, &built_y);
    mine.paths_enumerated = std::max(built_x, built_y);
    mine.paths_total = built_x + built_y;
    mine.trials_used = 1;
    // Y is keyed (b, a); join X(a, b) with Y(b, a) after sorting Y by (a, b).
    std::sort(Y.begin(), Y.end(), [](const PathEntry& p, const PathEntry& q) {
      return std::pair(p.to, p.from) < std::pair(q.to, q.from);
    });
    SolveResult trial_best;
    std::size_t j = 0;
    for (const PathEntry& x : X) {
      while (j < Y.size() && std::pair(Y[j].to, Y[j].from) < std::pair(x.from, x.to)) ++j;
      if (j == Y.size()) break;
      if (Y[j].to != x.from || Y[j].from != x.to) continue;
      if (x.from == x.to) continue;
      std::vector<NodeId> cycle;
      for (NodeId v : x.path) cycle.push_back(light[v]);
      for (std::size_t p = 1; p + 1 < Y[j].path.size(); ++p) cycle.push_back(light[Y[j].path[p]]);
      trial_best = better_min(std::move(trial_best), cycle_result(cycle, checked_add(x.weight, Y[j].weight)));
    }
    std::lock_guard<std::mutex> lock(merge);
    best = better_min(std::move(best), std::move(trial_best));
    merge_stats(local, mine);
  });

  if (stats) *stats = local;
  return best;
}

SolveResult density_self_reduction(const WeightedDigraph& g, int k, int c, double g_param, std::uint64_t seed,
                                   const KCycleSolver& solver, DensityStats* stats, int max_attempts) {
  if (k < 3) throw PreconditionError("k must be at least 3");
  if (c < 1) throw PreconditionError("color count must be at least 1");
  if (g_param < 1) throw PreconditionError("density parameter must be at least 1");
  const int n = g.node_count();
  const double m = static_cast<double>(g.edge_count());
  DensityStats local;
  SolveResult best;
  if (n == 0) {
    if (stats) *stats = local;
    return best;
  }

  const double degree_cap = g_param * m / n;
  std::vector<NodeId> keep;
  std::int64_t heavy_index = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (static_cast<double>(g.out_degree(v) + g.in_degree(v)) > degree_cap) {
      best = better_min(std::move(best),
                        shortest_kcycle_through(g, v, k, derive_seed(seed, heavy_index++), default_color_trials(n, k)));
      ++local.heavy_removed;
    } else {
      keep.push_back(v);
    }
  }
  WeightedDigraph rest = induced_subgraph(g, keep);
  const int r = rest.node_count();
  auto lift = [&](SolveResult res) {
    if (!res.found || !res.witness) return res;
    std::vector<std::int64_t> items;
    for (auto v : res.witness->items) items.push_back(keep[v]);
    return SolveResult::of({WitnessKind::Cycle, canonical_cycle(std::move(items)), res.weight});
  };

  const double class_cap = n * std::max(1.0, std::log(double(n))) / c;
  const double pair_cap = m * std::sqrt(g_param) / std::pow(double(c), 1.5);
  bool solved = false;
  for (int attempt = 0; attempt < max_attempts && !solved; ++attempt) {
    ++local.attempts;
    Rng rng(derive_seed(splitmix64(seed ^ 0xc0102ULL), static_cast<std::uint64_t>(attempt)));
    std::vector<int> color(r);
    std::vector<std::int64_t> class_size(c, 0);
    for (int& x : color) {
      x = static_cast<int>(uniform_int(rng, 0, c - 1));
      ++class_size[x];
    }
    std::vector<std::int64_t> pair_edges(static_cast<std::size_t>(c) * c, 0);
    for (const Edge& e : rest.edges()) ++pair_edges[color[e.source] * c + color[e.target]];
    bool discard = false;
    for (auto s : class_size) discard = discard || s > class_cap;
    for (auto p : pair_edges) discard = discard || p > pair_cap;
    if (discard) {
      ++local.discarded_attempts;
      continue;
    }
    std::set<std::vector<int>> color_sets;
    std::vector<int> tuple(k, 0);
    while (true) {
      std::vector<int> set = tuple;
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      color_sets.insert(set);
      int i = k - 1;
      while (i >= 0 && tuple[i] == c - 1) tuple[i--] = 0;
      if (i < 0) break;
      ++tuple[i];
    }
    SolveResult attempt_best;
    for (const auto& set : color_sets) {
      std::vector<NodeId> members;
      for (NodeId v = 0; v < r; ++v)
        if (std::binary_search(set.begin(), set.end(), color[v])) members.push_back(v);
      ++local.subproblems;
      SolveResult sub = solver(induced_subgraph(rest, members), k);
      if (sub.found && sub.witness)
        for (auto& v : sub.witness->items) v = members[v];
      attempt_best = better_min(std::move(attempt_best), lift(std::move(sub)));
    }
    best = better_min(std::move(best), std::move(attempt_best));
    solved = true;
  }
  if (!solved) {
    local.fell_back = true;
    best = better_min(std::move(best), lift(solver(rest, k)));
  }
  if (stats) *stats = local;
  return best;
}

}  // namespace fgr
