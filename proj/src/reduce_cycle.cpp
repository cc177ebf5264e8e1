#include "fgr/reduce_cycle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <queue>

#include "fgr/errors.hpp"
#include "fgr/parallel.hpp"
#include "fgr/rng.hpp"
#include "fgr/tuple_index.hpp"

namespace fgr {

int gamma(int l, int k) {
  if (k < 2 || l <= k) throw PreconditionError("gamma needs l > k >= 2");
  return l - (l + k - 1) / k + 1;
}

CircleLayeredGraph color_code(const WeightedDigraph& g, int k, const Coloring& coloring) {
  if (k < 3) throw PreconditionError("color coding needs k >= 3");
  if (static_cast<int>(coloring.size()) != g.node_count()) throw PreconditionError("coloring size differs from n");
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (coloring[e.target] == (coloring[e.source] + 1) % k) kept.push_back(e);
  return CircleLayeredGraph(WeightedDigraph(g.node_count(), std::move(kept), g.weight_bound()), k, coloring);
}

Coloring random_coloring(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  Coloring c(n);
  for (int& x : c) x = static_cast<int>(uniform_int(rng, 0, k - 1));
  return c;
}

std::int64_t default_color_trials(int n, int k) {
  return static_cast<std::int64_t>(std::ceil(3.0 * std::pow(k, k) * std::log(n + 2.0)));
}

SolveResult repeat_color_code(const WeightedDigraph& g, int k, std::uint64_t seed, std::int64_t trials,
                              const LayeredSolver& solver, int threads) {
  SolveResult best;
  std::mutex merge;
  parallel_for(trials, threads, [&](std::int64_t t) {
    auto layered = color_code(g, k, random_coloring(g.node_count(), k, derive_seed(seed, t)));
    SolveResult r = solver(layered);
    std::lock_guard<std::mutex> lock(merge);
    best = better_min(std::move(best), std::move(r));
  });
  return best;
}

SolveResult layered_min_kcycle(const CircleLayeredGraph& g) {
  const int k = g.k();
  const int n = g.node_count();
  const auto& graph = g.graph();
  SolveResult best;
  std::vector<std::optional<Weight>> dist(n);
  std::vector<NodeId> pred(n, -1);
  for (NodeId s : g.layer(0)) {
    for (int i = 1; i < k; ++i)
      for (NodeId v : g.layer(i)) dist[v].reset();
    dist[s] = 0;
    for (int i = 0; i < k - 1; ++i) {
      const std::vector<NodeId> sources = i == 0 ? std::vector<NodeId>{s} : g.layer(i);
      for (NodeId u : sources) {
        if (!dist[u]) continue;
        for (const Arc& a : graph.out(u)) {
          Weight cand = checked_add(*dist[u], a.weight);
          if (!dist[a.node] || cand < *dist[a.node]) {
            dist[a.node] = cand;
            pred[a.node] = u;
          }
        }
      }
    }
    for (const Arc& a : graph.in(s)) {
      if (!dist[a.node]) continue;
      Weight total = checked_add(*dist[a.node], a.weight);
      std::vector<std::int64_t> cycle;
      for (NodeId v = a.node; v != s; v = pred[v]) cycle.push_back(v);
      cycle.push_back(s);
      std::reverse(cycle.begin(), cycle.end());
      best = better_min(std::move(best), SolveResult::of({WitnessKind::Cycle, canonical_cycle(cycle), total}));
    }
  }
  return best;
}

ReductionOutput<CircleLayeredGraph> split_layer(const CircleLayeredGraph& g) {
  const int n = g.node_count();
  const int k = g.k();
  std::vector<int> copy_of(n, -1);
  int next = n;
  for (NodeId v : g.layer(1)) copy_of[v] = next++;
  std::vector<int> layers(next);
  for (NodeId v = 0; v < n; ++v) layers[v] = g.layer_of(v) <= 1 ? g.layer_of(v) : g.layer_of(v) + 1;
  for (NodeId v : g.layer(1)) layers[copy_of[v]] = 2;
  std::vector<Edge> edges;
  for (const Edge& e : g.graph().edges()) {
    NodeId from = copy_of[e.source] >= 0 ? copy_of[e.source] : e.source;
    edges.push_back({from, e.target, e.weight});
  }
  for (NodeId v : g.layer(1)) edges.push_back({v, copy_of[v], 0});
  const std::size_t expected_edges = g.graph().edge_count() + g.layer(1).size();
  if (next > 2 * n || edges.size() != expected_edges) throw Error("split_layer size accounting failed");
  ReductionOutput<CircleLayeredGraph> out{
      CircleLayeredGraph(WeightedDigraph(next, std::move(edges), g.graph().weight_bound()), k + 1, std::move(layers)),
      nullptr, {1, 0}};
  out.pullback = [n](const Witness& w) {
    if (w.kind != WitnessKind::Cycle) throw PreconditionError("split_layer pullback expects a cycle");
    Witness src{WitnessKind::Cycle, {}, w.claimed_weight};
    for (auto v : w.items)
      if (v < n) src.items.push_back(v);
    src.items = canonical_cycle(src.items);
    return src;
  };
  return out;
}

int responsible_start(const std::vector<int>& parts, int l) {
  const int k = static_cast<int>(parts.size());
  int best_t = 0;
  int best_gap = -1;
  for (int t = 0; t < k; ++t) {
    int prev = parts[(t + k - 1) % k];
    int gap = ((parts[t] - prev - 1) % l + l) % l;
    if (k == 1) gap = l - 1;
    if (gap > best_gap) {
      best_gap = gap;
      best_t = t;
    }
  }
  return parts[best_t];
}

namespace {

Weight max_abs_w1(const UniformHypergraph& h) {
  Weight m = 1;
  for (const auto& e : h.edges()) m = std::max(m, checked_abs(e.w1));
  return m;
}

void require_partitioned(const UniformHypergraph& h, const char* who) {
  if (!h.partitioned()) throw PreconditionError(std::string(who) + ": input must be partitioned");
}

// Sizes of parts first, first+1, ... (count of them, mod part count).
std::vector<int> window_sizes(const UniformHypergraph& h, int first, int count) {
  std::vector<int> sizes(count);
  for (int t = 0; t < count; ++t) sizes[t] = static_cast<int>(h.part((first + t) % h.part_count()).size());
  return sizes;
}

// Rotates a layered cycle so its layer-0 node comes first.
std::vector<std::int64_t> from_layer_zero(const std::vector<std::int64_t>& items, const std::vector<int>& layer_of) {
  auto it = std::find_if(items.begin(), items.end(), [&](std::int64_t v) { return layer_of[v] == 0; });
  if (it == items.end()) throw PreconditionError("cycle does not visit layer 0");
  std::vector<std::int64_t> out(it, items.end());
  out.insert(out.end(), items.begin(), it);
  return out;
}

}  // namespace

ReductionOutput<UniformHypergraph> hyperclique_to_hypercycle(const UniformHypergraph& h) {
  require_partitioned(h, "hyperclique_to_hypercycle");
  const int k = h.arity();
  const int l = h.part_count();
  const int g = gamma(l, k);
  const Weight bound = checked_mul(binomial(g, k), max_abs_w1(h));
  const auto position_sets = k_subsets(g, k);

  std::vector<Hyperedge> edges;
  for (int start = 0; start < l; ++start) {
    std::vector<const std::vector<int>*> owned;
    std::vector<char> is_owned(position_sets.size(), 0);
    for (std::size_t s = 0; s < position_sets.size(); ++s) {
      std::vector<int> parts;
      for (int p : position_sets[s]) parts.push_back((start + p) % l);
      std::sort(parts.begin(), parts.end());
      is_owned[s] = responsible_start(parts, l) == start;
    }
    auto sizes = window_sizes(h, start, g);
    const std::int64_t count = tuple_count(sizes);
    std::vector<NodeId> nodes(g), sub(k);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      auto pos = tuple_from_index(sizes, idx);
      for (int t = 0; t < g; ++t) nodes[t] = h.part((start + t) % l)[pos[t]];
      Weight w = 0;
      bool complete = true;
      for (std::size_t s = 0; s < position_sets.size() && complete; ++s) {
        for (int j = 0; j < k; ++j) sub[j] = nodes[position_sets[s][j]];
        std::sort(sub.begin(), sub.end());
        const Hyperedge* e = h.lookup(sub);
        if (!e) complete = false;
        else if (is_owned[s]) w = checked_add(w, e->w1);
      }
      if (!complete) continue;
      if (checked_abs(w) > bound) throw Error("hyperclique_to_hypercycle weight exceeds binom(gamma,k)*W");
      Hyperedge big{nodes, w, 0};
      std::sort(big.nodes.begin(), big.nodes.end());
      edges.push_back(std::move(big));
    }
  }
  ReductionOutput<UniformHypergraph> out{
      UniformHypergraph(h.node_count(), g, h.parts(), l, std::move(edges), bound), nullptr, {1, 0}};
  out.pullback = [](const Witness& w) {
    if (w.kind != WitnessKind::Hypercycle) throw PreconditionError("pullback expects a hypercycle witness");
    Witness src{WitnessKind::Hyperclique, w.items, w.claimed_weight};
    std::sort(src.items.begin(), src.items.end());
    return src;
  };
  return out;
}

ReductionOutput<CircleLayeredGraph> hypercycle_to_digraph(const UniformHypergraph& h) {
  require_partitioned(h, "hypercycle_to_digraph");
  const int k = h.part_count();
  const int lambda = h.arity();
  if (lambda >= k) throw PreconditionError("hypercycle_to_digraph needs arity < part count");
  if (k < 3) throw PreconditionError("hypercycle_to_digraph needs at least 3 parts");
  const int t = lambda - 1;

  std::vector<std::vector<int>> sizes(k);
  std::vector<std::int64_t> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    sizes[i] = window_sizes(h, i, t);
    offset[i + 1] = checked_add(offset[i], tuple_count(sizes[i]));
  }
  if (offset[k] > INT32_MAX) throw PreconditionError("hypercycle_to_digraph output too large");
  const int n = static_cast<int>(offset[k]);
  std::vector<int> layers(n);
  for (int i = 0; i < k; ++i)
    for (std::int64_t v = offset[i]; v < offset[i + 1]; ++v) layers[v] = i;

  std::vector<Edge> edges;
  std::vector<NodeId> set(lambda);
  std::vector<int> next_pos(t);
  for (int i = 0; i < k; ++i) {
    const int ext = (i + t) % k;
    const int j = (i + 1) % k;
    std::int64_t layer_edges = 0;
    for (std::int64_t idx = 0; idx < offset[i + 1] - offset[i]; ++idx) {
      auto pos = tuple_from_index(sizes[i], idx);
      for (NodeId v : h.part(ext)) {
        for (int c = 0; c < t; ++c) set[c] = h.part((i + c) % k)[pos[c]];
        set[t] = v;
        std::sort(set.begin(), set.end());
        const Hyperedge* e = h.lookup(set);
        if (!e) continue;
        for (int c = 0; c + 1 < t; ++c) next_pos[c] = pos[c + 1];
        next_pos[t - 1] = h.position_in_part(v);
        auto target = offset[j] + tuple_index(sizes[j], next_pos);
        edges.push_back({static_cast<NodeId>(offset[i] + idx), static_cast<NodeId>(target), e->w1});
        ++layer_edges;
      }
    }
    if (layer_edges > (offset[i + 1] - offset[i]) * static_cast<std::int64_t>(h.part(ext).size()))
      throw Error("hypercycle_to_digraph edge accounting failed");
  }
  ReductionOutput<CircleLayeredGraph> out{
      CircleLayeredGraph(WeightedDigraph(n, std::move(edges), max_abs_w1(h)), k, layers), nullptr, {1, 0}};
  out.pullback = [h, offset, sizes, layers](const Witness& w) {
    if (w.kind != WitnessKind::Cycle) throw PreconditionError("pullback expects a cycle witness");
    const int k = h.part_count();
    if (static_cast<int>(w.items.size()) != k) throw PreconditionError("pullback expects a k-cycle");
    Witness src{WitnessKind::Hypercycle, {}, w.claimed_weight};
    for (auto id : from_layer_zero(w.items, layers)) {
      const int i = layers[id];
      auto pos = tuple_from_index(sizes[i], id - offset[i]);
      src.items.push_back(h.part(i)[pos[0]]);
    }
    return src;
  };
  return out;
}

ReductionOutput<CircleLayeredGraph> clique_to_cycle(const UniformHypergraph& g) {
  if (g.arity() != 2) throw PreconditionError("clique_to_cycle needs a 2-uniform instance");
  require_partitioned(g, "clique_to_cycle");
  if (g.part_count() < 3) throw PreconditionError("clique_to_cycle needs k >= 3");
  auto stage1 = hyperclique_to_hypercycle(g);
  auto stage2 = hypercycle_to_digraph(stage1.instance);
  ReductionOutput<CircleLayeredGraph> out{std::move(stage2.instance), nullptr, {1, 0}};
  out.pullback = [p1 = stage1.pullback, p2 = stage2.pullback](const Witness& w) {
    Witness src = p1(p2(w));
    src.kind = WitnessKind::Clique;
    return src;
  };
  return out;
}

ReductionOutput<CircleLayeredGraph> clique_to_cycle_direct(const UniformHypergraph& g) {
  if (g.arity() != 2) throw PreconditionError("clique_to_cycle_direct needs a 2-uniform instance");
  require_partitioned(g, "clique_to_cycle_direct");
  const int k = g.part_count();
  if (k < 3 || k % 2 == 0) throw PreconditionError("clique_to_cycle_direct needs odd k >= 3");
  const int L = (k + 1) / 2;
  const int t = L - 1;
  const Weight lf = factorial(L);
  const Weight bound = checked_mul(checked_mul(binomial(L, 2), lf), max_abs_w1(g));

  auto pair_weight = [&](NodeId a, NodeId b) -> const Hyperedge* {
    return g.lookup(a < b ? std::vector<NodeId>{a, b} : std::vector<NodeId>{b, a});
  };
  auto is_clique = [&](const std::vector<NodeId>& nodes) {
    for (std::size_t p = 0; p < nodes.size(); ++p)
      for (std::size_t q = p + 1; q < nodes.size(); ++q)
        if (!pair_weight(nodes[p], nodes[q])) return false;
    return true;
  };

  // Layer i nodes: clique t-tuples over parts i..i+t-1, in tuple_index order.
  std::vector<std::vector<std::vector<NodeId>>> tuples(k);
  std::vector<std::vector<std::int64_t>> local(k);  // tuple_index -> local id or -1
  std::vector<std::vector<int>> sizes(k);
  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    sizes[i] = window_sizes(g, i, t);
    const std::int64_t count = tuple_count(sizes[i]);
    local[i].assign(count, -1);
    for (std::int64_t idx = 0; idx < count; ++idx) {
      auto pos = tuple_from_index(sizes[i], idx);
      std::vector<NodeId> nodes(t);
      for (int c = 0; c < t; ++c) nodes[c] = g.part((i + c) % k)[pos[c]];
      if (!is_clique(nodes)) continue;
      local[i][idx] = static_cast<std::int64_t>(tuples[i].size());
      tuples[i].push_back(std::move(nodes));
    }
    offset[i + 1] = offset[i] + static_cast<int>(tuples[i].size());
  }
  const int n = offset[k];
  std::vector<int> layers(n);
  for (int i = 0; i < k; ++i)
    for (int v = offset[i]; v < offset[i + 1]; ++v) layers[v] = i;

  std::vector<Edge> edges;
  std::vector<int> next_pos(t);
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    const int ext = (i + t) % k;
    for (std::size_t x = 0; x < tuples[i].size(); ++x) {
      const auto& xs = tuples[i][x];
      for (NodeId y : g.part(ext)) {
        if (!pair_weight(xs[0], y)) continue;
        for (int c = 0; c + 1 < t; ++c) next_pos[c] = g.position_in_part(xs[c + 1]);
        next_pos[t - 1] = g.position_in_part(y);
        auto target = local[j][tuple_index(sizes[j], next_pos)];
        if (target < 0) continue;
        std::vector<NodeId> a = xs;
        a.push_back(y);
        Weight w = 0;
        for (int p = 0; p < L; ++p)
          for (int q = p + 1; q < L; ++q)
            w = checked_add(w, checked_mul(pair_weight(a[p], a[q])->w1, lf / (L - (q - p))));
        edges.push_back({offset[i] + static_cast<NodeId>(x), offset[j] + static_cast<NodeId>(target), w});
      }
    }
  }
  ReductionOutput<CircleLayeredGraph> out{
      CircleLayeredGraph(WeightedDigraph(n, std::move(edges), bound), k, layers), nullptr, {lf, 0}};
  out.pullback = [tuples, offset, layers, lf](const Witness& w) {
    if (w.kind != WitnessKind::Cycle) throw PreconditionError("pullback expects a cycle witness");
    if (w.claimed_weight % lf != 0) throw PreconditionError("cycle weight not divisible by L!");
    Witness src{WitnessKind::Clique, {}, w.claimed_weight / lf};
    for (auto id : from_layer_zero(w.items, layers)) src.items.push_back(tuples[layers[id]][id - offset[layers[id]]][0]);
    std::sort(src.items.begin(), src.items.end());
    return src;
  };
  return out;
}

Weight shortest_cycle_shift(Weight W) {
  if (W < 0) throw PreconditionError("negative weight bound");
  return W == 0 ? 1 : checked_mul(4, W);
}

ReductionOutput<WeightedDigraph> min_kcycle_to_shortest_cycle(const CircleLayeredGraph& g, Weight W) {
  if (g.graph().max_abs_weight() > W) throw PreconditionError("weight bound violation: some |w| > W");
  const Weight s = shortest_cycle_shift(W);
  const int k = g.k();
  std::vector<Edge> edges;
  for (const Edge& e : g.graph().edges()) edges.push_back({e.source, e.target, checked_add(e.weight, s)});
  ReductionOutput<WeightedDigraph> out{WeightedDigraph(g.node_count(), std::move(edges), checked_add(W, s)), nullptr,
                                       {1, checked_mul(k, s)}};
  out.pullback = [k, s](const Witness& w) {
    if (w.kind != WitnessKind::Cycle || static_cast<int>(w.items.size()) != k)
      throw PreconditionError("shortest cycle is not a k-cycle");
    return Witness{WitnessKind::Cycle, canonical_cycle(w.items), checked_sub(w.claimed_weight, checked_mul(k, s))};
  };
  return out;
}

ReductionOutput<WeightedDigraph> min_kcycle_to_shortest_cycle(const WeightedDigraph& g, int k, Weight W,
                                                              const Coloring& coloring) {
  if (g.max_abs_weight() > W) throw PreconditionError("weight bound violation: some |w| > W");
  return min_kcycle_to_shortest_cycle(color_code(g, k, coloring), W);
}

SolveResult shortest_cycle_nonnegative(const WeightedDigraph& g) {
  for (const Edge& e : g.edges())
    if (e.weight < 0) throw PreconditionError("shortest_cycle_nonnegative needs non-negative weights");
  const int n = g.node_count();
  SolveResult best;
  std::vector<std::optional<Weight>> dist(n);
  std::vector<NodeId> pred(n);
  using Item = std::pair<Weight, NodeId>;
  for (NodeId s = 0; s < n; ++s) {
    if (g.in_degree(s) == 0) continue;
    std::fill(dist.begin(), dist.end(), std::nullopt);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[s] = 0;
    queue.push({0, s});
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d != *dist[u]) continue;
      if (best.found && d > best.weight) break;
      for (const Arc& a : g.out(u)) {
        Weight cand = checked_add(d, a.weight);
        if (!dist[a.node] || cand < *dist[a.node]) {
          dist[a.node] = cand;
          pred[a.node] = u;
          queue.push({cand, a.node});
        }
      }
    }
    for (const Arc& a : g.in(s)) {
      if (!dist[a.node] || a.node == s) continue;
      Weight total = checked_add(*dist[a.node], a.weight);
      if (best.found && total > best.weight) continue;
      std::vector<std::int64_t> cycle;
      for (NodeId v = a.node; v != s; v = pred[v]) cycle.push_back(v);
      cycle.push_back(s);
      std::reverse(cycle.begin(), cycle.end());
      best = better_min(std::move(best), SolveResult::of({WitnessKind::Cycle, canonical_cycle(cycle), total}));
    }
  }
  return best;
}

SolveResult min_kcycle_via_shortest_cycle(const WeightedDigraph& g, int k, Weight W, std::uint64_t seed,
                                          std::int64_t trials, const CycleSolver& solver) {
  SolveResult best;
  for (std::int64_t t = 0; t < trials; ++t) {
    auto red = min_kcycle_to_shortest_cycle(g, k, W, random_coloring(g.node_count(), k, derive_seed(seed, t)));
    SolveResult r = solver(red.instance);
    if (!r.found || !r.witness || static_cast<int>(r.witness->items.size()) != k) continue;
    best = better_min(std::move(best), SolveResult::of(red.pullback(*r.witness)));
  }
  return best;
}

bool detect_kcycle_via_shortest_cycle(const CircleLayeredGraph& g) {
  std::vector<Edge> unit;
  for (const Edge& e : g.graph().edges()) unit.push_back({e.source, e.target, 1});
  SolveResult r = shortest_cycle_nonnegative(WeightedDigraph(g.node_count(), std::move(unit)));
  return r.found && r.weight == g.k();
}

bool detect_kcycle_via_shortest_cycle(const WeightedDigraph& g, int k, std::uint64_t seed, std::int64_t trials) {
  for (std::int64_t t = 0; t < trials; ++t)
    if (detect_kcycle_via_shortest_cycle(color_code(g, k, random_coloring(g.node_count(), k, derive_seed(seed, t)))))
      return true;
  return false;
}

CircleLayeredGraph probe_graph(const CircleLayeredGraph& g, Weight T) {
  std::vector<Edge> edges;
  Weight bound = checked_add(g.graph().weight_bound(), checked_abs(T));
  for (const Edge& e : g.graph().edges()) {
    Weight w = g.layer_of(e.source) == 0 ? checked_sub(e.weight, T) : e.weight;
    edges.push_back({e.source, e.target, w});
  }
  return CircleLayeredGraph(WeightedDigraph(g.node_count(), std::move(edges), bound), g.k(), g.layers());
}

int negative_search_probe_limit(Weight R, int k) {
  Weight span = checked_add(checked_mul(checked_mul(2, R), k), 2);
  int bits = 0;
  while ((Weight{1} << bits) < span) ++bits;
  return bits;
}

NegativeSearchResult min_kcycle_via_negative_search(const CircleLayeredGraph& g, Weight R,
                                                    const NegativeCycleSolver& solver) {
  if (R < 0) throw PreconditionError("R must be non-negative");
  if (g.graph().max_abs_weight() > R) throw PreconditionError("weight bound violation: some |w| > R");
  const Weight rk = checked_mul(R, g.k());
  // P(T): some k-cycle weighs < T. Invariant: P(lo) false, and P(hi) true or
  // hi is the unprobed sentinel Rk+2.
  Weight lo = -rk;
  Weight hi = checked_add(rk, 2);
  NegativeSearchResult out;
  std::optional<Witness> hi_witness;
  std::optional<Weight> lightest_seen;
  while (hi - lo > 1) {
    const Weight mid = lo + (hi - lo) / 2;
    ++out.probes;
    NegativeAnswer a = solver(probe_graph(g, mid));
    if (a.witness) {
      Weight original = checked_add(a.witness->claimed_weight, mid);
      if (!a.found || original >= mid) throw Error("negative-cycle solver returned an inconsistent witness");
      if (!lightest_seen || original < *lightest_seen) lightest_seen = original;
    }
    if (a.found) {
      hi = mid;
      hi_witness = a.witness;
    } else {
      lo = mid;
    }
    if (lightest_seen && *lightest_seen < lo) throw Error("negative-cycle solver answered non-monotonically");
  }
  if (hi == checked_add(rk, 2)) return out;
  out.result.found = true;
  out.result.weight = hi - 1;
  if (hi_witness) {
    Witness w{WitnessKind::Cycle, canonical_cycle(hi_witness->items), checked_add(hi_witness->claimed_weight, hi)};
    if (w.claimed_weight != hi - 1) throw Error("negative-cycle solver answered non-monotonically");
    out.result.witness = std::move(w);
  }
  return out;
}

}  // namespace fgr
