#include "fgr/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fgr/errors.hpp"
#include "fgr/rng.hpp"

namespace fgr {

namespace {

Weight draw(Rng& rng, WeightRange w) { return uniform_int(rng, w.lo, w.hi); }

Weight range_bound(WeightRange w) { return std::max({checked_abs(w.lo), checked_abs(w.hi), Weight{1}}); }

}  // namespace

WeightedDigraph random_digraph(int n, std::int64_t m, WeightRange w, std::uint64_t seed) {
  if (n < 0 || m < 0 || w.lo > w.hi) throw PreconditionError("invalid random digraph parameters");
  Rng rng(seed);
  const std::int64_t slots = static_cast<std::int64_t>(n) * (n - 1);
  m = std::min(m, slots);
  std::vector<Edge> edges;
  if (m * 2 > slots) {
    // Dense: shuffle all pairs.
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(m);
    for (auto [u, v] : pairs) edges.push_back({u, v, 0});
  } else {
    std::set<std::pair<int, int>> seen;
    while (static_cast<std::int64_t>(edges.size()) < m) {
      int u = static_cast<int>(uniform_int(rng, 0, n - 1));
      int v = static_cast<int>(uniform_int(rng, 0, n - 1));
      if (u == v || !seen.emplace(u, v).second) continue;
      edges.push_back({u, v, 0});
    }
  }
  for (Edge& e : edges) e.weight = draw(rng, w);
  return WeightedDigraph(n, std::move(edges), range_bound(w));
}

CircleLayeredGraph random_layered(int k, int min_size, int max_size, double p, WeightRange w,
                                  std::uint64_t seed) {
  if (k < 3 || min_size < 0 || max_size < min_size || w.lo > w.hi)
    throw PreconditionError("invalid random layered parameters");
  Rng rng(seed);
  std::vector<int> layer_of;
  std::vector<std::vector<NodeId>> members(k);
  for (int i = 0; i < k; ++i) {
    int size = static_cast<int>(uniform_int(rng, min_size, max_size));
    for (int j = 0; j < size; ++j) {
      members[i].push_back(static_cast<NodeId>(layer_of.size()));
      layer_of.push_back(i);
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (NodeId u : members[i])
      for (NodeId v : members[(i + 1) % k])
        if (bernoulli(rng, p)) edges.push_back({u, v, draw(rng, w)});
  const int n = static_cast<int>(layer_of.size());
  return CircleLayeredGraph(WeightedDigraph(n, std::move(edges), range_bound(w)), k, std::move(layer_of));
}

WeightedDigraph planted_kcycle(int n, std::int64_t m, int k, Weight noise_hi, std::uint64_t seed) {
  if (k < 2 || k > n || noise_hi < 0) throw PreconditionError("invalid planted k-cycle parameters");
  Rng rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<int, int>> used;
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    int u = order[i], v = order[(i + 1) % k];
    used.emplace(u, v);
    edges.push_back({u, v, -1});
  }
  const std::int64_t slots = static_cast<std::int64_t>(n) * (n - 1);
  m = std::clamp<std::int64_t>(m, k, slots);
  while (static_cast<std::int64_t>(edges.size()) < m) {
    int u = static_cast<int>(uniform_int(rng, 0, n - 1));
    int v = static_cast<int>(uniform_int(rng, 0, n - 1));
    if (u == v || !used.emplace(u, v).second) continue;
    edges.push_back({u, v, uniform_int(rng, 0, noise_hi)});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.source, a.target) < std::pair(b.source, b.target); });
  return WeightedDigraph(n, std::move(edges), std::max<Weight>(noise_hi, 1));
}

UniformHypergraph random_clique_instance(int k, int part_size, double p, WeightRange w, std::uint64_t seed) {
  if (k < 2 || part_size < 0 || w.lo > w.hi) throw PreconditionError("invalid clique instance parameters");
  Rng rng(seed);
  const int n = k * part_size;
  std::vector<int> part_of(n);
  for (int v = 0; v < n; ++v) part_of[v] = v / part_size;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v] && bernoulli(rng, p)) edges.push_back({u, v, draw(rng, w)});
  return make_clique_instance(n, std::move(part_of), k, edges, range_bound(w));
}

UniformHypergraph planted_kclique(int k, int part_size, Weight noise_hi, std::uint64_t seed) {
  if (k < 2 || part_size < 1 || noise_hi < 0) throw PreconditionError("invalid planted clique parameters");
  Rng rng(seed);
  const int n = k * part_size;
  std::vector<int> part_of(n);
  for (int v = 0; v < n; ++v) part_of[v] = v / part_size;
  std::vector<NodeId> planted(k);
  for (int p = 0; p < k; ++p) planted[p] = p * part_size + static_cast<int>(uniform_int(rng, 0, part_size - 1));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] == part_of[v]) continue;
      bool in_clique = planted[part_of[u]] == u && planted[part_of[v]] == v;
      edges.push_back({u, v, in_clique ? -1 : uniform_int(rng, 0, noise_hi)});
    }
  return make_clique_instance(n, std::move(part_of), k, edges, std::max<Weight>(noise_hi, 1));
}

UniformHypergraph random_partite_hypergraph(int parts, int max_part, int arity, double p, WeightRange w,
                                            std::uint64_t seed) {
  if (parts < arity || arity < 2 || max_part < 1 || w.lo > w.hi)
    throw PreconditionError("invalid partite hypergraph parameters");
  Rng rng(seed);
  std::vector<int> part_of;
  std::vector<std::vector<NodeId>> members(parts);
  for (int i = 0; i < parts; ++i) {
    int size = static_cast<int>(uniform_int(rng, 1, max_part));
    for (int j = 0; j < size; ++j) {
      members[i].push_back(static_cast<NodeId>(part_of.size()));
      part_of.push_back(i);
    }
  }
  std::vector<Hyperedge> edges;
  // Every arity-subset of parts, then every transversal of it.
  std::vector<int> choose(arity);
  std::iota(choose.begin(), choose.end(), 0);
  while (true) {
    std::vector<int> pick(arity, 0);
    while (true) {
      bool empty = false;
      for (int j = 0; j < arity; ++j) empty |= members[choose[j]].empty();
      if (empty) break;
      if (bernoulli(rng, p)) {
        Hyperedge e;
        for (int j = 0; j < arity; ++j) e.nodes.push_back(members[choose[j]][pick[j]]);
        e.w1 = draw(rng, w);
        edges.push_back(std::move(e));
      }
      int j = arity - 1;
      while (j >= 0 && ++pick[j] == static_cast<int>(members[choose[j]].size())) pick[j--] = 0;
      if (j < 0) break;
    }
    int j = arity - 1;
    while (j >= 0 && choose[j] == parts - arity + j) --j;
    if (j < 0) break;
    ++choose[j];
    for (int t = j + 1; t < arity; ++t) choose[t] = choose[t - 1] + 1;
  }
  const int n = static_cast<int>(part_of.size());
  return UniformHypergraph(n, arity, std::move(part_of), parts, std::move(edges), range_bound(w));
}

UniformHypergraph random_hypergraph(int n, int arity, std::int64_t m, WeightRange w, std::uint64_t seed) {
  if (arity < 2 || n < arity || m < 0 || w.lo > w.hi) throw PreconditionError("invalid hypergraph parameters");
  Rng rng(seed);
  m = std::min<std::int64_t>(m, binomial(n, arity));
  std::set<std::vector<NodeId>> seen;
  std::vector<Hyperedge> edges;
  while (static_cast<std::int64_t>(edges.size()) < m) {
    std::set<NodeId> s;
    while (static_cast<int>(s.size()) < arity) s.insert(static_cast<NodeId>(uniform_int(rng, 0, n - 1)));
    std::vector<NodeId> nodes(s.begin(), s.end());
    if (!seen.insert(nodes).second) continue;
    edges.push_back({nodes, draw(rng, w), 0});
  }
  return UniformHypergraph(n, arity, std::move(edges), range_bound(w));
}

Cnf random_cnf(int n, int m, int k, std::uint64_t seed) {
  if (k < 1 || n < k || m < 0) throw PreconditionError("invalid CNF parameters");
  Rng rng(seed);
  Cnf f;
  f.variable_count = n;
  for (int i = 0; i < m; ++i) {
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < k) vars.insert(static_cast<int>(uniform_int(rng, 1, n)));
    std::vector<int> clause;
    for (int v : vars) clause.push_back(bernoulli(rng, 0.5) ? v : -v);
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace fgr
