#include "fgr/oracles.hpp"

#include <algorithm>
#include <limits>

#include "fgr/errors.hpp"

namespace fgr {

namespace {

class WorkCounter {
 public:
  explicit WorkCounter(const char* who) : who_(who) {}
  void tick() {
    if (++count_ > kOracleWorkCap) throw EnumerationLimit(std::string(who_) + ": enumeration work cap exceeded");
  }

 private:
  const char* who_;
  std::int64_t count_ = 0;
};

Witness make_witness(WitnessKind kind, const std::vector<NodeId>& nodes, Weight w) {
  return {kind, std::vector<std::int64_t>(nodes.begin(), nodes.end()), w};
}

bool improves(Objective objective, Weight candidate, Weight best) {
  return objective == Objective::Max ? candidate > best : candidate < best;
}

// Simple-cycle enumeration from each start s through nodes > s, in
// lexicographic order. `length` 0 means any length >= 2.
SolveResult min_cycle_search(const WeightedDigraph& g, int length, const char* who) {
  WorkCounter work(who);
  SolveResult best;
  std::vector<NodeId> path;
  std::vector<char> used(g.node_count(), 0);
  auto dfs = [&](auto&& self, NodeId u, Weight w) -> void {
    work.tick();
    const NodeId s = path.front();
    const int depth = static_cast<int>(path.size());
    for (const Arc& a : g.out(u)) {
      if (a.node == s) {
        if (depth >= 2 && (length == 0 || depth == length)) {
          Weight total = checked_add(w, a.weight);
          if (!best.found || total < best.weight) best = SolveResult::of(make_witness(WitnessKind::Cycle, path, total));
        }
        continue;
      }
      if (a.node < s || used[a.node]) continue;
      if (length != 0 && depth >= length) continue;
      used[a.node] = 1;
      path.push_back(a.node);
      self(self, a.node, checked_add(w, a.weight));
      path.pop_back();
      used[a.node] = 0;
    }
  };
  for (NodeId s = 0; s < g.node_count(); ++s) {
    path.assign(1, s);
    used[s] = 1;
    dfs(dfs, s, 0);
    used[s] = 0;
  }
  return best;
}

}  // namespace

SolveResult bf_min_clique(const UniformHypergraph& g, int size) {
  if (g.arity() != 2) throw PreconditionError("bf_min_clique needs a 2-uniform instance");
  if (size < 3) throw PreconditionError("clique size must be at least 3");
  WorkCounter work("bf_min_clique");
  SolveResult best;
  std::vector<NodeId> chosen;
  auto pair_weight = [&](NodeId a, NodeId b) -> const Hyperedge* {
    return g.lookup(a < b ? std::vector<NodeId>{a, b} : std::vector<NodeId>{b, a});
  };
  auto dfs = [&](auto&& self, NodeId next, Weight w) -> void {
    work.tick();
    if (static_cast<int>(chosen.size()) == size) {
      if (!best.found || w < best.weight) best = SolveResult::of(make_witness(WitnessKind::Clique, chosen, w));
      return;
    }
    for (NodeId v = next; v < g.node_count(); ++v) {
      Weight add = 0;
      bool ok = true;
      for (NodeId u : chosen) {
        const Hyperedge* e = pair_weight(u, v);
        if (!e) {
          ok = false;
          break;
        }
        add = checked_add(add, e->w1);
      }
      if (!ok) continue;
      chosen.push_back(v);
      self(self, v + 1, checked_add(w, add));
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

SolveResult bf_min_kcycle(const WeightedDigraph& g, int k) {
  if (k < 2) throw PreconditionError("cycle length must be at least 2");
  return min_cycle_search(g, k, "bf_min_kcycle");
}

bool bf_kcycle_detect(const WeightedDigraph& g, int k) { return bf_min_kcycle(g, k).found; }

SolveResult bf_shortest_cycle(const WeightedDigraph& g) { return min_cycle_search(g, 0, "bf_shortest_cycle"); }

SolveResult bf_hyperclique(const UniformHypergraph& h, int size, Objective objective, Weight target) {
  const int k = h.arity();
  if (size <= k) throw PreconditionError("hyperclique size must exceed the arity");
  WorkCounter work("bf_hyperclique");
  SolveResult best;
  std::vector<NodeId> chosen;
  std::vector<char> part_used(std::max(h.part_count(), 1), 0);
  std::vector<int> pick;
  bool stop = false;
  // Sum of w1 over the arity-subsets of chosen ∪ {v} containing v; nullopt if
  // one is missing.
  auto extension = [&](NodeId v) -> std::optional<Weight> {
    const int c = static_cast<int>(chosen.size());
    if (c < k - 1) return Weight{0};
    Weight total = 0;
    pick.resize(k - 1);
    for (int j = 0; j < k - 1; ++j) pick[j] = j;
    std::vector<NodeId> nodes(k);
    while (true) {
      for (int j = 0; j < k - 1; ++j) nodes[j] = chosen[pick[j]];
      nodes[k - 1] = v;
      const Hyperedge* e = h.lookup(nodes);
      if (!e) return std::nullopt;
      total = checked_add(total, e->w1);
      int j = k - 2;
      while (j >= 0 && pick[j] == c - (k - 1) + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t = j + 1; t < k - 1; ++t) pick[t] = pick[t - 1] + 1;
    }
    return total;
  };
  auto dfs = [&](auto&& self, NodeId next, Weight w) -> void {
    work.tick();
    if (static_cast<int>(chosen.size()) == size) {
      if (objective == Objective::Exact) {
        if (w == target) {
          best = SolveResult::of(make_witness(WitnessKind::Hyperclique, chosen, w));
          stop = true;
        }
      } else if (!best.found || improves(objective, w, best.weight)) {
        best = SolveResult::of(make_witness(WitnessKind::Hyperclique, chosen, w));
      }
      return;
    }
    for (NodeId v = next; v < h.node_count() && !stop; ++v) {
      if (h.partitioned() && part_used[h.part_of(v)]) continue;
      auto add = extension(v);
      if (!add) continue;
      chosen.push_back(v);
      if (h.partitioned()) part_used[h.part_of(v)] = 1;
      self(self, v + 1, checked_add(w, *add));
      if (h.partitioned()) part_used[h.part_of(v)] = 0;
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

SolveResult bf_hypercycle(const UniformHypergraph& h, int length, Objective objective) {
  const int k = h.arity();
  if (length < k) throw PreconditionError("hypercycle length must be at least the arity");
  if (objective == Objective::Exact) throw PreconditionError("bf_hypercycle supports min and max only");
  WorkCounter work("bf_hypercycle");
  SolveResult best;
  std::vector<NodeId> seq;
  std::vector<char> used(h.node_count(), 0);
  std::vector<NodeId> window(k);
  auto window_weight = [&](int start) -> std::optional<Weight> {
    for (int j = 0; j < k; ++j) window[j] = seq[(start + j) % length];
    std::sort(window.begin(), window.end());
    const Hyperedge* e = h.lookup(window);
    if (!e) return std::nullopt;
    return e->w1;
  };
  auto dfs = [&](auto&& self, Weight w) -> void {
    work.tick();
    const int depth = static_cast<int>(seq.size());
    if (depth == length) {
      Weight total = w;
      for (int start = length - k + 1; start < length; ++start) {
        auto ww = window_weight(start);
        if (!ww) return;
        total = checked_add(total, *ww);
      }
      if (!best.found || improves(objective, total, best.weight))
        best = SolveResult::of(make_witness(WitnessKind::Hypercycle, seq, total));
      return;
    }
    for (NodeId v = seq.front() + 1; v < h.node_count(); ++v) {
      if (used[v]) continue;
      seq.push_back(v);
      Weight add = 0;
      bool ok = true;
      if (depth + 1 >= k) {
        auto ww = window_weight(depth + 1 - k);
        ok = ww.has_value();
        if (ok) add = *ww;
      }
      if (ok) {
        used[v] = 1;
        self(self, checked_add(w, add));
        used[v] = 0;
      }
      seq.pop_back();
    }
  };
  for (NodeId s = 0; s < h.node_count(); ++s) {
    seq.assign(1, s);
    used[s] = 1;
    dfs(dfs, 0);
    used[s] = 0;
  }
  return best;
}

SolveResult bf_partite_hypercycle(const UniformHypergraph& h, Objective objective) {
  if (!h.partitioned()) throw PreconditionError("bf_partite_hypercycle needs a partitioned hypergraph");
  const int k = h.part_count();
  const int a = h.arity();
  if (a > k) throw PreconditionError("bf_partite_hypercycle needs arity <= part count");
  if (objective == Objective::Exact) throw PreconditionError("bf_partite_hypercycle supports min and max only");
  for (int i = 0; i < k; ++i)
    if (h.part(i).empty()) return SolveResult::none();
  WorkCounter work("bf_partite_hypercycle");
  SolveResult best;
  std::vector<int> pos(k, 0);
  std::vector<NodeId> seq(k), window(a);
  while (true) {
    work.tick();
    for (int i = 0; i < k; ++i) seq[i] = h.part(i)[pos[i]];
    Weight total = 0;
    bool ok = true;
    for (int start = 0; start < k && ok; ++start) {
      for (int j = 0; j < a; ++j) window[j] = seq[(start + j) % k];
      std::sort(window.begin(), window.end());
      const Hyperedge* e = h.lookup(window);
      if (!e) ok = false;
      else total = checked_add(total, e->w1);
    }
    if (ok && (!best.found || improves(objective, total, best.weight)))
      best = SolveResult::of(make_witness(WitnessKind::Hypercycle, seq, total));
    int i = k - 1;
    while (i >= 0 && ++pos[i] == static_cast<int>(h.part(i).size())) pos[i--] = 0;
    if (i < 0) break;
  }
  return best;
}

Distances single_source_distances(const WeightedDigraph& g, NodeId s) {
  const int n = g.node_count();
  Distances d(n);
  d[s] = 0;
  for (int round = 0; round <= n; ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (!d[e.source]) continue;
      Weight cand = checked_add(*d[e.source], e.weight);
      if (!d[e.target] || cand < *d[e.target]) {
        d[e.target] = cand;
        changed = true;
      }
    }
    if (!changed) return d;
  }
  throw PreconditionError("negative cycle reachable from source " + std::to_string(s));
}

DistanceMatrix bf_apsp(const WeightedDigraph& g) {
  const int n = g.node_count();
  DistanceMatrix d(n, Distances(n));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges())
    if (!d[e.source][e.target] || e.weight < *d[e.source][e.target]) d[e.source][e.target] = e.weight;
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i) {
      if (!d[i][m]) continue;
      for (int j = 0; j < n; ++j) {
        if (!d[m][j]) continue;
        Weight cand = checked_add(*d[i][m], *d[m][j]);
        if (!d[i][j] || cand < *d[i][j]) d[i][j] = cand;
      }
    }
  for (int i = 0; i < n; ++i)
    if (*d[i][i] < 0) throw PreconditionError("negative cycle through node " + std::to_string(i));
  return d;
}

Weight bf_radius(const WeightedDigraph& g) {
  if (g.node_count() == 0) throw PreconditionError("radius of an empty graph");
  auto d = bf_apsp(g);
  std::optional<Weight> best;
  for (const auto& row : d) {
    Weight ecc = std::numeric_limits<Weight>::min();
    for (const auto& x : row) {
      if (!x) throw PreconditionError("graph is not connected");
      ecc = std::max(ecc, *x);
    }
    if (!best || ecc < *best) best = ecc;
  }
  return *best;
}

Weight bf_wiener(const WeightedDigraph& g) {
  auto d = bf_apsp(g);
  Weight total = 0;
  for (const auto& row : d)
    for (const auto& x : row) {
      if (!x) throw PreconditionError("graph is not connected");
      total = checked_add(total, *x);
    }
  return total;
}

namespace {

// Enumerates assignments in lexicographic order (x1 most significant).
template <class F>
void for_each_assignment(int n, F&& f) {
  if (n > kOracleMaxVariables) throw EnumerationLimit("assignment enumeration capped at 2^24");
  Assignment a(n, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) a[i] = (mask >> (n - 1 - i)) & 1;
    if (!f(a)) return;
  }
}

Witness assignment_witness(const Assignment& a, Weight w) {
  return {WitnessKind::Assignment, std::vector<std::int64_t>(a.begin(), a.end()), w};
}

}  // namespace

SolveResult bf_max_ksat(const CspInstance& f) {
  SolveResult best;
  for_each_assignment(f.variable_count(), [&](const Assignment& a) {
    Weight w = f.evaluate(a);
    if (!best.found || w > best.weight) best = SolveResult::of(assignment_witness(a, w));
    return true;
  });
  return best;
}

SolveResult bf_exact_csp(const CspInstance& f) {
  if (!f.targets()) throw PreconditionError("exact CSP needs targets K_v and K_p");
  SolveResult best;
  for_each_assignment(f.variable_count(), [&](const Assignment& a) {
    Weight ones = std::count(a.begin(), a.end(), 1);
    if (ones != f.targets()->k_v) return true;
    Weight w = f.evaluate(a);
    if (w != f.targets()->k_p) return true;
    best = SolveResult::of(assignment_witness(a, w));
    return false;
  });
  return best;
}

namespace {

CheckResult distinct_in_range(const std::vector<std::int64_t>& items, int n) {
  std::vector<std::int64_t> s = items;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) return "node id out of range";
    if (i > 0 && s[i] == s[i - 1]) return "not simple";
  }
  return std::nullopt;
}

CheckResult weight_matches(Weight claimed, Weight actual) {
  if (claimed != actual)
    return "weight mismatch: claimed " + std::to_string(claimed) + ", actual " + std::to_string(actual);
  return std::nullopt;
}

}  // namespace

CheckResult check_witness(const WeightedDigraph& g, const Witness& w) {
  if (w.kind != WitnessKind::Cycle) return "expected a cycle witness";
  if (w.items.size() < 2) return "cycle needs at least two nodes";
  if (auto r = distinct_in_range(w.items, g.node_count())) return r;
  Weight total = 0;
  for (std::size_t i = 0; i < w.items.size(); ++i) {
    auto u = static_cast<NodeId>(w.items[i]), v = static_cast<NodeId>(w.items[(i + 1) % w.items.size()]);
    auto e = g.weight(u, v);
    if (!e) return "missing edge " + std::to_string(u) + " " + std::to_string(v);
    total = checked_add(total, *e);
  }
  return weight_matches(w.claimed_weight, total);
}

CheckResult check_witness(const UniformHypergraph& h, const Witness& w) {
  const int k = h.arity();
  if (auto r = distinct_in_range(w.items, h.node_count())) return r;
  std::vector<NodeId> nodes(w.items.begin(), w.items.end());
  Weight total = 0;
  if (w.kind == WitnessKind::Clique || w.kind == WitnessKind::Hyperclique) {
    if (w.kind == WitnessKind::Clique && k != 2) return "clique witness needs a 2-uniform instance";
    if (static_cast<int>(nodes.size()) < k) return "too few nodes";
    std::sort(nodes.begin(), nodes.end());
    const int c = static_cast<int>(nodes.size());
    std::vector<int> pick(k);
    for (int j = 0; j < k; ++j) pick[j] = j;
    std::vector<NodeId> sub(k);
    while (true) {
      for (int j = 0; j < k; ++j) sub[j] = nodes[pick[j]];
      const Hyperedge* e = h.lookup(sub);
      if (!e) return "not a clique: missing hyperedge";
      total = checked_add(total, e->w1);
      int j = k - 1;
      while (j >= 0 && pick[j] == c - k + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t = j + 1; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
    return weight_matches(w.claimed_weight, total);
  }
  if (w.kind == WitnessKind::Hypercycle) {
    const int len = static_cast<int>(nodes.size());
    if (len < k) return "hypercycle shorter than the arity";
    std::vector<NodeId> window(k);
    for (int s = 0; s < len; ++s) {
      for (int j = 0; j < k; ++j) window[j] = nodes[(s + j) % len];
      std::sort(window.begin(), window.end());
      const Hyperedge* e = h.lookup(window);
      if (!e) return "window " + std::to_string(s) + " is not a hyperedge";
      total = checked_add(total, e->w1);
    }
    return weight_matches(w.claimed_weight, total);
  }
  return "witness variant incompatible with a hypergraph";
}

CheckResult check_witness(const CspInstance& f, const Witness& w) {
  if (w.kind != WitnessKind::Assignment) return "expected an assignment witness";
  if (static_cast<int>(w.items.size()) != f.variable_count()) return "assignment length differs from variable count";
  Assignment a;
  for (auto b : w.items) {
    if (b != 0 && b != 1) return "assignment entry is not a bit";
    a.push_back(static_cast<std::uint8_t>(b));
  }
  return weight_matches(w.claimed_weight, f.evaluate(a));
}

}  // namespace fgr
