#include "fgr/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "fgr/errors.hpp"
#include "fgr/fast_algos.hpp"
#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/parallel.hpp"
#include "fgr/reduce_csp.hpp"
#include "fgr/reduce_cycle.hpp"
#include "fgr/reduce_distance.hpp"
#include "fgr/rng.hpp"
#include "fgr/text_io.hpp"
#include "fgr/tuple_index.hpp"

namespace fgr {

namespace {

std::string show(const SolveResult& r) { return r.found ? std::to_string(r.weight) : "none"; }

TrialOutcome fail(TrialOutcome out, std::string expected, std::string got) {
  out.ok = false;
  out.expected = std::move(expected);
  out.got = std::move(got);
  return out;
}

double pick_density(Rng& rng, double lo = 0.2) {
  return std::min(1.0, lo + 0.1 * static_cast<double>(uniform_int(rng, 0, 8)));
}

// Compares a source optimum with a target optimum through the weight map.
// Returns the mapped-back target description on mismatch.
std::optional<std::string> compare_mapped(const SolveResult& src, const SolveResult& tgt, const WeightMap& map,
                                          bool corrupt) {
  if (src.found != tgt.found) return show(tgt);
  if (!tgt.found) return corrupt ? std::optional<std::string>("corrupted none") : std::nullopt;
  Weight t = tgt.weight + (corrupt ? 1 : 0);
  try {
    if (map.to_source(t) == src.weight) return std::nullopt;
    return std::to_string(map.to_source(t));
  } catch (const Error&) {
    return "target " + std::to_string(t) + " outside the weight map image";
  }
}

template <class Instance>
std::optional<std::string> pullback_check(const Instance& source, const SolveResult& src, const SolveResult& tgt,
                                          const std::function<Witness(const Witness&)>& pullback) {
  if (!tgt.found) return std::nullopt;
  if (!tgt.witness) return "target solver returned no witness";
  Witness w = pullback(*tgt.witness);
  if (auto bad = check_witness(source, w)) return "pulled-back witness invalid: " + *bad;
  if (w.claimed_weight != src.weight) return "pulled-back witness weighs " + std::to_string(w.claimed_weight);
  return std::nullopt;
}

// --- clique / hyperclique / hypercycle ---

TrialOutcome trial_clique_cycle(std::uint64_t seed, const CampaignOptions& o, bool direct) {
  Rng rng(seed);
  const int k = bernoulli(rng, 0.5) ? 3 : 5;
  const int size = static_cast<int>(uniform_int(rng, 1, 3));
  auto h = random_clique_instance(k, size, pick_density(rng, 0.4), {-8, 8}, rng());
  TrialOutcome out{true, "", "", emit_hypergraph(h), "hg"};
  SolveResult src = bf_min_clique(h, k);
  out.positive = src.found;
  auto red = direct ? clique_to_cycle_direct(h) : clique_to_cycle(h);
  if (red.instance.k() != k) return fail(out, "k = " + std::to_string(k), "layers " + std::to_string(red.instance.k()));
  SolveResult tgt = bf_min_kcycle(red.instance.graph(), k);
  if (auto bad = compare_mapped(src, tgt, red.weight_map, o.corrupt)) return fail(out, show(src), *bad);
  if (auto bad = pullback_check(h, src, tgt, red.pullback)) return fail(out, show(src), *bad);
  return out;
}

TrialOutcome trial_hyperclique_hypercycle(std::uint64_t seed, const CampaignOptions& o) {
  Rng rng(seed);
  const int k = bernoulli(rng, 0.5) ? 2 : 3;
  const int l = static_cast<int>(uniform_int(rng, k + 1, 6));
  auto h = random_partite_hypergraph(l, 3, k, pick_density(rng, 0.5), {-8, 8}, rng());
  TrialOutcome out{true, "", "", emit_hypergraph(h), "hg"};
  SolveResult src = bf_hyperclique(h, l, Objective::Min);
  out.positive = src.found;
  auto red = hyperclique_to_hypercycle(h);
  if (red.instance.arity() != gamma(l, k))
    return fail(out, "arity " + std::to_string(gamma(l, k)), "arity " + std::to_string(red.instance.arity()));
  SolveResult tgt = bf_hypercycle(red.instance, l, Objective::Min);
  if (auto bad = compare_mapped(src, tgt, red.weight_map, o.corrupt)) return fail(out, show(src), *bad);
  if (auto bad = pullback_check(h, src, tgt, red.pullback)) return fail(out, show(src), *bad);
  return out;
}

TrialOutcome trial_hypercycle_digraph(std::uint64_t seed, const CampaignOptions& o) {
  Rng rng(seed);
  const int l = static_cast<int>(uniform_int(rng, 3, 6));
  const int arity = static_cast<int>(uniform_int(rng, 2, l - 1));
  auto h = random_partite_hypergraph(l, 3, arity, pick_density(rng, 0.5), {-8, 8}, rng());
  TrialOutcome out{true, "", "", emit_hypergraph(h), "hg"};
  SolveResult src = bf_partite_hypercycle(h, Objective::Min);
  out.positive = src.found;
  auto red = hypercycle_to_digraph(h);
  SolveResult tgt = bf_min_kcycle(red.instance.graph(), l);
  if (auto bad = compare_mapped(src, tgt, red.weight_map, o.corrupt)) return fail(out, show(src), *bad);
  if (auto bad = pullback_check(h, src, tgt, red.pullback)) return fail(out, show(src), *bad);
  return out;
}

// --- k-cycle algorithms ---

struct FastInstance {
  WeightedDigraph g;
  int k;
};

FastInstance fast_instance(std::uint64_t seed) {
  Rng rng(seed);
  const int n = static_cast<int>(uniform_int(rng, 4, 12));
  const int k = static_cast<int>(uniform_int(rng, 3, 5));
  const std::int64_t m = uniform_int(rng, n, static_cast<std::int64_t>(n) * (n - 1));
  return {random_digraph(n, m, {-8, 8}, rng()), k};
}

TrialOutcome trial_fast(std::uint64_t seed, const CampaignOptions& o) {
  auto [g, k] = fast_instance(seed);
  TrialOutcome out{true, "", "", emit_digraph(g), "dg"};
  SolveResult src = bf_min_kcycle(g, k);
  out.positive = src.found;
  AlgoStats st;
  SolveResult got = min_weight_kcycle(g, k, derive_seed(seed, 99), &st);
  if (auto bad = compare_mapped(src, got, {1, 0}, o.corrupt)) return fail(out, show(src), *bad);
  if (got.found) {
    if (auto bad = check_witness(g, *got.witness)) return fail(out, show(src), "witness invalid: " + *bad);
  }
  const long double m = static_cast<long double>(g.edge_count());
  long double path_bound = m;
  for (int i = 0; i < (k + 1) / 2 - 1; ++i) path_bound *= st.delta;
  if (st.paths_enumerated > path_bound)
    return fail(out, "paths <= m*delta^(ceil(k/2)-1)", "paths " + std::to_string(st.paths_enumerated));
  if (static_cast<long double>(st.heavy_node_count) * st.delta > 2 * m)
    return fail(out, "heavy <= 2m/delta", "heavy " + std::to_string(st.heavy_node_count));
  return out;
}

TrialOutcome trial_shortest_cycle(std::uint64_t seed, const CampaignOptions& o) {
  auto [g, k] = fast_instance(seed);
  TrialOutcome out{true, "", "", emit_digraph(g), "dg"};
  const Weight W = 8;
  SolveResult src = bf_min_kcycle(g, k);
  out.positive = src.found;
  if (!src.found) {
    SolveResult r = min_kcycle_via_shortest_cycle(g, k, W, derive_seed(seed, 5), 3);
    if (r.found) return fail(out, "none", show(r));
    return out;
  }
  // Coloring aligned with the optimal cycle, other nodes random.
  Rng rng(derive_seed(seed, 6));
  Coloring col(g.node_count());
  for (int& c : col) c = static_cast<int>(uniform_int(rng, 0, k - 1));
  const auto& cyc = src.witness->items;
  for (int i = 0; i < k; ++i) col[cyc[i]] = i;
  auto red = min_kcycle_to_shortest_cycle(g, k, W, col);
  if (red.weight_map.shift != k * shortest_cycle_shift(W))
    return fail(out, "shift 4kW", "shift " + std::to_string(red.weight_map.shift));
  SolveResult tgt = bf_shortest_cycle(red.instance);
  if (auto bad = compare_mapped(src, tgt, red.weight_map, o.corrupt)) return fail(out, show(src), *bad);
  if (auto bad = pullback_check(g, src, tgt, red.pullback)) return fail(out, show(src), *bad);
  // Random colorings: a k-cycle answer is never below the optimum.
  for (int t = 0; t < 2; ++t) {
    auto other = min_kcycle_to_shortest_cycle(g, k, W, random_coloring(g.node_count(), k, derive_seed(seed, 7 + t)));
    SolveResult r = bf_shortest_cycle(other.instance);
    if (r.found && static_cast<int>(r.witness->items.size()) == k && other.weight_map.to_source(r.weight) < src.weight)
      return fail(out, show(src), "random coloring gave " + std::to_string(other.weight_map.to_source(r.weight)));
  }
  return out;
}

CircleLayeredGraph distance_instance(Rng& rng, Weight R, int max_layer) {
  const int k = bernoulli(rng, 0.5) ? 3 : 5;
  return random_layered(k, 1, max_layer, pick_density(rng), {-R, R}, rng());
}

TrialOutcome trial_negative_search(std::uint64_t seed, const CampaignOptions& o) {
  Rng rng(seed);
  const Weight R = uniform_int(rng, 1, 8);
  auto g = distance_instance(rng, R, 4);
  TrialOutcome out{true, "", "", emit_layered(g), "lg"};
  SolveResult src = bf_min_kcycle(g.graph(), g.k());
  out.positive = src.found;
  NegativeCycleSolver oracle = [](const CircleLayeredGraph& p) {
    SolveResult r = bf_min_kcycle(p.graph(), p.k());
    NegativeAnswer a;
    a.found = r.found && r.weight < 0;
    if (a.found) a.witness = r.witness;
    return a;
  };
  auto res = min_kcycle_via_negative_search(g, R, oracle);
  if (auto bad = compare_mapped(src, res.result, {1, 0}, o.corrupt)) return fail(out, show(src), *bad);
  if (res.probes > negative_search_probe_limit(R, g.k()))
    return fail(out, "probes <= " + std::to_string(negative_search_probe_limit(R, g.k())),
                "probes " + std::to_string(res.probes));
  if (res.result.found) {
    if (!res.result.witness) return fail(out, show(src), "no witness");
    if (auto bad = check_witness(g.graph(), *res.result.witness)) return fail(out, show(src), *bad);
  }
  return out;
}

TrialOutcome trial_density(std::uint64_t seed, const CampaignOptions& o) {
  auto [g, k] = fast_instance(seed);
  TrialOutcome out{true, "", "", emit_digraph(g), "dg"};
  SolveResult src = bf_min_kcycle(g, k);
  out.positive = src.found;
  KCycleSolver solver = [](const WeightedDigraph& h, int kk) { return bf_min_kcycle(h, kk); };
  SolveResult got = density_self_reduction(g, k, 2, 1.5, derive_seed(seed, 3), solver);
  if (auto bad = compare_mapped(src, got, {1, 0}, o.corrupt)) return fail(out, show(src), *bad);
  if (got.found)
    if (auto bad = check_witness(g, *got.witness)) return fail(out, show(src), *bad);
  return out;
}

// --- distance gadgets ---

std::string yes_no(bool b) { return b ? "yes" : "no"; }

TrialOutcome trial_radius(std::uint64_t seed, const CampaignOptions& o, bool weighted) {
  Rng rng(seed);
  const Weight R = weighted ? uniform_int(rng, 1, 8) : 1;
  auto g = distance_instance(rng, R, 8);
  TrialOutcome out{true, "", "", emit_layered(g), "lg"};
  SolveResult mc = bf_min_kcycle(g.graph(), g.k());
  const bool expect = weighted ? mc.found && mc.weight < 0 : mc.found;
  out.positive = expect;
  RadiusGadget gadget = weighted ? build_radius_gadget_weighted(g, R) : build_radius_gadget_unweighted(g);
  if (auto bad = audit_radius_gadget(gadget, g)) return fail(out, "audit clean", *bad);
  const Weight radius = bf_radius(gadget.graph);
  bool got = weighted ? radius < gadget.threshold : radius <= gadget.threshold;
  if (o.corrupt) got = !got;
  if (got != expect) return fail(out, yes_no(expect), yes_no(got) + " (radius " + std::to_string(radius) + ")");
  if (expect) {
    // The layer-0 node of the optimal cycle is a center within the threshold.
    NodeId center = -1;
    for (auto v : mc.witness->items)
      if (g.layer_of(static_cast<NodeId>(v)) == 0) center = static_cast<NodeId>(v);
    Distances d = single_source_distances(gadget.graph, center);
    Weight ecc = 0;
    for (const auto& x : d) ecc = std::max(ecc, x.value());
    if (weighted ? ecc >= gadget.threshold : ecc > gadget.threshold)
      return fail(out, "cycle node is a center", "eccentricity " + std::to_string(ecc));
  }
  return out;
}

TrialOutcome trial_wiener(std::uint64_t seed, const CampaignOptions& o, bool weighted) {
  Rng rng(seed);
  const Weight R = weighted ? uniform_int(rng, 1, 8) : 1;
  auto g = distance_instance(rng, R, 8);
  TrialOutcome out{true, "", "", emit_layered(g), "lg"};
  SolveResult mc = bf_min_kcycle(g.graph(), g.k());
  const bool expect = weighted ? mc.found && mc.weight < 0 : mc.found;
  out.positive = expect;
  WienerGadget gadget = weighted ? build_wiener_gadget_weighted(g, R) : build_wiener_gadget_unweighted(g);
  int calls = 0;
  DistanceSolver counting = [&](const WeightedDigraph& h) {
    ++calls;
    return bf_wiener(h);
  };
  WienerEvaluation ev = evaluate_wiener(gadget, counting);
  if (calls != 4) return fail(out, "4 Wiener calls", std::to_string(calls) + " calls");
  bool got = ev.value < gadget.threshold;
  if (o.corrupt) got = !got;
  if (got != expect) return fail(out, yes_no(expect), yes_no(got));
  if (!expect && ev.value != gadget.threshold)
    return fail(out, "combination " + std::to_string(gadget.threshold), std::to_string(ev.value));
  DistanceMatrix d = bf_apsp(gadget.graph);
  Weight direct = 0;
  for (NodeId a : gadget.v1)
    for (NodeId b : gadget.v1_prime) direct += d[a][b].value();
  if (direct != ev.value) return fail(out, "identity " + std::to_string(direct), std::to_string(ev.value));
  return out;
}

// --- CSP ---

struct CnfInstance {
  Cnf cnf;
  CspInstance csp;
};

CnfInstance cnf_instance(Rng& rng, int n_lo, int n_hi, int m_hi) {
  const int n = static_cast<int>(uniform_int(rng, n_lo, n_hi));
  const int m = static_cast<int>(uniform_int(rng, 1, m_hi));
  Cnf f = random_cnf(n, m, 3, rng());
  return {f, cnf_to_csp(f)};
}

// Checks the assignment <-> hyperclique bijection and the weight bounds.
std::optional<std::string> check_bijection(const CspInstance& f, const CspHyperclique& red) {
  const auto& h = red.instance;
  const int n = f.variable_count();
  const int k = red.arity;
  const int l = red.split.l;
  const long double m = static_cast<long double>(f.clauses().size());
  const long double w1_limit = m * std::pow(2.0L * std::max(n, 1), k);
  for (const auto& e : h.edges()) {
    if (static_cast<long double>(checked_abs(e.w1)) > w1_limit) return "W_1 bound violated";
    if (e.w2 * l > static_cast<Weight>(k) * red.split.padded_variables()) return "W_2 bound violated";
  }
  const auto classes = k_subsets(l, k);
  Assignment a(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Weight ones = 0;
    for (int i = 0; i < n; ++i) {
      a[i] = (mask >> (n - 1 - i)) & 1;
      ones += a[i];
    }
    std::vector<NodeId> nodes(l);
    const int s = red.split.group_size;
    for (int g = 0; g < l; ++g) {
      std::uint32_t bits = 0;
      for (int j = 0; j < s; ++j) {
        const int var = g * s + j;
        bits = (bits << 1) | (var < n ? a[var] : 0);
      }
      nodes[g] = red.split.node(g, bits);
    }
    Weight w1 = 0, w2 = 0;
    for (const auto& c : classes) {
      std::vector<NodeId> sub;
      for (int g : c) sub.push_back(nodes[g]);
      const Hyperedge* e = h.lookup(sub);
      if (!e) return "assignment " + std::to_string(mask) + " has no hyperclique";
      w1 += e->w1;
      w2 += e->w2;
    }
    if (w1 != f.evaluate(a) || w2 != ones) return "assignment " + std::to_string(mask) + " totals differ";
    std::vector<std::int64_t> items(nodes.begin(), nodes.end());
    if (decode_assignment(red.split, items) != a) return "decode differs for assignment " + std::to_string(mask);
  }
  return std::nullopt;
}

TrialOutcome trial_maxsat_hyperclique(std::uint64_t seed, const CampaignOptions& o) {
  Rng rng(seed);
  auto [cnf, f] = cnf_instance(rng, 3, 10, 20);
  TrialOutcome out{true, "", "", emit_dimacs(cnf), "cnf"};
  const int l = 6;
  SolveResult src = bf_max_ksat(f);
  out.positive = src.weight == static_cast<Weight>(f.clauses().size());
  CspHyperclique red = csp_to_hyperclique(f, l);
  if (auto bad = check_bijection(f, red)) return fail(out, "bijection", *bad);
  SolveResult tgt = bf_hyperclique(red.instance, l, Objective::Max);
  if (auto bad = compare_mapped(src, tgt, {1, 0}, o.corrupt)) return fail(out, show(src), *bad);
  if (auto bad = pullback_check(f, src, tgt, red.pullback)) return fail(out, show(src), *bad);
  return out;
}

TrialOutcome trial_exact_csp(std::uint64_t seed, const CampaignOptions& o) {
  Rng rng(seed);
  auto [cnf, f] = cnf_instance(rng, 3, 10, 20);
  TrialOutcome out{true, "", "", emit_dimacs(cnf), "cnf"};
  Assignment planted(f.variable_count());
  Weight kv = 0;
  for (auto& b : planted) {
    b = bernoulli(rng, 0.5);
    kv += b;
  }
  CspInstance ft(f.variable_count(), f.clauses(), CspTargets{kv, f.evaluate(planted)});
  ExactHypercliqueSolver solver = [](const UniformHypergraph& h, int size, Weight target) {
    return bf_hyperclique(h, size, Objective::Exact, target);
  };
  ExactCspResult r = exact_csp_via_hyperclique(ft, 6, solver);
  SolveResult src = bf_exact_csp(ft);
  out.positive = src.found;
  if (!r.result.found || !src.found) return fail(out, "planted target found", "not found");
  if (r.multiplier <= f.variable_count()) return fail(out, "multiplier > n", std::to_string(r.multiplier));
  if (auto bad = check_witness(ft, *r.result.witness)) return fail(out, "valid witness", *bad);
  if (o.corrupt) return fail(out, "found", "corrupted");
  // K_p one above the clause count is infeasible.
  CspInstance infeasible(f.variable_count(), f.clauses(),
                         CspTargets{kv, static_cast<Weight>(f.clauses().size()) + 1});
  if (exact_csp_via_hyperclique(infeasible, 6, solver).result.found) return fail(out, "none", "found");
  return out;
}

TrialOutcome trial_guessing(std::uint64_t seed, const CampaignOptions& o) {
  Rng rng(seed);
  auto [cnf, f] = cnf_instance(rng, 4, 4, 8);
  TrialOutcome out{true, "", "", emit_dimacs(cnf), "cnf"};
  HypercliqueSolver weighted = [](const UniformHypergraph& h, int size) {
    return bf_hyperclique(h, size, Objective::Max);
  };
  HypercliqueSolver guessing = [](const UniformHypergraph& h, int) {
    return max_hyperclique_via_guessing(h, bf_detect_hyperclique);
  };
  SolveResult a = max_csp_via_hyperclique(f, 4, weighted);
  out.positive = a.weight == static_cast<Weight>(f.clauses().size());
  SolveResult b = max_csp_via_hyperclique(f, 4, guessing);
  if (auto bad = compare_mapped(a, b, {1, 0}, o.corrupt)) return fail(out, show(a), *bad);
  if (b.found)
    if (auto bad = check_witness(f, *b.witness)) return fail(out, show(a), *bad);
  return out;
}

TrialOutcome trial_maxsat_cycle(std::uint64_t seed, const CampaignOptions& o) {
  Rng rng(seed);
  auto [cnf, f] = cnf_instance(rng, 3, 6, 8);
  TrialOutcome out{true, "", "", emit_dimacs(cnf), "cnf"};
  const int l = 4;
  SolveResult src = bf_max_ksat(f);
  out.positive = src.weight == static_cast<Weight>(f.clauses().size());
  SatCycleReduction red = maxksat_to_cycle(f, l);
  if (red.gamma != gamma(l, 3)) return fail(out, "gamma", std::to_string(red.gamma));
  SolveResult tgt = bf_min_kcycle(red.cycle.instance.graph(), l);
  if (auto bad = compare_mapped(src, tgt, red.cycle.weight_map, o.corrupt)) return fail(out, show(src), *bad);
  if (auto bad = pullback_check(f, src, tgt, red.cycle.pullback)) return fail(out, show(src), *bad);
  SolveResult driver = max_sat_via_cycle(f, l, layered_min_kcycle);
  if (driver.weight != src.weight) return fail(out, show(src), "driver " + show(driver));
  return out;
}

std::string cache_directory(const CampaignOptions& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("FGRED_CACHE_DIR"); env && *env) return env;
  return "fgred-failures";
}

}  // namespace

const std::vector<CampaignSpec>& campaign_registry() {
  static const std::vector<CampaignSpec> registry = {
      {"clique-cycle", "k-clique -> k-cycle through the hypercycle",
       [](std::uint64_t s, const CampaignOptions& o) { return trial_clique_cycle(s, o, false); }},
      {"clique-cycle-direct", "k-clique -> k-cycle, L! scaled construction",
       [](std::uint64_t s, const CampaignOptions& o) { return trial_clique_cycle(s, o, true); }},
      {"hyperclique-hypercycle", "l-hyperclique -> tight l-hypercycle", trial_hyperclique_hypercycle},
      {"hypercycle-digraph", "tight hypercycle -> directed cycle", trial_hypercycle_digraph},
      {"min-kcycle-fast", "heavy/light minimum k-cycle algorithm", trial_fast},
      {"shortest-cycle", "minimum k-cycle -> shortest cycle", trial_shortest_cycle},
      {"negative-search", "minimum k-cycle by negative k-cycle probes", trial_negative_search},
      {"density", "density self-reduction", trial_density},
      {"radius-weighted", "negative k-cycle -> weighted radius",
       [](std::uint64_t s, const CampaignOptions& o) { return trial_radius(s, o, true); }},
      {"radius-unweighted", "k-cycle -> unweighted radius",
       [](std::uint64_t s, const CampaignOptions& o) { return trial_radius(s, o, false); }},
      {"wiener-weighted", "negative k-cycle -> weighted Wiener index",
       [](std::uint64_t s, const CampaignOptions& o) { return trial_wiener(s, o, true); }},
      {"wiener-unweighted", "k-cycle -> unweighted Wiener index",
       [](std::uint64_t s, const CampaignOptions& o) { return trial_wiener(s, o, false); }},
      {"maxsat-hyperclique", "Max-3-SAT -> maximum hyperclique", trial_maxsat_hyperclique},
      {"exact-csp", "exact-weight CSP -> exact hyperclique", trial_exact_csp},
      {"guessing", "weighted vs weight-guessing hyperclique", trial_guessing},
      {"maxsat-cycle", "Max-3-SAT -> minimum l-cycle", trial_maxsat_cycle},
  };
  return registry;
}

std::vector<std::string> campaign_names() {
  std::vector<std::string> names;
  for (const auto& c : campaign_registry()) names.push_back(c.name);
  names.push_back("radius");
  names.push_back("wiener");
  return names;
}

std::uint64_t campaign_trial_seed(std::uint64_t seed, std::int64_t trial) {
  return derive_seed(seed, static_cast<std::uint64_t>(trial));
}

namespace {

const CampaignSpec& find_campaign(const std::string& name) {
  for (const auto& c : campaign_registry())
    if (c.name == name) return c;
  throw PreconditionError("unknown reduction '" + name + "'");
}

}  // namespace

TrialOutcome run_single_trial(const std::string& name, std::uint64_t trial_seed, const CampaignOptions& options) {
  return find_campaign(name).trial(trial_seed, options);
}

CampaignReport run_campaign(const std::string& name, const CampaignOptions& options) {
  if (name == "radius" || name == "wiener") {
    CampaignReport a = run_campaign(name + "-weighted", options);
    CampaignReport b = run_campaign(name + "-unweighted", options);
    CampaignReport r;
    r.reduction = name;
    r.trials = a.trials + b.trials;
    r.mismatches = a.mismatches + b.mismatches;
    r.positives = a.positives + b.positives;
    r.first_failure = a.first_failure ? a.first_failure : b.first_failure;
    r.wall_seconds = a.wall_seconds + b.wall_seconds;
    r.budget_exhausted = a.budget_exhausted || b.budget_exhausted;
    return r;
  }
  const CampaignSpec& spec = find_campaign(name);
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  CampaignReport report;
  report.reduction = name;
  std::mutex merge;
  std::optional<std::pair<std::int64_t, TrialOutcome>> first;
  std::int64_t ran = 0;
  parallel_for(options.trials, options.threads, [&](std::int64_t t) {
    if (options.time_budget_seconds > 0 && elapsed() > options.time_budget_seconds) {
      std::lock_guard<std::mutex> lock(merge);
      report.budget_exhausted = true;
      return;
    }
    const std::uint64_t s = campaign_trial_seed(options.seed, t);
    TrialOutcome r;
    try {
      r = spec.trial(s, options);
    } catch (const std::exception& e) {
      r.ok = false;
      r.expected = "no error";
      r.got = std::string("error: ") + e.what();
    }
    std::lock_guard<std::mutex> lock(merge);
    ++ran;
    if (r.positive) ++report.positives;
    if (r.ok) return;
    ++report.mismatches;
    if (!first || t < first->first) first.emplace(t, std::move(r));
  });
  report.trials = ran;
  if (first) {
    CampaignFailure f;
    f.trial = first->first;
    f.seed = campaign_trial_seed(options.seed, first->first);
    f.expected = first->second.expected;
    f.got = first->second.got;
    if (!first->second.instance.empty()) {
      std::error_code ec;
      const std::filesystem::path dir = cache_directory(options);
      std::filesystem::create_directories(dir, ec);
      const auto path = dir / (name + "-trial" + std::to_string(f.trial) + "." + first->second.extension);
      std::ofstream file(path);
      if (file << first->second.instance) f.instance_path = path.string();
    }
    report.first_failure = std::move(f);
  }
  report.wall_seconds = elapsed();
  return report;
}

std::string format_report(const CampaignReport& r) {
  std::ostringstream os;
  os << "reduction " << r.reduction << " trials " << r.trials << " positives " << r.positives << " mismatches "
     << r.mismatches << " wall " << r.wall_seconds << "s";
  if (r.budget_exhausted) os << " (time budget exhausted)";
  os << "\n";
  if (r.first_failure) {
    const auto& f = *r.first_failure;
    os << "first_failure trial " << f.trial << " seed " << f.seed << " instance "
       << (f.instance_path.empty() ? "(not written)" : f.instance_path) << "\n"
       << "  expected " << f.expected << "\n"
       << "  got " << f.got << "\n";
  }
  return os.str();
}

}  // namespace fgr
