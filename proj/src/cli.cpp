#include "fgr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fgr/campaign.hpp"
#include "fgr/errors.hpp"
#include "fgr/fast_algos.hpp"
#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/reduce_csp.hpp"
#include "fgr/reduce_cycle.hpp"
#include "fgr/reduce_distance.hpp"
#include "fgr/rng.hpp"
#include "fgr/text_io.hpp"

namespace fgr {

namespace {

using Clock = std::chrono::steady_clock;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) throw UsageError("cannot write " + path);
}

struct Globals {
  std::uint64_t seed = 1;
  int threads = 1;
  double time_budget = 0;
};

// --- gen ---

struct GenArgs {
  std::string kind;
  int n = 10;
  std::int64_t m = 20;
  int k = 3;
  double p = 0.5;
  int part_size = 3;
  int parts = 4;
  int max_part = 3;
  int arity = 3;
  int min_size = 1;
  int max_size = 3;
  Weight wlo = -8;
  Weight whi = 8;
  Weight noise = 8;
  std::string out;
};

int cmd_gen(const GenArgs& a, const Globals& g, std::ostream& out) {
  const WeightRange w{a.wlo, a.whi};
  std::string text;
  if (a.kind == "digraph") {
    text = emit_digraph(random_digraph(a.n, a.m, w, g.seed));
  } else if (a.kind == "layered") {
    text = emit_layered(random_layered(a.k, a.min_size, a.max_size, a.p, w, g.seed));
  } else if (a.kind == "planted-kcycle") {
    text = emit_digraph(planted_kcycle(a.n, a.m, a.k, a.noise, g.seed));
  } else if (a.kind == "clique") {
    text = emit_hypergraph(random_clique_instance(a.k, a.part_size, a.p, w, g.seed));
  } else if (a.kind == "planted-kclique") {
    text = emit_hypergraph(planted_kclique(a.k, a.part_size, a.noise, g.seed));
  } else if (a.kind == "cnf") {
    text = emit_dimacs(random_cnf(a.n, static_cast<int>(a.m), a.k, g.seed));
  } else if (a.kind == "hypergraph") {
    text = emit_hypergraph(random_hypergraph(a.n, a.arity, a.m, w, g.seed));
  } else if (a.kind == "partite-hypergraph") {
    text = emit_hypergraph(random_partite_hypergraph(a.parts, a.max_part, a.arity, a.p, w, g.seed));
  } else {
    throw UsageError("unknown kind '" + a.kind + "'");
  }
  write_file(a.out, text, out);
  return 0;
}

// --- shared input handling ---

struct Input {
  std::string format;
  std::string text;
};

Input load(const std::string& path) {
  Input in{"", read_file(path)};
  in.format = detect_format(in.text);
  return in;
}

WeightedDigraph as_digraph(const Input& in) {
  if (in.format == "digraph") return parse_digraph(in.text);
  if (in.format == "layered") return parse_layered(in.text).graph();
  throw UsageError("expected a digraph or layered instance, got '" + in.format + "'");
}

CircleLayeredGraph as_layered(const Input& in) {
  if (in.format != "layered") throw UsageError("expected a layered instance, got '" + in.format + "'");
  return parse_layered(in.text);
}

UniformHypergraph as_hypergraph(const Input& in) {
  if (in.format != "hypergraph") throw UsageError("expected a hypergraph instance, got '" + in.format + "'");
  return parse_hypergraph(in.text);
}

CspInstance as_csp(const Input& in) {
  if (in.format == "p") return cnf_to_csp(parse_dimacs(in.text));
  if (in.format == "csp") return parse_csp(in.text);
  throw UsageError("expected a DIMACS or csp instance, got '" + in.format + "'");
}

Weight bound_of(const WeightedDigraph& g) { return std::max<Weight>(1, g.max_abs_weight()); }

int default_l(const CspInstance& f, int l) { return l > 0 ? l : std::max(2, f.degree()) + 1; }

// --- reduce ---

struct ReduceArgs {
  std::string from, to, in, out;
  int k = 0;
  int l = 0;
  Weight W = -1;
  Weight R = -1;
};

void write_sidecar(const std::string& out, const std::string& suffix, const std::string& text) {
  std::ofstream f(out + suffix, std::ios::binary);
  if (!(f << text)) throw UsageError("cannot write " + out + suffix);
}

std::string digraph_counts(const WeightedDigraph& g) {
  return "nodes " + std::to_string(g.node_count()) + " edges " + std::to_string(g.edge_count()) + "\n";
}

std::string hypergraph_counts(const UniformHypergraph& h) {
  return "nodes " + std::to_string(h.node_count()) + " hyperedges " + std::to_string(h.edge_count()) + " arity " +
         std::to_string(h.arity()) + "\n";
}

std::string node_list(const char* name, const std::vector<NodeId>& nodes) {
  std::string s = name;
  for (NodeId v : nodes) s += " " + std::to_string(v);
  return s + "\n";
}

int cmd_reduce(const ReduceArgs& a, const Globals& g, std::ostream& out) {
  if (a.out.empty() || a.out == "-") throw UsageError("reduce needs --out FILE (sidecars are written next to it)");
  Input in = load(a.in);
  const std::string pair = a.from + "->" + a.to;
  auto finish_layered = [&](const ReductionOutput<CircleLayeredGraph>& r) {
    write_file(a.out, emit_layered(r.instance), out);
    write_sidecar(a.out, ".weight_map", emit_weight_map(r.weight_map));
    out << digraph_counts(r.instance.graph());
  };
  if (pair == "clique->cycle") {
    finish_layered(clique_to_cycle(as_hypergraph(in)));
  } else if (pair == "clique->cycle-direct") {
    finish_layered(clique_to_cycle_direct(as_hypergraph(in)));
  } else if (pair == "hyperclique->hypercycle") {
    auto r = hyperclique_to_hypercycle(as_hypergraph(in));
    write_file(a.out, emit_hypergraph(r.instance), out);
    write_sidecar(a.out, ".weight_map", emit_weight_map(r.weight_map));
    out << hypergraph_counts(r.instance);
  } else if (pair == "hypercycle->cycle") {
    finish_layered(hypercycle_to_digraph(as_hypergraph(in)));
  } else if (pair == "digraph->layered") {
    WeightedDigraph d = as_digraph(in);
    if (a.k < 3) throw UsageError("digraph->layered needs --k >= 3");
    auto layered = color_code(d, a.k, random_coloring(d.node_count(), a.k, g.seed));
    write_file(a.out, emit_layered(layered), out);
    out << digraph_counts(layered.graph());
  } else if (pair == "kcycle->shortest-cycle") {
    auto layered = as_layered(in);
    const Weight W = a.W >= 0 ? a.W : layered.graph().max_abs_weight();
    auto r = min_kcycle_to_shortest_cycle(layered, W);
    write_file(a.out, emit_digraph(r.instance), out);
    write_sidecar(a.out, ".weight_map", emit_weight_map(r.weight_map));
    out << digraph_counts(r.instance);
  } else if (pair == "kcycle->radius" || pair == "kcycle->radius-unweighted") {
    auto layered = as_layered(in);
    const bool weighted = a.to == "radius";
    RadiusGadget r = weighted ? build_radius_gadget_weighted(layered, a.R > 0 ? a.R : bound_of(layered.graph()))
                              : build_radius_gadget_unweighted(layered);
    write_file(a.out, emit_digraph(r.graph), out);
    write_sidecar(a.out, ".threshold", "threshold " + std::to_string(r.threshold) + "\n");
    out << digraph_counts(r.graph);
  } else if (pair == "kcycle->wiener" || pair == "kcycle->wiener-unweighted") {
    auto layered = as_layered(in);
    const bool weighted = a.to == "wiener";
    WienerGadget w = weighted ? build_wiener_gadget_weighted(layered, a.R > 0 ? a.R : bound_of(layered.graph()))
                              : build_wiener_gadget_unweighted(layered);
    write_file(a.out, emit_digraph(w.graph), out);
    write_sidecar(a.out, ".threshold", "threshold " + std::to_string(w.threshold) + "\n");
    write_sidecar(a.out, ".subgraphs",
                  node_list("core", w.core) + node_list("left", w.left) + node_list("right", w.right) +
                      node_list("selectors", w.selectors) + node_list("v1", w.v1) +
                      node_list("v1prime", w.v1_prime) + "u1 " + std::to_string(w.u1) + "\nu1prime " +
                      std::to_string(w.u1_prime) + "\n");
    out << digraph_counts(w.graph);
  } else if (pair == "cnf->hyperclique" || pair == "csp->hyperclique") {
    CspInstance f = as_csp(in);
    auto r = csp_to_hyperclique(f, default_l(f, a.l));
    write_file(a.out, emit_hypergraph(r.instance), out);
    write_sidecar(a.out, ".weight_map", emit_weight_map({1, 0}));
    out << hypergraph_counts(r.instance);
  } else if (pair == "cnf->cycle" || pair == "csp->cycle") {
    CspInstance f = as_csp(in);
    auto r = maxksat_to_cycle(f, default_l(f, a.l));
    finish_layered(r.cycle);
  } else {
    throw UsageError("unsupported reduction " + pair);
  }
  return 0;
}

// --- solve ---

struct SolveArgs {
  std::string problem, algo = "oracle", in, witness;
  int k = 0;
  int l = 0;
  Weight W = -1;
  std::int64_t trials = -1;
  int colors = 2;
  double gparam = 2.0;
  bool stats = false;
};

NegativeCycleSolver oracle_negative() {
  return [](const CircleLayeredGraph& p) {
    SolveResult r = bf_min_kcycle(p.graph(), p.k());
    NegativeAnswer a;
    a.found = r.found && r.weight < 0;
    if (a.found) a.witness = r.witness;
    return a;
  };
}

NegativeCycleSolver gadget_negative(bool wiener) {
  return [wiener](const CircleLayeredGraph& p) {
    NegativeAnswer a;
    const Weight R = bound_of(p.graph());
    a.found = wiener ? decide_negcycle_via_wiener(p, R, bf_wiener) : decide_negcycle_via_radius(p, R, bf_radius);
    return a;
  };
}

int cmd_solve(const SolveArgs& a, const Globals& g, std::ostream& out) {
  Input in = load(a.in);
  const auto start = Clock::now();
  nlohmann::json stats;
  stats["problem"] = a.problem;
  stats["algo"] = a.algo;
  SolveResult result;
  std::optional<std::string> value_line;
  std::optional<bool> decision;

  auto unknown_algo = [&]() -> UsageError {
    return UsageError("algo '" + a.algo + "' not available for problem '" + a.problem + "'");
  };

  if (a.problem == "min-kcycle") {
    WeightedDigraph d = as_digraph(in);
    int k = a.k;
    if (in.format == "layered" && k == 0) k = parse_layered(in.text).k();
    if (k < 2) throw UsageError("min-kcycle needs --k");
    stats["n"] = d.node_count();
    stats["m"] = d.edge_count();
    stats["k"] = k;
    if (a.algo == "oracle") {
      result = bf_min_kcycle(d, k);
    } else if (a.algo == "fast") {
      AlgoStats st;
      MinCycleOptions opt;
      opt.heavy_trials = a.trials;
      opt.split_trials = a.trials;
      opt.threads = g.threads;
      result = min_weight_kcycle(d, k, g.seed, &st, opt);
      stats["delta"] = st.delta;
      stats["heavy_node_count"] = st.heavy_node_count;
      stats["paths_enumerated"] = st.paths_enumerated;
      stats["paths_total"] = st.paths_total;
      stats["relaxations"] = st.relaxations;
      stats["trials_used"] = st.trials_used;
    } else if (a.algo == "color-coding") {
      const auto trials = a.trials >= 0 ? a.trials : default_color_trials(d.node_count(), k);
      result = repeat_color_code(d, k, g.seed, trials, layered_min_kcycle, g.threads);
      stats["trials_used"] = trials;
    } else if (a.algo == "shortest-cycle") {
      const auto trials = a.trials >= 0 ? a.trials : default_color_trials(d.node_count(), k);
      result = min_kcycle_via_shortest_cycle(d, k, a.W >= 0 ? a.W : d.max_abs_weight(), g.seed, trials);
      stats["trials_used"] = trials;
    } else if (a.algo == "negative-search" || a.algo == "radius" || a.algo == "wiener") {
      auto layered = as_layered(in);
      auto solver = a.algo == "negative-search" ? oracle_negative() : gadget_negative(a.algo == "wiener");
      auto r = min_kcycle_via_negative_search(layered, bound_of(layered.graph()), solver);
      result = r.result;
      stats["probes"] = r.probes;
    } else if (a.algo == "density") {
      DensityStats ds;
      KCycleSolver sub = [](const WeightedDigraph& h, int kk) { return bf_min_kcycle(h, kk); };
      result = density_self_reduction(d, k, a.colors, a.gparam, g.seed, sub, &ds);
      stats["heavy_removed"] = ds.heavy_removed;
      stats["attempts"] = ds.attempts;
      stats["subproblems"] = ds.subproblems;
      stats["fell_back"] = ds.fell_back;
    } else {
      throw unknown_algo();
    }
  } else if (a.problem == "kcycle") {
    if (a.algo == "oracle") {
      WeightedDigraph d = as_digraph(in);
      int k = a.k > 0 ? a.k : (in.format == "layered" ? parse_layered(in.text).k() : 0);
      if (k < 2) throw UsageError("kcycle needs --k");
      decision = bf_kcycle_detect(d, k);
    } else if (a.algo == "shortest-cycle") {
      if (in.format == "layered") {
        decision = detect_kcycle_via_shortest_cycle(parse_layered(in.text));
      } else {
        WeightedDigraph d = as_digraph(in);
        if (a.k < 3) throw UsageError("kcycle needs --k");
        decision = detect_kcycle_via_shortest_cycle(
            d, a.k, g.seed, a.trials >= 0 ? a.trials : default_color_trials(d.node_count(), a.k));
      }
    } else if (a.algo == "radius") {
      decision = detect_kcycle_via_radius(as_layered(in), bf_radius);
    } else if (a.algo == "wiener") {
      decision = detect_kcycle_via_wiener(as_layered(in), bf_wiener);
    } else {
      throw unknown_algo();
    }
  } else if (a.problem == "shortest-cycle") {
    WeightedDigraph d = as_digraph(in);
    if (a.algo == "oracle")
      result = bf_shortest_cycle(d);
    else if (a.algo == "dijkstra")
      result = shortest_cycle_nonnegative(d);
    else
      throw unknown_algo();
  } else if (a.problem == "min-clique") {
    UniformHypergraph h = as_hypergraph(in);
    if (a.algo == "oracle") {
      result = bf_min_clique(h, h.part_count());
    } else if (a.algo == "cycle" || a.algo == "cycle-direct") {
      auto red = a.algo == "cycle" ? clique_to_cycle(h) : clique_to_cycle_direct(h);
      SolveResult r = layered_min_kcycle(red.instance);
      if (r.found) result = SolveResult::of(red.pullback(*r.witness));
      if (r.found && red.weight_map.to_source(r.weight) != result.weight)
        throw Error("pulled-back clique weight disagrees with the weight map");
    } else {
      throw unknown_algo();
    }
  } else if (a.problem == "hyperclique") {
    UniformHypergraph h = as_hypergraph(in);
    if (a.algo == "oracle")
      result = bf_hyperclique(h, h.part_count(), Objective::Max);
    else if (a.algo == "guessing")
      result = max_hyperclique_via_guessing(h, bf_detect_hyperclique);
    else
      throw unknown_algo();
  } else if (a.problem == "hypercycle") {
    UniformHypergraph h = as_hypergraph(in);
    if (a.algo == "oracle") {
      result = h.partitioned() ? bf_partite_hypercycle(h, Objective::Min)
                               : bf_hypercycle(h, h.part_count(), Objective::Min);
    } else if (a.algo == "cycle") {
      auto red = hypercycle_to_digraph(h);
      SolveResult r = layered_min_kcycle(red.instance);
      if (r.found) result = SolveResult::of(red.pullback(*r.witness));
    } else {
      throw unknown_algo();
    }
  } else if (a.problem == "radius" || a.problem == "wiener") {
    WeightedDigraph d = as_digraph(in);
    Weight v = 0;
    if (a.problem == "wiener" && a.algo == "oracle")
      v = bf_wiener(d);
    else if (a.problem == "radius" && a.algo == "oracle")
      v = bf_radius(d);
    else if (a.problem == "radius" && a.algo == "apsp")
      v = radius_via_apsp(bf_apsp(d));
    else
      throw unknown_algo();
    value_line = a.problem + " " + std::to_string(v);
  } else if (a.problem == "maxsat") {
    CspInstance f = as_csp(in);
    const int l = default_l(f, a.l);
    if (a.algo == "oracle")
      result = bf_max_ksat(f);
    else if (a.algo == "hyperclique")
      result = max_csp_via_hyperclique(
          f, l, [](const UniformHypergraph& h, int size) { return bf_hyperclique(h, size, Objective::Max); });
    else if (a.algo == "guessing")
      result = max_csp_via_hyperclique(
          f, l, [](const UniformHypergraph& h, int) { return max_hyperclique_via_guessing(h, bf_detect_hyperclique); });
    else if (a.algo == "cycle")
      result = max_sat_via_cycle(f, l, layered_min_kcycle);
    else
      throw unknown_algo();
  } else if (a.problem == "exact-csp") {
    CspInstance f = as_csp(in);
    if (!f.targets()) throw UsageError("exact-csp needs a csp file with K_v and K_p");
    if (a.algo == "oracle") {
      result = bf_exact_csp(f);
    } else if (a.algo == "hyperclique") {
      auto r = exact_csp_via_hyperclique(f, default_l(f, a.l), [](const UniformHypergraph& h, int size, Weight t) {
        return bf_hyperclique(h, size, Objective::Exact, t);
      });
      result = r.result;
      stats["multiplier"] = r.multiplier;
      stats["fallback_multiplier"] = r.used_fallback;
    } else {
      throw unknown_algo();
    }
  } else {
    throw UsageError("unknown problem '" + a.problem + "'");
  }

  stats["wall_ns"] = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
  if (value_line) {
    out << *value_line << "\n";
  } else if (decision) {
    out << (*decision ? "found" : "none") << "\n";
    stats["found"] = *decision;
  } else {
    out << (result.found ? "found " + std::to_string(result.weight) : std::string("none")) << "\n";
    stats["found"] = result.found;
    if (result.found) stats["weight"] = result.weight;
    if (!a.witness.empty() && result.witness) write_file(a.witness, emit_witness(*result.witness), out);
  }
  if (a.stats) out << stats.dump() << "\n";
  return 0;
}

// --- verify / bench ---

int cmd_verify(const std::string& reduction, std::int64_t trials, bool corrupt, const Globals& g, std::ostream& out) {
  CampaignOptions o;
  o.trials = trials;
  o.seed = g.seed;
  o.threads = g.threads;
  o.time_budget_seconds = g.time_budget;
  o.corrupt = corrupt;
  CampaignReport r = run_campaign(reduction, o);
  out << format_report(r);
  return r.mismatches == 0 ? 0 : 1;
}

std::vector<int> parse_schedule(const std::string& s) {
  std::vector<int> out;
  auto dots = s.find("..");
  try {
    if (dots != std::string::npos) {
      int lo = std::stoi(s.substr(0, dots)), hi = std::stoi(s.substr(dots + 2));
      for (int e = lo; e <= hi; ++e) out.push_back(e);
    } else {
      std::stringstream ss(s);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw UsageError("bad schedule '" + s + "' (use 10..15 or 10,12,14)");
  }
  if (out.empty()) throw UsageError("empty schedule");
  for (int e : out)
    if (e < 1 || e > 30) throw UsageError("schedule exponents must be in 1..30");
  return out;
}

}  // namespace

std::optional<double> loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

std::string bench_csv_header() { return "n,m,k,seed,wall_ns,paths_enumerated,heavy_nodes,weight\n"; }

std::string bench_csv_row(const BenchRow& r) {
  std::ostringstream os;
  os << r.n << ',' << r.m << ',' << r.k << ',' << r.seed << ',' << r.wall_ns << ',' << r.paths_enumerated << ','
     << r.heavy_nodes << ',' << (r.weight ? std::to_string(*r.weight) : std::string("none")) << '\n';
  return os.str();
}

BenchResult run_bench(const BenchOptions& o, std::ostream* csv) {
  BenchResult res;
  if (csv) *csv << bench_csv_header();
  const auto start = Clock::now();
  std::vector<double> xs, ys;
  for (int e : o.log2_m) {
    if (o.time_budget_seconds > 0 &&
        std::chrono::duration<double>(Clock::now() - start).count() > o.time_budget_seconds) {
      res.budget_exhausted = true;
      break;
    }
    BenchRow row;
    row.m = std::int64_t{1} << e;
    row.n = static_cast<int>(std::ceil(std::pow(static_cast<double>(row.m), 1.0 / o.density_exponent)));
    while (static_cast<std::int64_t>(row.n) * (row.n - 1) < row.m) ++row.n;
    row.k = o.k;
    row.seed = derive_seed(o.seed, static_cast<std::uint64_t>(e));
    WeightedDigraph g = random_digraph(row.n, row.m, {-8, 8}, row.seed);
    MinCycleOptions opt;
    opt.heavy_trials = o.trials;
    opt.split_trials = o.trials;
    std::vector<std::int64_t> walls;
    for (int r = 0; r < std::max(1, o.repeats); ++r) {
      AlgoStats st;
      const auto t0 = Clock::now();
      SolveResult sr = min_weight_kcycle(g, o.k, row.seed, &st, opt);
      walls.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
      row.paths_enumerated = st.paths_enumerated;
      row.heavy_nodes = st.heavy_node_count;
      row.weight = sr.found ? std::optional<Weight>(sr.weight) : std::nullopt;
    }
    std::sort(walls.begin(), walls.end());
    row.wall_ns = std::max<std::int64_t>(1, walls[walls.size() / 2]);
    if (csv) *csv << bench_csv_row(row) << std::flush;
    xs.push_back(static_cast<double>(row.m));
    ys.push_back(static_cast<double>(row.wall_ns));
    res.rows.push_back(row);
  }
  res.slope = loglog_slope(xs, ys);
  return res;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fgred: fine-grained reductions, oracles and the minimum k-cycle algorithm"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Master seed for all randomness");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--time-budget", g.time_budget, "Seconds before campaigns and benches stop early (0: none)");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", ga.kind,
                  "digraph | layered | planted-kcycle | clique | planted-kclique | cnf | hypergraph | "
                  "partite-hypergraph")
      ->required();
  gen->add_option("--n", ga.n, "Nodes or variables");
  gen->add_option("--m", ga.m, "Edges, hyperedges or clauses");
  gen->add_option("--k", ga.k, "Cycle length, part count, or clause width");
  gen->add_option("--p", ga.p, "Edge probability");
  gen->add_option("--part-size", ga.part_size, "Nodes per part (clique kinds)");
  gen->add_option("--parts", ga.parts, "Part count (partite-hypergraph)");
  gen->add_option("--max-part", ga.max_part, "Largest part (partite-hypergraph)");
  gen->add_option("--arity", ga.arity, "Hyperedge size");
  gen->add_option("--min-size", ga.min_size, "Smallest layer (layered)");
  gen->add_option("--max-size", ga.max_size, "Largest layer (layered)");
  gen->add_option("--wlo", ga.wlo, "Smallest weight");
  gen->add_option("--whi", ga.whi, "Largest weight");
  gen->add_option("--noise", ga.noise, "Largest noise weight (planted kinds)");
  gen->add_option("--out", ga.out, "Output file (default stdout)");

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Apply a reduction and write the target instance with sidecars");
  reduce->add_option("--from", ra.from, "clique | hyperclique | hypercycle | digraph | kcycle | cnf | csp")->required();
  reduce->add_option("--to", ra.to,
                     "cycle | cycle-direct | hypercycle | layered | shortest-cycle | radius | radius-unweighted | "
                     "wiener | wiener-unweighted | hyperclique")
      ->required();
  reduce->add_option("--in", ra.in, "Input file")->required();
  reduce->add_option("--out", ra.out, "Output file; sidecars go to OUT.weight_map / OUT.threshold")->required();
  reduce->add_option("--k", ra.k, "Cycle length (digraph->layered)");
  reduce->add_option("--l", ra.l, "Group count for CSP reductions");
  reduce->add_option("--W", ra.W, "Weight bound for the shortest-cycle shift");
  reduce->add_option("--R", ra.R, "Weight bound for weighted gadgets");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("--problem", sa.problem,
                    "min-kcycle | kcycle | shortest-cycle | min-clique | hyperclique | hypercycle | radius | wiener "
                    "| maxsat | exact-csp")
      ->required();
  solve->add_option("--algo", sa.algo,
                    "oracle | fast | color-coding | shortest-cycle | negative-search | radius | wiener | density | "
                    "dijkstra | cycle | cycle-direct | guessing | apsp | hyperclique");
  solve->add_option("--in", sa.in, "Input file")->required();
  solve->add_option("--k", sa.k, "Cycle length");
  solve->add_option("--l", sa.l, "Group count for CSP algorithms");
  solve->add_option("--W", sa.W, "Weight bound for the shortest-cycle shift");
  solve->add_option("--trials", sa.trials, "Trial count override for randomized algorithms");
  solve->add_option("--colors", sa.colors, "Color count for the density self-reduction");
  solve->add_option("--gparam", sa.gparam, "Degree factor for the density self-reduction");
  solve->add_option("--witness", sa.witness, "Write the witness to this file");
  solve->add_flag("--stats", sa.stats, "Print a JSON stats line");

  std::string reduction;
  std::int64_t trials = 100;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Run a seeded oracle-equivalence campaign");
  verify->add_option("--reduction", reduction, "Campaign name")->required();
  verify->add_option("--trials", trials, "Trial count");
  verify->add_flag("--corrupt-for-test", corrupt, "Perturb every target answer (harness self-test)")->group("");

  BenchOptions bo;
  std::string schedule = "10..15", algo = "fast", csv_path;
  auto* bench = app.add_subcommand("bench", "Time the minimum k-cycle algorithm over a size schedule");
  bench->add_option("--algo", algo, "fast");
  bench->add_option("--k", bo.k, "Cycle length");
  bench->add_option("--schedule", schedule, "log2(m) values: 10..15 or 10,12,14");
  bench->add_option("--density", bo.density_exponent, "m = n^density");
  bench->add_option("--trials", bo.trials, "Heavy and light trials per run");
  bench->add_option("--repeats", bo.repeats, "Runs per size; the median wall time is kept");
  bench->add_option("--out", csv_path, "CSV file (default stdout)");

  std::vector<std::string> argv_storage{"fgred"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(ga, g, out);
    if (*reduce) return cmd_reduce(ra, g, out);
    if (*solve) return cmd_solve(sa, g, out);
    if (*verify) return cmd_verify(reduction, trials, corrupt, g, out);
    if (*bench) {
      if (algo != "fast") throw UsageError("bench supports --algo fast only");
      bo.log2_m = parse_schedule(schedule);
      bo.seed = g.seed;
      bo.time_budget_seconds = g.time_budget;
      std::ofstream file;
      std::ostream* csv = &out;
      if (!csv_path.empty()) {
        file.open(csv_path);
        if (!file) throw UsageError("cannot write " + csv_path);
        csv = &file;
      }
      BenchResult r = run_bench(bo, csv);
      if (r.slope)
        out << "slope " << *r.slope << "\n";
      else
        out << "slope n/a\n";
      if (r.budget_exhausted) {
        err << "time budget exhausted; partial CSV kept\n";
        return 1;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInstance& e) {
    err << "invalid instance: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fgr
