#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fgr/graph.hpp"
#include "fgr/hypergraph.hpp"
#include "fgr/text_io.hpp"
#include "fgr/witness.hpp"

namespace fgr {

// Target instance plus the witness pullback and the affine weight relation
// target_opt = scale * source_opt + shift.
template <class Target>
struct ReductionOutput {
  Target instance;
  std::function<Witness(const Witness&)> pullback;
  WeightMap weight_map;
};

// Window size covering any k of l cyclically arranged indices.
int gamma(int l, int k);

using Coloring = std::vector<int>;
using LayeredSolver = std::function<SolveResult(const CircleLayeredGraph&)>;

// Keeps the edges with color(v) = color(u) + 1 mod k; layers are colors.
CircleLayeredGraph color_code(const WeightedDigraph& g, int k, const Coloring& coloring);
Coloring random_coloring(int n, int k, std::uint64_t seed);
// ceil(3 * k^k * ln(n + 2)).
std::int64_t default_color_trials(int n, int k);
// Best solver result over `trials` colorings; trial t uses derive_seed(seed, t).
SolveResult repeat_color_code(const WeightedDigraph& g, int k, std::uint64_t seed, std::int64_t trials,
                              const LayeredSolver& solver, int threads = 1);

// Exact minimum k-cycle of a k-circle-layered graph by layer-order dynamic
// programming from every layer-0 node.
SolveResult layered_min_kcycle(const CircleLayeredGraph& g);

// Splits layer 1 into two layers joined by zero-weight edges (k -> k+1).
ReductionOutput<CircleLayeredGraph> split_layer(const CircleLayeredGraph& g);

// l-partite k-uniform hyperclique instance -> gamma-uniform hypercycle
// instance on the same nodes. Each source hyperedge's weight goes to the big
// hyperedges whose window starts at its responsible part.
ReductionOutput<UniformHypergraph> hyperclique_to_hypercycle(const UniformHypergraph& h);
// Part of the window start responsible for a source hyperedge over `parts`
// (sorted) among l parts.
int responsible_start(const std::vector<int>& parts, int l);

// k-partite lambda-uniform hypergraph -> k-circle-layered digraph whose layer i
// nodes are (lambda-1)-tuples over parts i..i+lambda-2. Node id = layer offset
// + tuple_index(window part sizes, positions in parts).
ReductionOutput<CircleLayeredGraph> hypercycle_to_digraph(const UniformHypergraph& h);

// Composed pipeline for a k-partite 2-uniform clique instance.
ReductionOutput<CircleLayeredGraph> clique_to_cycle(const UniformHypergraph& g);
// Direct construction for odd k with L! weight scaling, L = (k+1)/2.
ReductionOutput<CircleLayeredGraph> clique_to_cycle_direct(const UniformHypergraph& g);

// Per-edge shift used by the shortest-cycle reduction: 4W, or 1 when W = 0.
Weight shortest_cycle_shift(Weight W);
ReductionOutput<WeightedDigraph> min_kcycle_to_shortest_cycle(const CircleLayeredGraph& g, Weight W);
ReductionOutput<WeightedDigraph> min_kcycle_to_shortest_cycle(const WeightedDigraph& g, int k, Weight W,
                                                              const Coloring& coloring);

using CycleSolver = std::function<SolveResult(const WeightedDigraph&)>;
// Shortest simple cycle for non-negative weights (Dijkstra from every node).
SolveResult shortest_cycle_nonnegative(const WeightedDigraph& g);
// Repeats colorings; each trial reduces to shortest cycle and keeps answers
// that are k-cycles.
SolveResult min_kcycle_via_shortest_cycle(const WeightedDigraph& g, int k, Weight W, std::uint64_t seed,
                                          std::int64_t trials, const CycleSolver& solver = shortest_cycle_nonnegative);

// Unweighted: shortest cycle of the layered graph has length k iff a k-cycle exists.
bool detect_kcycle_via_shortest_cycle(const CircleLayeredGraph& g);
bool detect_kcycle_via_shortest_cycle(const WeightedDigraph& g, int k, std::uint64_t seed, std::int64_t trials);

struct NegativeAnswer {
  bool found = false;
  std::optional<Witness> witness;  // cycle in the probed graph, when available
};
using NegativeCycleSolver = std::function<NegativeAnswer(const CircleLayeredGraph&)>;

struct NegativeSearchResult {
  SolveResult result;
  int probes = 0;
};

// g with T subtracted from every layer-0 -> layer-1 edge.
CircleLayeredGraph probe_graph(const CircleLayeredGraph& g, Weight T);
// Binary search over T in [-Rk, Rk+1] for the smallest T with a k-cycle of
// weight < T. Throws Error when the solver answers non-monotonically.
NegativeSearchResult min_kcycle_via_negative_search(const CircleLayeredGraph& g, Weight R,
                                                    const NegativeCycleSolver& solver);
int negative_search_probe_limit(Weight R, int k);

}  // namespace fgr
