#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fgr/graph.hpp"
#include "fgr/witness.hpp"

namespace fgr {

struct AlgoStats {
  std::int64_t heavy_node_count = 0;
  std::int64_t delta = 0;
  // Largest path table built by one enumeration (one side of one red/blue
  // trial), before per-endpoint minimisation.
  std::int64_t paths_enumerated = 0;
  std::int64_t paths_total = 0;
  std::int64_t relaxations = 0;
  std::int64_t trials_used = 0;
};

// Minimum k-cycle through s by color coding with s fixed to color 0 and
// relaxation in color order. Every reported cycle is a genuine simple k-cycle.
SolveResult shortest_kcycle_through(const WeightedDigraph& g, NodeId s, int k, std::uint64_t seed,
                                    std::int64_t trials, AlgoStats* stats = nullptr);

// ceil(3 * 2^k * ln(n + 2)): red/blue trials for the light phase.
std::int64_t default_split_trials(int n, int k);
// Smallest integer delta with delta^ceil(k/2) >= m (at least 1).
std::int64_t heavy_degree_threshold(std::int64_t m, int k);

struct MinCycleOptions {
  std::int64_t heavy_trials = -1;  // per heavy node; -1: default_color_trials
  std::int64_t split_trials = -1;  // -1: default_split_trials
  int threads = 1;
};

SolveResult min_weight_kcycle(const WeightedDigraph& g, int k, std::uint64_t seed, AlgoStats* stats = nullptr,
                              const MinCycleOptions& options = {});

struct PathEntry {
  NodeId from = 0;
  NodeId to = 0;
  Weight weight = 0;
  std::vector<NodeId> path;  // from ... to
};

// Minimum-weight simple path with exactly `length` edges for every ordered
// endpoint pair, internal nodes all of color `internal_color` (endpoints
// unrestricted). Sorted by (from, to). `built` receives the number of complete
// paths enumerated before minimisation.
std::vector<PathEntry> enumerate_bounded_paths(const WeightedDigraph& g, int length, const std::vector<int>& color,
                                               int internal_color, std::int64_t* built = nullptr);

using KCycleSolver = std::function<SolveResult(const WeightedDigraph&, int k)>;

struct DensityStats {
  std::int64_t heavy_removed = 0;
  int attempts = 0;
  int discarded_attempts = 0;
  std::int64_t subproblems = 0;
  bool fell_back = false;
};

// Solves through high-degree nodes, then splits the rest by c random colors
// and solves every cyclic color-tuple subproblem with `solver`. Attempts with a
// discarded class or class pair are retried with a fresh seed; after
// `max_attempts` the remaining graph is solved directly.
SolveResult density_self_reduction(const WeightedDigraph& g, int k, int c, double g_param, std::uint64_t seed,
                                   const KCycleSolver& solver, DensityStats* stats = nullptr, int max_attempts = 8);

}  // namespace fgr
