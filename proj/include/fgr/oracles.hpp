#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgr/graph.hpp"
#include "fgr/hypergraph.hpp"
#include "fgr/polynomial.hpp"
#include "fgr/witness.hpp"

namespace fgr {

// Work cap for brute-force enumerations (search-tree nodes visited).
inline constexpr std::int64_t kOracleWorkCap = 400'000'000;
// Largest variable count for assignment enumeration.
inline constexpr int kOracleMaxVariables = 24;

enum class Objective { Min, Max, Exact };

// Minimum-weight clique of `size` nodes in a 2-uniform hypergraph (pair
// weights in w1).
SolveResult bf_min_clique(const UniformHypergraph& g, int size);

// Minimum-weight simple directed cycle on exactly k nodes.
SolveResult bf_min_kcycle(const WeightedDigraph& g, int k);
bool bf_kcycle_detect(const WeightedDigraph& g, int k);

// Minimum-weight simple directed cycle of any length >= 2.
SolveResult bf_shortest_cycle(const WeightedDigraph& g);

// Optimises the w1 total over `size`-sets whose every arity-subset is a
// hyperedge. Exact returns the lexicographically first set with total `target`.
SolveResult bf_hyperclique(const UniformHypergraph& h, int size, Objective objective = Objective::Max,
                           Weight target = 0);

// Optimises the w1 total over the `length` cyclic windows of a tight
// hypercycle of distinct nodes, smallest node first.
SolveResult bf_hypercycle(const UniformHypergraph& h, int length, Objective objective = Objective::Min);

// Same objective restricted to hypercycles taking one node from each part in
// part order 0..k-1; the witness starts in part 0.
SolveResult bf_partite_hypercycle(const UniformHypergraph& h, Objective objective = Objective::Min);

using Distances = std::vector<std::optional<Weight>>;
using DistanceMatrix = std::vector<Distances>;

// Bellman-Ford from s; throws PreconditionError on a reachable negative cycle.
Distances single_source_distances(const WeightedDigraph& g, NodeId s);
// Floyd-Warshall; throws PreconditionError on a negative cycle.
DistanceMatrix bf_apsp(const WeightedDigraph& g);
// Both throw PreconditionError when some pair is unreachable.
Weight bf_radius(const WeightedDigraph& g);
Weight bf_wiener(const WeightedDigraph& g);

// Maximum number of satisfied clauses with the lexicographically smallest
// optimal assignment (x1 first).
SolveResult bf_max_ksat(const CspInstance& f);
// Lexicographically smallest assignment with sum p_i = K_p and popcount = K_v.
SolveResult bf_exact_csp(const CspInstance& f);

// nullopt when the witness is valid for the instance; otherwise the reason.
using CheckResult = std::optional<std::string>;
CheckResult check_witness(const WeightedDigraph& g, const Witness& w);
CheckResult check_witness(const UniformHypergraph& h, const Witness& w);
CheckResult check_witness(const CspInstance& f, const Witness& w);

}  // namespace fgr
