#pragma once

#include <cstdint>

#include "fgr/graph.hpp"
#include "fgr/hypergraph.hpp"
#include "fgr/polynomial.hpp"

namespace fgr {

struct WeightRange {
  Weight lo = 0;
  Weight hi = 0;
};

// Uniform simple digraph with exactly min(m, n(n-1)) edges.
WeightedDigraph random_digraph(int n, std::int64_t m, WeightRange w, std::uint64_t seed);

// Layer sizes drawn from [min_size, max_size]; each edge between consecutive
// layers present with probability p.
CircleLayeredGraph random_layered(int k, int min_size, int max_size, double p, WeightRange w,
                                  std::uint64_t seed);

// Random digraph with noise weights in [0, noise_hi] plus a k-cycle of weight
// -1 per edge, so the planted cycle is the unique minimum (weight -k).
WeightedDigraph planted_kcycle(int n, std::int64_t m, int k, Weight noise_hi, std::uint64_t seed);

// k-partite clique instance, part_size nodes per part, each cross-part pair an
// edge with probability p.
UniformHypergraph random_clique_instance(int k, int part_size, double p, WeightRange w, std::uint64_t seed);

// Complete k-partite instance with weights in [0, noise_hi] and one planted
// clique whose pair weights are -1, so it is the unique minimum.
UniformHypergraph planted_kclique(int k, int part_size, Weight noise_hi, std::uint64_t seed);

// Random k-uniform hypergraph; partitioned into `parts` parts (sizes in
// [1, max_part]) when parts > 0, in which case every transversal k-set is an
// edge with probability p.
UniformHypergraph random_partite_hypergraph(int parts, int max_part, int arity, double p, WeightRange w,
                                            std::uint64_t seed);
UniformHypergraph random_hypergraph(int n, int arity, std::int64_t m, WeightRange w, std::uint64_t seed);

// Random k-CNF: each clause has k distinct variables with random signs.
Cnf random_cnf(int n, int m, int k, std::uint64_t seed);

}  // namespace fgr
