#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fgr/hypergraph.hpp"
#include "fgr/polynomial.hpp"
#include "fgr/reduce_cycle.hpp"
#include "fgr/witness.hpp"

namespace fgr {

// Unique multilinear polynomial of a DIMACS clause. Throws PreconditionError
// when the clause mentions more than k distinct variables (k < 0: no limit).
MultilinearPolynomial clause_to_polynomial(const std::vector<int>& clause, int variable_count, int k = -1);
CspInstance cnf_to_csp(const Cnf& f);

// For a 0/1-valued polynomial: every degree-g coefficient lies in
// [-2^(g-1), 2^(g-1)] and the constant term is 0 or 1. Returns the first
// violation. Also checks 0/1-valuedness when the support has at most 16 variables.
std::optional<std::string> coefficient_bounds_check(const MultilinearPolynomial& p);

// Variables split into l equal groups after padding; group g holds variables
// g*size .. g*size+size-1, and those >= real_variables are padding.
struct GroupSplit {
  int l = 0;
  int group_size = 0;
  int real_variables = 0;
  int padded_variables() const { return l * group_size; }
  int group_of(int var) const { return var / group_size; }
  // Node of group g for the assignment of its variables; the group's first
  // variable is the most significant bit.
  NodeId node(int g, std::uint32_t bits) const { return g * (1 << group_size) + static_cast<NodeId>(bits); }
};

GroupSplit make_group_split(int variable_count, int l);

inline constexpr int kMaxGroupSize = 16;

struct CspHyperclique {
  UniformHypergraph instance;  // k-uniform, l-partite, W_1 = polynomial mass, W_2 = popcount mass
  GroupSplit split;
  int arity = 0;
  // Hyperclique witness (one node per group) -> assignment witness whose
  // claimed weight is the number of satisfied clauses.
  std::function<Witness(const Witness&)> pullback;
};

// Lexicographically first k-subset of {0..l-1} containing `groups` (sorted).
std::vector<int> responsible_groups(const std::vector<int>& groups, int l, int k);

// k defaults to max(2, f.degree()). Requires l > k and group size <= max_group_size.
CspHyperclique csp_to_hyperclique(const CspInstance& f, int l, int k = -1, int max_group_size = kMaxGroupSize);

// Decodes one node per group into a full assignment of the real variables.
Assignment decode_assignment(const GroupSplit& split, const std::vector<std::int64_t>& nodes);

using HypercliqueSolver = std::function<SolveResult(const UniformHypergraph&, int size)>;
using ExactHypercliqueSolver = std::function<SolveResult(const UniformHypergraph&, int size, Weight target)>;

// Maximum number of satisfied clauses via maximum-W_1 l-hyperclique.
SolveResult max_csp_via_hyperclique(const CspInstance& f, int l, const HypercliqueSolver& solver);

struct ExactCspResult {
  SolveResult result;  // assignment witness, claimed weight = K_p
  Weight multiplier = 0;
  bool used_fallback = false;  // power-of-two multiplier instead of 2*binom(l,k)*n/l
  Weight target = 0;           // K_g
};

// Combined weight W_1 * M + W_2 with M = 2*binom(l,k)*(n/l) (or the smallest
// power of two above n when that does not separate), target K_p * M + K_v.
ExactCspResult exact_csp_via_hyperclique(const CspInstance& f, int l, const ExactHypercliqueSolver& solver);

// Weight -> unweighted hyperclique instances by guessing the weight of each
// edge class (one class per k-subset of parts). Guesses range over the
// distinct w1 values present in each class.
class WeightGuesser {
 public:
  enum class Mode { Max, Exact };
  static constexpr std::int64_t kDefaultCap = 1 << 20;

  WeightGuesser(const UniformHypergraph& h, Mode mode, Weight target = 0, std::int64_t cap = kDefaultCap);

  // Next unweighted instance (w1 = w2 = 0) and its guess vector, in decreasing
  // total (Max) or restricted to totals equal to the target (Exact).
  bool next(UniformHypergraph& out, std::vector<Weight>& guess, Weight& total);
  std::size_t class_count() const { return classes_.size(); }
  std::size_t remaining() const { return order_.size() - cursor_; }

 private:
  const UniformHypergraph& h_;
  std::vector<std::vector<int>> classes_;
  std::vector<std::vector<Weight>> values_;
  std::vector<std::vector<std::size_t>> class_edges_;
  std::vector<std::pair<Weight, std::int64_t>> order_;  // (total, mixed-radix guess index)
  std::size_t cursor_ = 0;
};

using HypercliqueDetector = std::function<std::optional<Witness>(const UniformHypergraph&, int size)>;
std::optional<Witness> bf_detect_hyperclique(const UniformHypergraph& h, int size);

// First guess whose unweighted instance has an l-hyperclique. The witness's
// claimed weight is the guess total.
SolveResult max_hyperclique_via_guessing(const UniformHypergraph& h, const HypercliqueDetector& detect,
                                         std::int64_t cap = WeightGuesser::kDefaultCap);
SolveResult exact_hyperclique_via_guessing(const UniformHypergraph& h, Weight target,
                                           const HypercliqueDetector& detect,
                                           std::int64_t cap = WeightGuesser::kDefaultCap);

struct SatCycleReduction {
  ReductionOutput<CircleLayeredGraph> cycle;  // weight map scale -1: min cycle = -(max satisfied)
  CspHyperclique hyperclique;
  int gamma = 0;
};

// k-CNF -> l-circle-layered digraph through the hypercycle. l > k.
SatCycleReduction maxksat_to_cycle(const CspInstance& f, int l);
SolveResult max_sat_via_cycle(const CspInstance& f, int l, const LayeredSolver& solver);

}  // namespace fgr
