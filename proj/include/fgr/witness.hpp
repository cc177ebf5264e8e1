#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgr/checked.hpp"

namespace fgr {

enum class WitnessKind { Clique, Cycle, Hyperclique, Hypercycle, Assignment };

std::string to_string(WitnessKind kind);
std::optional<WitnessKind> witness_kind_from_string(const std::string& s);

// Typed solution object: node ids for graph witnesses, bits for assignments.
struct Witness {
  WitnessKind kind = WitnessKind::Cycle;
  std::vector<std::int64_t> items;
  Weight claimed_weight = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

// Rotates a cycle so its smallest node comes first.
std::vector<std::int64_t> canonical_cycle(std::vector<std::int64_t> cycle);

struct SolveResult {
  bool found = false;
  Weight weight = 0;
  std::optional<Witness> witness;

  static SolveResult none() { return {}; }
  static SolveResult of(Witness w) {
    SolveResult r;
    r.found = true;
    r.weight = w.claimed_weight;
    r.witness = std::move(w);
    return r;
  }
};

// Keeps the better of two minimisation results: lower weight, then the
// lexicographically smaller witness.
SolveResult better_min(SolveResult a, SolveResult b);
SolveResult better_max(SolveResult a, SolveResult b);

}  // namespace fgr
