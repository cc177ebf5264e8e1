#include "fgr/witness.hpp"

#include <algorithm>

namespace fgr {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Clique: return "clique";
    case WitnessKind::Cycle: return "cycle";
    case WitnessKind::Hyperclique: return "hyperclique";
    case WitnessKind::Hypercycle: return "hypercycle";
    case WitnessKind::Assignment: return "assignment";
  }
  return "unknown";
}

std::optional<WitnessKind> witness_kind_from_string(const std::string& s) {
  for (WitnessKind k : {WitnessKind::Clique, WitnessKind::Cycle, WitnessKind::Hyperclique, WitnessKind::Hypercycle,
                        WitnessKind::Assignment})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

std::vector<std::int64_t> canonical_cycle(std::vector<std::int64_t> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

SolveResult better_min(SolveResult a, SolveResult b) {
  if (!a.found) return b;
  if (!b.found) return a;
  if (a.weight != b.weight) return a.weight < b.weight ? a : b;
  if (a.witness && b.witness && b.witness->items < a.witness->items) return b;
  return a;
}

SolveResult better_max(SolveResult a, SolveResult b) {
  if (!a.found) return b;
  if (!b.found) return a;
  if (a.weight != b.weight) return a.weight > b.weight ? a : b;
  if (a.witness && b.witness && b.witness->items < a.witness->items) return b;
  return a;
}

}  // namespace fgr
