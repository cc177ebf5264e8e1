#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fgr/campaign.hpp"
#include "fgr/cli.hpp"
#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/reduce_csp.hpp"
#include "fgr/reduce_cycle.hpp"
#include "fgr/rng.hpp"

using namespace fgr;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20240501;
constexpr double kMaxSlope = 1.85;
constexpr double kDensityRatioBound = 1.0;  // M / N^1.5 for the k = 5 staircase
constexpr int kColorFoundMin = 99;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Verdict campaigns(const std::vector<std::pair<std::string, std::int64_t>>& runs, double limit_seconds = 0) {
  Verdict v;
  std::ostringstream os;
  const auto start = Clock::now();
  for (const auto& [name, trials] : runs) {
    CampaignOptions o;
    o.trials = trials;
    o.seed = kSeed;
    o.cache_dir = "acceptance-failures";
    auto r = run_campaign(name, o);
    if (r.mismatches != 0 || r.trials != trials) v.pass = false;
    os << name << " " << r.trials << " trials (" << r.positives << " positive) " << r.mismatches << " mismatches; ";
    if (r.first_failure)
      os << "first failure seed " << r.first_failure->seed << " expected " << r.first_failure->expected << " got "
         << r.first_failure->got << "; ";
  }
  const double wall = seconds_since(start);
  os << "wall " << wall << "s";
  if (limit_seconds > 0) {
    os << " (limit " << limit_seconds << "s)";
    if (wall > limit_seconds) v.pass = false;
  }
  v.detail = os.str();
  return v;
}

Verdict scaling() {
  BenchOptions o;
  o.k = 5;
  o.log2_m = {10, 11, 12, 13, 14, 15};
  o.density_exponent = 1.5;
  o.seed = kSeed;
  const auto start = Clock::now();
  BenchResult r = run_bench(o, nullptr);
  const double wall = seconds_since(start);
  Verdict v;
  std::ostringstream os;
  v.pass = r.slope.has_value() && *r.slope <= kMaxSlope && wall < 300 && r.rows.size() == o.log2_m.size();
  os << "slope " << (r.slope ? std::to_string(*r.slope) : std::string("n/a")) << " (bound " << kMaxSlope
     << "), heavy nodes at m=2^15: " << (r.rows.empty() ? 0 : r.rows.back().heavy_nodes) << ", wall " << wall
     << "s";
  v.detail = os.str();
  return v;
}

Verdict coefficient_bounds() {
  const auto start = Clock::now();
  const std::vector<int> vars{0, 1, 2, 3};
  std::int64_t bad = 0;
  std::vector<Weight> table(16);
  for (int f = 0; f < 65536; ++f) {
    for (int m = 0; m < 16; ++m) table[m] = (f >> m) & 1;
    auto p = MultilinearPolynomial::from_truth_table(4, vars, table);
    if (coefficient_bounds_check(p)) ++bad;
  }
  const double wall = seconds_since(start);
  std::ostringstream os;
  os << "65536 functions, " << bad << " violations, wall " << wall << "s (limit 30s)";
  return {bad == 0 && wall < 30, os.str()};
}

UniformHypergraph complete_partite(int k, int n) {
  std::vector<int> part_of;
  for (int p = 0; p < k; ++p)
    for (int i = 0; i < n; ++i) part_of.push_back(p);
  std::vector<Edge> edges;
  for (int a = 0; a < k * n; ++a)
    for (int b = a + 1; b < k * n; ++b)
      if (part_of[a] != part_of[b]) edges.push_back({a, b, 1});
  return make_clique_instance(k * n, part_of, k, edges);
}

Verdict density_datum() {
  Verdict v;
  std::ostringstream os;
  const int k = 5;
  for (int n = 2; n <= 6; ++n) {
    auto red = clique_to_cycle(complete_partite(k, n));
    const std::int64_t N = red.instance.node_count();
    const auto M = static_cast<std::int64_t>(red.instance.graph().edge_count());
    const double ratio = static_cast<double>(M) / std::pow(static_cast<double>(N), 1.5);
    if (N != k * n * n || M > k * n * n * n || ratio > kDensityRatioBound) v.pass = false;
    os << "n=" << n << " N=" << N << " M=" << M << " M/N^1.5=" << ratio << "; ";
    // Sparse instances only lose edges, never nodes.
    auto sparse = clique_to_cycle(random_clique_instance(k, n, 0.5, {-8, 8}, derive_seed(kSeed, n)));
    if (sparse.instance.node_count() != N || static_cast<std::int64_t>(sparse.instance.graph().edge_count()) > M)
      v.pass = false;
  }
  os << "ratio bound " << kDensityRatioBound;
  v.detail = os.str();
  return v;
}

Verdict color_coding() {
  const auto start = Clock::now();
  int found = 0, unsound = 0;
  const int n = 12, k = 5;
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto g = planted_kcycle(n, 30, k, 8, derive_seed(kSeed, s));
    auto want = bf_min_kcycle(g, k);
    auto got = repeat_color_code(g, k, derive_seed(kSeed, 1000 + s), default_color_trials(n, k), layered_min_kcycle);
    if (!got.found) continue;
    if (!want.found || check_witness(g, *got.witness) || got.weight < want.weight) {
      ++unsound;
      continue;
    }
    if (got.weight == want.weight) ++found;
  }
  std::ostringstream os;
  os << "found optimum on " << found << "/100 (need " << kColorFoundMin << "), unsound " << unsound << ", trials "
     << default_color_trials(n, k) << ", wall " << seconds_since(start) << "s";
  return {found >= kColorFoundMin && unsound == 0, os.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "clique to cycle exactness", [] { return campaigns({{"clique-cycle", 500}}, 120); }},
      {2, "direct construction agreement", [] { return campaigns({{"clique-cycle-direct", 500}}); }},
      {3, "hyperclique to hypercycle", [] { return campaigns({{"hyperclique-hypercycle", 300}}); }},
      {4, "min-weight k-cycle algorithm", [] { return campaigns({{"min-kcycle-fast", 300}}, 180); }},
      {5, "min-weight k-cycle scaling", scaling},
      {6, "shortest-cycle reduction", [] { return campaigns({{"shortest-cycle", 300}}); }},
      {7, "negative-cycle binary search", [] { return campaigns({{"negative-search", 200}}); }},
      {8, "radius gadgets", [] { return campaigns({{"radius-weighted", 200}, {"radius-unweighted", 200}}); }},
      {9, "Wiener gadgets", [] { return campaigns({{"wiener-weighted", 200}, {"wiener-unweighted", 200}}); }},
      {10, "CSP pipeline",
       [] { return campaigns({{"maxsat-hyperclique", 100}, {"exact-csp", 100}, {"guessing", 20}}); }},
      {11, "coefficient bounds", coefficient_bounds},
      {12, "density datum", density_datum},
      {13, "color-coding completeness", color_coding},
  };
  const auto start = Clock::now();
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << v.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
            << seconds_since(start) << "s" << std::endl;
  return failed == 0 ? 0 : 1;
}
