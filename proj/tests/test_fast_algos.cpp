#include <doctest.h>

#include <cmath>

#include "fgr/campaign.hpp"
#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/fast_algos.hpp"

using namespace fgr;

TEST_CASE("heavy degree threshold") {
  CHECK(heavy_degree_threshold(1, 5) == 1);
  CHECK(heavy_degree_threshold(27, 5) == 3);
  CHECK(heavy_degree_threshold(28, 5) == 4);
  CHECK(heavy_degree_threshold(1024, 4) == 32);
  CHECK(heavy_degree_threshold(32768, 5) == 32);
}

TEST_CASE("bounded path enumeration") {
  // 0 -> 1 -> 2 and 0 -> 3 -> 2 with different weights; 3 has the wrong color.
  WeightedDigraph g(4, {{0, 1, 4}, {1, 2, 1}, {0, 3, -3}, {3, 2, 1}});
  std::int64_t built = 0;
  auto paths = enumerate_bounded_paths(g, 2, {0, 1, 0, 1}, 1, &built);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].weight == -2);
  CHECK(paths[0].path == std::vector<NodeId>{0, 3, 2});
  CHECK(built == 2);
  CHECK(enumerate_bounded_paths(g, 2, {0, 1, 0, 0}, 1).front().weight == 5);
  CHECK(enumerate_bounded_paths(g, 1, {0, 0, 0, 0}, 1).size() == 4);
}

TEST_CASE("shortest k-cycle through a node") {
  WeightedDigraph g(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, -2}, {3, 4, -2}, {4, 0, -2}, {2, 3, 0}});
  auto r = shortest_kcycle_through(g, 0, 3, 1, 200);
  REQUIRE(r.found);
  CHECK(r.weight == -6);
  CHECK(r.witness->items.front() == 0);
  CHECK_FALSE(shortest_kcycle_through(g, 1, 4, 1, 200).found);
  auto via1 = shortest_kcycle_through(g, 1, 3, 1, 200);
  REQUIRE(via1.found);
  CHECK(via1.weight == 3);
}

TEST_CASE("min_weight_kcycle agrees with the oracle and its stats bounds") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 5 + static_cast<int>(seed % 7);
    const int k = 3 + static_cast<int>(seed % 3);
    auto g = random_digraph(n, std::min<std::int64_t>(n * (n - 1), 3 * n), {-8, 8}, seed);
    AlgoStats st;
    auto got = min_weight_kcycle(g, k, seed, &st);
    auto want = bf_min_kcycle(g, k);
    REQUIRE(got.found == want.found);
    if (want.found) {
      CHECK(got.weight == want.weight);
      CHECK_FALSE(check_witness(g, *got.witness).has_value());
    }
    const double m = static_cast<double>(g.edge_count());
    CHECK(st.delta == heavy_degree_threshold(g.edge_count(), k));
    CHECK(st.heavy_node_count <= 2 * m / st.delta);
    CHECK(st.paths_enumerated <= m * std::pow(st.delta, (k + 1) / 2 - 1));
  }
}

TEST_CASE("min_weight_kcycle is deterministic and thread independent") {
  auto g = random_digraph(10, 40, {-8, 8}, 4);
  MinCycleOptions one, two;
  two.threads = 2;
  auto a = min_weight_kcycle(g, 4, 9, nullptr, one);
  auto b = min_weight_kcycle(g, 4, 9, nullptr, two);
  CHECK(a.found == b.found);
  CHECK(a.weight == b.weight);
  CHECK(a.witness == b.witness);
}

TEST_CASE("density self-reduction agrees with the oracle") {
  KCycleSolver solver = [](const WeightedDigraph& h, int k) { return bf_min_kcycle(h, k); };
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_digraph(10, 30, {-8, 8}, seed);
    const int k = 3 + static_cast<int>(seed % 3);
    DensityStats st;
    auto got = density_self_reduction(g, k, 2, 2.0, seed, solver, &st);
    auto want = bf_min_kcycle(g, k);
    REQUIRE(got.found == want.found);
    if (want.found) CHECK(got.weight == want.weight);
    CHECK(st.attempts >= 1);
  }
}

TEST_CASE("fast campaigns are clean") {
  for (const char* name : {"min-kcycle-fast", "density"}) {
    CampaignOptions o;
    o.trials = 30;
    o.seed = 8;
    auto r = run_campaign(name, o);
    INFO(format_report(r));
    CHECK(r.mismatches == 0);
  }
}
