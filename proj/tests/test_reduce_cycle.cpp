#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "fgr/campaign.hpp"
#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/reduce_cycle.hpp"
#include "fgr/tuple_index.hpp"

using namespace fgr;

namespace {

UniformHypergraph complete_clique(int k, int part_size, Weight w) {
  std::vector<int> part_of;
  for (int p = 0; p < k; ++p)
    for (int i = 0; i < part_size; ++i) part_of.push_back(p);
  std::vector<Edge> edges;
  const int n = k * part_size;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[a] != part_of[b]) edges.push_back({a, b, w});
  return make_clique_instance(n, part_of, k, edges);
}

void expect_clean(const std::string& name, std::int64_t trials) {
  CampaignOptions o;
  o.trials = trials;
  o.seed = 11;
  auto r = run_campaign(name, o);
  INFO(format_report(r));
  CHECK(r.mismatches == 0);
}

}  // namespace

TEST_CASE("gamma matches the window formula") {
  CHECK(gamma(5, 2) == 3);
  CHECK(gamma(6, 3) == 5);
  CHECK(gamma(4, 2) == 3);
  CHECK(gamma(3, 2) == 2);
  for (int l = 3; l <= 9; ++l)
    for (int k = 2; k < l; ++k) CHECK(gamma(l, k) == l - (l + k - 1) / k + 1);
}

TEST_CASE("hyperclique_to_hypercycle on K5") {
  auto k5 = complete_clique(5, 1, 1);
  auto red = hyperclique_to_hypercycle(k5);
  CHECK(red.instance.arity() == 3);
  auto r = bf_hypercycle(red.instance, 5, Objective::Min);
  REQUIRE(r.found);
  CHECK(r.weight == 10);
  CHECK(red.pullback(*r.witness).items.size() == 5);

  std::vector<Edge> missing;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      if (!(a == 1 && b == 3)) missing.push_back({a, b, 1});
  auto broken = make_clique_instance(5, {0, 1, 2, 3, 4}, 5, missing);
  CHECK_FALSE(bf_hypercycle(hyperclique_to_hypercycle(broken).instance, 5, Objective::Min).found);
}

TEST_CASE("hyperclique_to_hypercycle weight bound") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto h = random_partite_hypergraph(6, 2, 2, 0.8, {-8, 8}, seed);
    auto red = hyperclique_to_hypercycle(h);
    const Weight bound = binomial(gamma(6, 2), 2) * 8;
    for (const auto& e : red.instance.edges()) {
      CHECK(e.w1 <= bound);
      CHECK(e.w1 >= -bound);
    }
  }
}

TEST_CASE("hypercycle_to_digraph sizes and planted cycle") {
  // 5 parts of 2 nodes, 3-uniform: layers hold 2x2 tuples.
  std::vector<int> part_of;
  for (int p = 0; p < 5; ++p) part_of.insert(part_of.end(), {p, p});
  std::vector<Hyperedge> edges;
  Weight planted = 0;
  for (int i = 0; i < 5; ++i) {
    std::vector<NodeId> set{2 * i, 2 * ((i + 1) % 5), 2 * ((i + 2) % 5)};
    std::sort(set.begin(), set.end());
    edges.push_back({set, i - 3, 0});
    planted += i - 3;
  }
  UniformHypergraph h(10, 3, part_of, 5, edges);
  auto red = hypercycle_to_digraph(h);
  CHECK(red.instance.node_count() == 20);
  for (int i = 0; i < 5; ++i) CHECK(red.instance.layer(i).size() == 4);
  CHECK(red.instance.graph().edge_count() == 5);
  auto r = layered_min_kcycle(red.instance);
  REQUIRE(r.found);
  CHECK(r.weight == planted);
  CHECK(red.pullback(*r.witness).items == std::vector<std::int64_t>{0, 2, 4, 6, 8});

  UniformHypergraph empty(10, 3, part_of, 5, {});
  CHECK(hypercycle_to_digraph(empty).instance.graph().edge_count() == 0);
  CHECK_THROWS_AS(hypercycle_to_digraph(UniformHypergraph(10, 5, part_of, 5, {})), PreconditionError);
}

TEST_CASE("clique_to_cycle exact counts for k = 5") {
  for (int n = 2; n <= 4; ++n) {
    auto red = clique_to_cycle(complete_clique(5, n, 1));
    CHECK(red.instance.node_count() == 5 * n * n);
    CHECK(static_cast<std::int64_t>(red.instance.graph().edge_count()) == 5LL * n * n * n);
    auto r = layered_min_kcycle(red.instance);
    REQUIRE(r.found);
    CHECK(r.weight == 10);
  }
}

TEST_CASE("clique_to_cycle_direct scales by L factorial") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_clique_instance(5, 2, 0.8, {-8, 8}, seed);
    auto src = bf_min_clique(g, 5);
    auto red = clique_to_cycle_direct(g);
    auto tgt = layered_min_kcycle(red.instance);
    REQUIRE(src.found == tgt.found);
    if (!src.found) continue;
    CHECK(red.weight_map.scale == 6);
    CHECK(tgt.weight == 6 * src.weight);
    CHECK(red.weight_map.to_source(tgt.weight) == src.weight);
    CHECK_FALSE(check_witness(g, red.pullback(*tgt.witness)).has_value());
  }
}

TEST_CASE("color coding keeps only colorful layered cycles") {
  WeightedDigraph tri(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK(color_code(tri, 3, {0, 1, 2}).graph().edge_count() == 3);
  CHECK(color_code(tri, 3, {0, 2, 1}).graph().edge_count() == 0);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    auto g = random_digraph(8, 24, {-8, 8}, seed);
    for (int k = 3; k <= 4; ++k) {
      auto exact = bf_min_kcycle(g, k);
      auto cc = repeat_color_code(g, k, seed, default_color_trials(8, k), layered_min_kcycle);
      REQUIRE(cc.found == exact.found);
      if (exact.found) {
        CHECK(cc.weight == exact.weight);
        CHECK_FALSE(check_witness(g, *cc.witness).has_value());
      }
    }
  }
}

TEST_CASE("layered_min_kcycle agrees with the oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto l = random_layered(3 + seed % 4, 1, 3, 0.6, {-8, 8}, seed);
    auto a = layered_min_kcycle(l);
    auto b = bf_min_kcycle(l.graph(), l.k());
    REQUIRE(a.found == b.found);
    if (a.found) CHECK(a.weight == b.weight);
  }
}

TEST_CASE("split_layer turns k-cycles into (k+1)-cycles") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto l = random_layered(3 + seed % 3, 1, 3, 0.6, {-8, 8}, seed);
    auto red = split_layer(l);
    CHECK(red.instance.k() == l.k() + 1);
    auto a = bf_min_kcycle(l.graph(), l.k());
    auto b = layered_min_kcycle(red.instance);
    REQUIRE(a.found == b.found);
    if (!a.found) continue;
    CHECK(red.weight_map.to_source(b.weight) == a.weight);
    CHECK_FALSE(check_witness(l.graph(), red.pullback(*b.witness)).has_value());
  }
}

TEST_CASE("shortest-cycle reduction shifts every k-cycle by 4kW") {
  CHECK(shortest_cycle_shift(0) == 1);
  CHECK(shortest_cycle_shift(3) == 12);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto l = random_layered(3 + seed % 3, 1, 3, 0.6, {-8, 8}, seed);
    const Weight W = l.graph().max_abs_weight();
    auto red = min_kcycle_to_shortest_cycle(l, W);
    for (const auto& e : red.instance.edges()) CHECK(e.weight >= 0);
    auto a = bf_min_kcycle(l.graph(), l.k());
    auto b = bf_shortest_cycle(red.instance);
    REQUIRE(a.found == b.found);
    if (!a.found) continue;
    CHECK(b.weight == a.weight + l.k() * shortest_cycle_shift(W));
    CHECK(red.weight_map.to_source(b.weight) == a.weight);
    CHECK(shortest_cycle_nonnegative(red.instance).weight == b.weight);
  }
}

TEST_CASE("negative-cycle search respects the probe limit") {
  CHECK(negative_search_probe_limit(8, 5) == static_cast<int>(std::ceil(std::log2(2.0 * 8 * 5 + 2))));
  NegativeCycleSolver oracle = [](const CircleLayeredGraph& p) {
    auto r = bf_min_kcycle(p.graph(), p.k());
    return NegativeAnswer{r.found && r.weight < 0, std::nullopt};
  };
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto l = random_layered(3 + seed % 2, 1, 3, 0.6, {-5, 5}, seed);
    auto r = min_kcycle_via_negative_search(l, 5, oracle);
    auto exact = bf_min_kcycle(l.graph(), l.k());
    REQUIRE(r.result.found == exact.found);
    if (exact.found) CHECK(r.result.weight == exact.weight);
    CHECK(r.probes <= negative_search_probe_limit(5, l.k()));
  }
}

TEST_CASE("cycle campaigns are clean") {
  expect_clean("clique-cycle", 60);
  expect_clean("clique-cycle-direct", 60);
  expect_clean("hyperclique-hypercycle", 40);
  expect_clean("hypercycle-digraph", 40);
  expect_clean("shortest-cycle", 40);
  expect_clean("negative-search", 40);
}

TEST_CASE("campaign corrupt hook makes every trial fail") {
  CampaignOptions o;
  o.trials = 10;
  o.corrupt = true;
  o.cache_dir = "fgred-test-failures";
  auto r = run_campaign("clique-cycle", o);
  CHECK(r.mismatches == 10);
  REQUIRE(r.first_failure.has_value());
  CHECK(r.first_failure->seed == campaign_trial_seed(o.seed, r.first_failure->trial));
  CHECK_FALSE(run_single_trial("clique-cycle", r.first_failure->seed, o).ok);
  CHECK_THROWS_AS(run_campaign("no-such-campaign", o), PreconditionError);
  std::filesystem::remove_all(o.cache_dir);
}
