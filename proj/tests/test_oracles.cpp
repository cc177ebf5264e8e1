#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/reduce_csp.hpp"

using namespace fgr;

namespace {

// Independent permutation scan: every ordered k-tuple of distinct nodes.
std::optional<Weight> naive_min_kcycle(const WeightedDigraph& g, int k) {
  std::optional<Weight> best;
  std::vector<int> pick(g.node_count(), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<NodeId> nodes;
    for (int v = 0; v < g.node_count(); ++v)
      if (pick[v]) nodes.push_back(v);
    do {
      Weight w = 0;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        auto e = g.weight(nodes[i], nodes[(i + 1) % k]);
        ok = e.has_value();
        if (ok) w += *e;
      }
      if (ok && (!best || w < *best)) best = w;
    } while (std::next_permutation(nodes.begin(), nodes.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

Weight naive_max_sat(const CspInstance& f) {
  const int n = f.variable_count();
  Weight best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
    best = std::max(best, f.evaluate(a));
  }
  return best;
}

}  // namespace

TEST_CASE("bf_min_kcycle on small fixed graphs") {
  WeightedDigraph tri(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
  auto r = bf_min_kcycle(tri, 3);
  REQUIRE(r.found);
  CHECK(r.weight == 6);
  CHECK(r.witness->items == std::vector<std::int64_t>{0, 1, 2});
  CHECK_FALSE(check_witness(tri, *r.witness).has_value());
  CHECK_FALSE(bf_min_kcycle(tri, 4).found);
  CHECK_FALSE(bf_kcycle_detect(tri, 2));

  WeightedDigraph reversed(3, {{1, 0, 1}, {2, 1, 2}, {0, 2, 3}});
  CHECK(bf_min_kcycle(reversed, 3).witness->items == std::vector<std::int64_t>{0, 2, 1});

  WeightedDigraph anti(2, {{0, 1, -4}, {1, 0, 1}});
  CHECK(bf_min_kcycle(anti, 2).weight == -3);
  CHECK(bf_shortest_cycle(anti).weight == -3);
}

TEST_CASE("bf_min_kcycle agrees with a permutation scan") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    auto g = random_digraph(n, n * 2, {-8, 8}, seed);
    for (int k = 2; k <= std::min(n, 5); ++k) {
      auto r = bf_min_kcycle(g, k);
      auto naive = naive_min_kcycle(g, k);
      REQUIRE(r.found == naive.has_value());
      if (r.found) {
        CHECK(r.weight == *naive);
        CHECK_FALSE(check_witness(g, *r.witness).has_value());
      }
      CHECK(bf_kcycle_detect(g, k) == naive.has_value());
    }
  }
}

TEST_CASE("bf_shortest_cycle is the minimum over all lengths") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_digraph(6, 12, {-5, 9}, seed);
    std::optional<Weight> best;
    for (int k = 2; k <= 6; ++k)
      if (auto w = naive_min_kcycle(g, k); w && (!best || *w < *best)) best = w;
    auto r = bf_shortest_cycle(g);
    REQUIRE(r.found == best.has_value());
    if (r.found) CHECK(r.weight == *best);
  }
}

TEST_CASE("bf_min_clique and bf_hyperclique") {
  std::vector<Edge> k5;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) k5.push_back({a, b, 1});
  auto g = make_clique_instance(5, {0, 1, 2, 3, 4}, 5, k5);
  auto r = bf_min_clique(g, 5);
  REQUIRE(r.found);
  CHECK(r.weight == 10);
  CHECK_FALSE(check_witness(g, *r.witness).has_value());

  k5.pop_back();
  auto missing = make_clique_instance(5, {0, 1, 2, 3, 4}, 5, k5);
  CHECK_FALSE(bf_min_clique(missing, 5).found);
  CHECK(bf_min_clique(missing, 4).found);

  UniformHypergraph h(4, 3, {{{0, 1, 2}, 5, 0}, {{0, 1, 3}, -2, 0}, {{0, 2, 3}, 1, 0}, {{1, 2, 3}, 4, 0}});
  CHECK(bf_hyperclique(h, 4, Objective::Max).weight == 8);
  CHECK(bf_hyperclique(h, 4, Objective::Min).weight == 8);
  CHECK_THROWS_AS(bf_hyperclique(h, 3, Objective::Max), PreconditionError);
  auto exact = bf_hyperclique(h, 4, Objective::Exact, 8);
  REQUIRE(exact.found);
  CHECK(exact.witness->items == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK_FALSE(bf_hyperclique(h, 4, Objective::Exact, 7).found);

  UniformHypergraph two(5, 2, {{{0, 1}, 3, 0}, {{0, 2}, -1, 0}, {{1, 2}, 2, 0}, {{2, 3}, 5, 0}, {{1, 3}, 1, 0}});
  CHECK(bf_hyperclique(two, 3, Objective::Max).weight == 8);
  CHECK(bf_hyperclique(two, 3, Objective::Min).weight == 4);
  auto e8 = bf_hyperclique(two, 3, Objective::Exact, 8);
  REQUIRE(e8.found);
  CHECK(e8.witness->items == std::vector<std::int64_t>{1, 2, 3});
}

TEST_CASE("bf_hypercycle and the part-ordered variant") {
  // Windows of 3 consecutive parts of a 4-partite instance, one node per part.
  UniformHypergraph h(4, 3, {0, 1, 2, 3}, 4,
                      {{{0, 1, 2}, 1, 0}, {{1, 2, 3}, 2, 0}, {{0, 2, 3}, 3, 0}, {{0, 1, 3}, 4, 0}});
  auto any = bf_hypercycle(h, 4, Objective::Min);
  auto ordered = bf_partite_hypercycle(h, Objective::Min);
  REQUIRE(any.found);
  REQUIRE(ordered.found);
  CHECK(any.weight == 10);
  CHECK(ordered.weight == 10);
  CHECK(ordered.witness->items == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK_FALSE(check_witness(h, *ordered.witness).has_value());

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto p = random_partite_hypergraph(4, 2, 2, 0.7, {-6, 6}, seed);
    auto a = bf_partite_hypercycle(p, Objective::Min);
    auto b = bf_hypercycle(p, 4, Objective::Min);
    // Every part-ordered cycle is a tight cycle, so the unordered optimum is no worse.
    if (a.found) {
      REQUIRE(b.found);
      CHECK(b.weight <= a.weight);
      CHECK_FALSE(check_witness(p, *a.witness).has_value());
    }
  }
}

TEST_CASE("distances, radius and Wiener index") {
  WeightedDigraph cyc(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK(bf_radius(cyc) == 2);
  CHECK(bf_wiener(cyc) == 9);
  auto d = single_source_distances(cyc, 1);
  CHECK(d[0] == 2);
  CHECK(d[2] == 1);

  WeightedDigraph path(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK_THROWS_AS(bf_radius(path), PreconditionError);
  WeightedDigraph neg(2, {{0, 1, -3}, {1, 0, 1}});
  CHECK_THROWS_AS(bf_apsp(neg), PreconditionError);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_digraph(7, 30, {0, 9}, seed);
    auto apsp = bf_apsp(g);
    for (int s = 0; s < g.node_count(); ++s) CHECK(single_source_distances(g, s) == apsp[s]);
  }
}

TEST_CASE("bf_max_ksat and bf_exact_csp") {
  Cnf f{3, {{1, 2}, {-1}, {-2}, {3, -1}}};
  auto csp = cnf_to_csp(f);
  auto r = bf_max_ksat(csp);
  REQUIRE(r.found);
  CHECK(r.weight == 3);
  CHECK(r.witness->items == std::vector<std::int64_t>{0, 0, 0});
  CHECK_FALSE(check_witness(csp, *r.witness).has_value());

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto c = cnf_to_csp(random_cnf(7, 14, 3, seed));
    CHECK(bf_max_ksat(c).weight == naive_max_sat(c));
  }

  CspInstance exact(3, csp.clauses(), CspTargets{0, 3});
  auto e = bf_exact_csp(exact);
  REQUIRE(e.found);
  CHECK(e.witness->items == std::vector<std::int64_t>{0, 0, 0});
  CspInstance impossible(3, csp.clauses(), CspTargets{3, 4});
  CHECK_FALSE(bf_exact_csp(impossible).found);
}

TEST_CASE("check_witness rejects bad witnesses") {
  WeightedDigraph tri(3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}});
  CHECK(check_witness(tri, Witness{WitnessKind::Cycle, {0, 2, 1}, 6}).has_value());
  CHECK(check_witness(tri, Witness{WitnessKind::Cycle, {0, 1, 2}, 5}).has_value());
  CHECK(check_witness(tri, Witness{WitnessKind::Cycle, {0, 1, 1}, 6}).has_value());
  CHECK_FALSE(check_witness(tri, Witness{WitnessKind::Cycle, {1, 2, 0}, 6}).has_value());
}
