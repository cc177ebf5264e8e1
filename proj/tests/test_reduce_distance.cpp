#include <doctest.h>

#include "fgr/campaign.hpp"
#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/reduce_distance.hpp"

using namespace fgr;

namespace {

CircleLayeredGraph triangle(std::optional<Weight> closing) {
  std::vector<Edge> edges{{0, 1, 1}, {1, 2, 1}};
  if (closing) edges.push_back({2, 0, *closing});
  return CircleLayeredGraph(WeightedDigraph(3, edges), 3, {0, 1, 2});
}

bool has_negative_kcycle(const CircleLayeredGraph& g) {
  auto r = bf_min_kcycle(g.graph(), g.k());
  return r.found && r.weight < 0;
}

Weight v1_to_v1prime(const WienerGadget& w) {
  auto d = bf_apsp(w.graph);
  Weight total = 0;
  for (NodeId a : w.v1)
    for (NodeId b : w.v1_prime) total += *d[a][b];
  return total;
}

}  // namespace

TEST_CASE("weighted radius gadget constants") {
  auto g = triangle(-5);
  auto gadget = build_radius_gadget_weighted(g, 5);
  CHECK(gadget.F == 20 * 3 * 5);
  CHECK(gadget.threshold == 3 * gadget.F);
  CHECK(is_symmetric(gadget.graph));
  CHECK_FALSE(audit_radius_gadget(gadget, g).has_value());
  CHECK(gadget.provenance.size() == static_cast<std::size_t>(gadget.graph.node_count()));
  CHECK(bf_radius(gadget.graph) < gadget.threshold);

  auto positive = triangle(5);
  auto gp = build_radius_gadget_weighted(positive, 5);
  CHECK(bf_radius(gp.graph) >= gp.threshold);
  auto open = triangle(std::nullopt);
  auto go = build_radius_gadget_weighted(open, 5);
  CHECK(bf_radius(go.graph) >= go.threshold);
}

TEST_CASE("radius gadgets reject unsupported inputs") {
  CircleLayeredGraph even(WeightedDigraph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}), 4, {0, 1, 2, 3});
  CHECK_THROWS_AS(build_radius_gadget_weighted(even, 1), PreconditionError);
  CHECK_THROWS_AS(build_radius_gadget_unweighted(even), PreconditionError);
  CHECK_THROWS_AS(build_radius_gadget_weighted(triangle(-5), 2), PreconditionError);
  CircleLayeredGraph gap(WeightedDigraph(2, {{0, 1, 1}}), 3, {0, 1});
  CHECK_FALSE(detect_kcycle_via_radius(gap, bf_radius));
}

TEST_CASE("unweighted radius gadget decides k-cycle existence") {
  auto yes = build_radius_gadget_unweighted(triangle(7));
  CHECK(yes.threshold == 3);
  CHECK(bf_radius(yes.graph) <= 3);
  CHECK_FALSE(audit_radius_gadget(yes, triangle(7)).has_value());
  auto no = build_radius_gadget_unweighted(triangle(std::nullopt));
  CHECK(bf_radius(no.graph) > 3);
}

TEST_CASE("radius decisions agree with the oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int k = seed % 2 ? 5 : 3;
    auto g = random_layered(k, 1, 2, 0.6, {-4, 4}, seed);
    bool empty_layer = false;
    for (int i = 0; i < k; ++i) empty_layer |= g.layer(i).empty();
    if (empty_layer) continue;
    CHECK(decide_negcycle_via_radius(g, 4, bf_radius) == has_negative_kcycle(g));
    CHECK(detect_kcycle_via_radius(g, bf_radius) == bf_kcycle_detect(g.graph(), k));
  }
}

TEST_CASE("radius_via_apsp matches the oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = build_radius_gadget_weighted(random_layered(3, 1, 2, 0.7, {-3, 3}, seed), 3).graph;
    CHECK(radius_via_apsp(bf_apsp(g)) == bf_radius(g));
  }
}

TEST_CASE("Wiener evaluation equals the V1 to V1' distance sum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int k = seed % 2 ? 5 : 3;
    auto g = random_layered(k, 1, 2, 0.7, {-4, 4}, seed);
    bool empty_layer = false;
    for (int i = 0; i < k; ++i) empty_layer |= g.layer(i).empty();
    if (empty_layer) continue;
    for (bool weighted : {true, false}) {
      auto w = weighted ? build_wiener_gadget_weighted(g, 4) : build_wiener_gadget_unweighted(g);
      auto eval = evaluate_wiener(w, bf_wiener);
      CHECK(eval.solver_calls == 4);
      CHECK(eval.value == v1_to_v1prime(w));
      const bool cycle = weighted ? has_negative_kcycle(g) : bf_kcycle_detect(g.graph(), k);
      CHECK((eval.value < w.threshold) == cycle);
    }
  }
}

TEST_CASE("Wiener no-cycle closed forms") {
  auto open = triangle(std::nullopt);
  auto w = build_wiener_gadget_weighted(open, 2);
  const Weight n1 = w.v1_size;
  CHECK(w.threshold == (3 * w.F - 3 * 2) * n1 * n1 + n1 * 3 * 2);
  CHECK(evaluate_wiener(w, bf_wiener).value == w.threshold);
  auto u = build_wiener_gadget_unweighted(open);
  CHECK(u.threshold == n1 * n1 * 3 + n1);
  CHECK(evaluate_wiener(u, bf_wiener).value == u.threshold);
  CHECK(decide_negcycle_via_wiener(triangle(-5), 5, bf_wiener));
  CHECK_FALSE(decide_negcycle_via_wiener(triangle(5), 5, bf_wiener));
  CHECK(detect_kcycle_via_wiener(triangle(5), bf_wiener));
  CHECK_FALSE(detect_kcycle_via_wiener(open, bf_wiener));
}

TEST_CASE("distance campaigns are clean") {
  for (const char* name : {"radius-weighted", "radius-unweighted", "wiener-weighted", "wiener-unweighted"}) {
    CampaignOptions o;
    o.trials = 40;
    o.seed = 5;
    auto r = run_campaign(name, o);
    INFO(format_report(r));
    CHECK(r.mismatches == 0);
  }
}
