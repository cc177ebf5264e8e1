#include <doctest.h>

#include "fgr/campaign.hpp"
#include "fgr/generators.hpp"
#include "fgr/oracles.hpp"
#include "fgr/reduce_csp.hpp"
#include "fgr/tuple_index.hpp"

using namespace fgr;

namespace {

// W_1 and W_2 totals of the l-clique picked by an assignment.
std::pair<Weight, Weight> clique_weight(const CspHyperclique& red, const Assignment& a) {
  const auto& s = red.split;
  std::vector<NodeId> nodes(s.l);
  for (int g = 0; g < s.l; ++g) {
    std::uint32_t bits = 0;
    for (int j = 0; j < s.group_size; ++j) {
      const int var = g * s.group_size + j;
      bits = (bits << 1) | (var < s.real_variables ? a[var] : 0);
    }
    nodes[g] = s.node(g, bits);
  }
  Weight w1 = 0, w2 = 0;
  for (const auto& sub : k_subsets(s.l, red.arity)) {
    std::vector<NodeId> set;
    for (int g : sub) set.push_back(nodes[g]);
    const Hyperedge* e = red.instance.lookup(set);
    REQUIRE(e != nullptr);
    w1 += e->w1;
    w2 += e->w2;
  }
  return {w1, w2};
}

}  // namespace

TEST_CASE("clause polynomials") {
  auto p = clause_to_polynomial({1, 2, 3}, 3);
  std::map<Monomial, Weight> want{{{0}, 1}, {{1}, 1}, {{2}, 1}, {{0, 1}, -1}, {{0, 2}, -1}, {{1, 2}, -1},
                                  {{0, 1, 2}, 1}};
  CHECK(p.terms() == want);
  auto q = clause_to_polynomial({-1, -2}, 2);
  std::map<Monomial, Weight> nand{{{}, 1}, {{0, 1}, -1}};
  CHECK(q.terms() == nand);
  CHECK_THROWS_AS(clause_to_polynomial({1, 2, 3}, 3, 2), PreconditionError);
  CHECK_FALSE(coefficient_bounds_check(p).has_value());
}

TEST_CASE("coefficient bounds hold for every 3-variable function") {
  const std::vector<int> vars{0, 1, 2};
  for (int f = 0; f < 256; ++f) {
    std::vector<Weight> table(8);
    for (int m = 0; m < 8; ++m) table[m] = (f >> m) & 1;
    auto p = MultilinearPolynomial::from_truth_table(3, vars, table);
    CHECK_FALSE(coefficient_bounds_check(p).has_value());
  }
  MultilinearPolynomial twice(1, 1, {{{0}, 2}});
  CHECK(coefficient_bounds_check(twice).has_value());
}

TEST_CASE("group split and node encoding") {
  auto s = make_group_split(7, 3);
  CHECK(s.group_size == 3);
  CHECK(s.padded_variables() == 9);
  CHECK(s.group_of(6) == 2);
  CHECK(s.node(1, 0b101) == 13);
  CHECK(decode_assignment(s, {s.node(0, 0b100), s.node(1, 0b011), s.node(2, 0b100)}) ==
        Assignment{1, 0, 0, 0, 1, 1, 1});
}

TEST_CASE("responsible groups are the first covering subset") {
  CHECK(responsible_groups({1}, 4, 2) == std::vector<int>{0, 1});
  CHECK(responsible_groups({2, 3}, 4, 2) == std::vector<int>{2, 3});
  CHECK(responsible_groups({}, 4, 3) == std::vector<int>{0, 1, 2});
  CHECK(responsible_groups({0, 3}, 5, 3) == std::vector<int>{0, 1, 3});
}

TEST_CASE("assignments and l-cliques correspond exactly") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto f = cnf_to_csp(random_cnf(6, 12, 3, seed));
    auto red = csp_to_hyperclique(f, 4);
    CHECK(red.arity == 3);
    for (std::uint32_t mask = 0; mask < 64; ++mask) {
      Assignment a(6);
      Weight ones = 0;
      for (int i = 0; i < 6; ++i) ones += a[i] = (mask >> (5 - i)) & 1;
      auto [w1, w2] = clique_weight(red, a);
      CHECK(w1 == f.evaluate(a));
      CHECK(w2 == ones);
    }
  }
}

TEST_CASE("max CSP via hyperclique and via the cycle") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto f = cnf_to_csp(random_cnf(5 + seed % 3, 14, 3, seed));
    auto exact = bf_max_ksat(f);
    auto via = max_csp_via_hyperclique(
        f, 4, [](const UniformHypergraph& h, int size) { return bf_hyperclique(h, size, Objective::Max); });
    REQUIRE(via.found);
    CHECK(via.weight == exact.weight);
    CHECK_FALSE(check_witness(f, *via.witness).has_value());
    auto cyc = max_sat_via_cycle(f, 4, layered_min_kcycle);
    REQUIRE(cyc.found);
    CHECK(cyc.weight == exact.weight);
    CHECK_FALSE(check_witness(f, *cyc.witness).has_value());
  }
}

TEST_CASE("maxksat_to_cycle negates the weight") {
  auto f = cnf_to_csp(random_cnf(4, 8, 3, 3));
  auto red = maxksat_to_cycle(f, 4);
  CHECK(red.gamma == gamma(4, 3));
  CHECK(red.cycle.weight_map.scale == -1);
  CHECK(red.cycle.instance.k() == 4);
}

TEST_CASE("exact CSP finds planted targets") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto base = cnf_to_csp(random_cnf(6, 10, 3, seed));
    Assignment planted(6);
    Weight ones = 0;
    for (int i = 0; i < 6; ++i) ones += planted[i] = (seed >> i) & 1;
    CspInstance f(6, base.clauses(), CspTargets{ones, base.evaluate(planted)});
    auto r = exact_csp_via_hyperclique(f, 4, [](const UniformHypergraph& h, int size, Weight t) {
      return bf_hyperclique(h, size, Objective::Exact, t);
    });
    REQUIRE(r.result.found);
    CHECK_FALSE(r.used_fallback);
    CHECK_FALSE(check_witness(f, *r.result.witness).has_value());
    CHECK(r.result.witness->items == bf_exact_csp(f).witness->items);
  }
}

TEST_CASE("weight guessing agrees with the weighted search") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto f = cnf_to_csp(random_cnf(4, 6, 3, seed));
    auto red = csp_to_hyperclique(f, 4);
    auto weighted = bf_hyperclique(red.instance, 4, Objective::Max);
    auto guessed = max_hyperclique_via_guessing(red.instance, bf_detect_hyperclique);
    REQUIRE(guessed.found);
    CHECK(guessed.weight == weighted.weight);
    auto exact = exact_hyperclique_via_guessing(red.instance, weighted.weight, bf_detect_hyperclique);
    CHECK(exact.found);
    WeightGuesser guesser(red.instance, WeightGuesser::Mode::Max);
    CHECK(guesser.class_count() == 4);
  }
}

TEST_CASE("CSP campaigns are clean") {
  for (const char* name : {"maxsat-hyperclique", "exact-csp", "guessing", "maxsat-cycle"}) {
    CampaignOptions o;
    o.trials = 15;
    o.seed = 3;
    auto r = run_campaign(name, o);
    INFO(format_report(r));
    CHECK(r.mismatches == 0);
  }
}
