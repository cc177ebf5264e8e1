#include <doctest.h>

#include "fgr/generators.hpp"
#include "fgr/reduce_csp.hpp"
#include "fgr/text_io.hpp"
#include "fgr/tuple_index.hpp"

using namespace fgr;

TEST_CASE("validate digraph invariants") {
  std::vector<Edge> triangle{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  CHECK_FALSE(validate_digraph(3, triangle).has_value());

  std::vector<Edge> loop{{0, 0, 1}};
  auto v = validate_digraph(1, loop);
  REQUIRE(v.has_value());
  CHECK(v->find("self-loop") != std::string::npos);

  std::vector<Edge> dup{{0, 1, 1}, {0, 1, 2}};
  CHECK(validate_digraph(2, dup).has_value());
  std::vector<Edge> heavy{{0, 1, 11}};
  CHECK(validate_digraph(2, heavy, 10).has_value());
  CHECK_THROWS_AS(WeightedDigraph(1, loop), InvalidInstance);
}

TEST_CASE("validate layered graph") {
  WeightedDigraph g(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
  std::vector<int> good{0, 1, 2};
  CHECK_FALSE(validate_layered(g, 3, good).has_value());
  WeightedDigraph bad(3, {{0, 1, 1}});
  std::vector<int> same{0, 0, 1};
  auto v = validate_layered(bad, 3, same);
  REQUIRE(v.has_value());
  CHECK(v->find("layer constraint") != std::string::npos);
}

TEST_CASE("validate hypergraph") {
  std::vector<Hyperedge> ok{{{0, 1, 2}, 1, 0}};
  std::vector<int> parts{0, 1, 2, 0};
  CHECK_FALSE(validate_hypergraph(4, 3, &parts, 3, ok).has_value());
  std::vector<Hyperedge> same_part{{{0, 1, 3}, 1, 0}};
  CHECK(validate_hypergraph(4, 3, &parts, 3, same_part).has_value());
  std::vector<Hyperedge> dup{{{0, 1, 2}, 1, 0}, {{2, 1, 0}, 1, 0}};
  CHECK(validate_hypergraph(4, 3, nullptr, 0, dup).has_value());
}

TEST_CASE("tuple_index is a mixed-radix bijection") {
  std::vector<int> parts{2, 3};
  CHECK(tuple_index(parts, std::vector<int>{1, 2}) == 5);
  CHECK(tuple_from_index(parts, 5) == std::vector<int>{1, 2});
  std::vector<int> single{5};
  CHECK(tuple_index(single, std::vector<int>{3}) == 3);
  // Enumerate in mixed-radix order: (0,0),(0,1),(0,2),(1,0),...
  std::int64_t expect = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(tuple_index(parts, std::vector<int>{a, b}) == expect);
      CHECK(tuple_from_index(parts, expect) == std::vector<int>{a, b});
      ++expect;
    }
  CHECK_THROWS_AS(tuple_index(parts, std::vector<int>{2, 0}), PreconditionError);
}

TEST_CASE("checked arithmetic aborts on overflow") {
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(Weight{1} << 40, Weight{1} << 40), OverflowError);
  CHECK(binomial(5, 2) == 10);
  CHECK(factorial(5) == 120);
}

TEST_CASE("digraph text round trip") {
  const std::string text = "digraph 3 3\n0 1 1\n1 2 1\n2 0 1\n";
  auto g = parse_digraph(text);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(emit_digraph(g) == text);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = random_digraph(9, 20, {-8, 8}, seed);
    CHECK(parse_digraph(emit_digraph(r)) == r);
  }
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_digraph("digraph 2 1\n0 1 x5\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  try {
    parse_digraph("# comment\ndigraph 2 1\n0 0 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_digraph("digraph 2 2\n0 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_layered("layered 2 1 3\n0 0\n0 1 1\n"), ParseError);
}

TEST_CASE("layered and hypergraph round trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto l = random_layered(4, 0, 3, 0.5, {-5, 5}, seed);
    CHECK(parse_layered(emit_layered(l)) == l);
    auto h = random_partite_hypergraph(5, 3, 3, 0.4, {-4, 4}, seed);
    CHECK(parse_hypergraph(emit_hypergraph(h)) == h);
    auto u = random_hypergraph(8, 3, 12, {-4, 4}, seed);
    CHECK(parse_hypergraph(emit_hypergraph(u)) == u);
  }
  UniformHypergraph dual(3, 2, {{{0, 1}, 4, 7}, {{1, 2}, -1, 0}});
  CHECK(parse_hypergraph(emit_hypergraph(dual)) == dual);
}

TEST_CASE("DIMACS and CSP formats") {
  auto f = parse_dimacs("c example\np cnf 2 1\n1 -2 0\n");
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::vector<int>{1, -2});
  auto csp = cnf_to_csp(f);
  // x1 ∨ ¬x2 = 1 − x2 + x1·x2
  Assignment a{0, 1};
  CHECK(csp.evaluate(a) == 0);
  a = {1, 1};
  CHECK(csp.evaluate(a) == 1);
  CHECK(parse_csp(emit_csp(csp)) == csp);
  CHECK(emit_csp(csp) == "csp 2 1\n1+1*1*2+-1*2\n");
  CHECK(parse_dimacs(emit_dimacs(f)) == f);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto cnf = random_cnf(8, 16, 3, seed);
    CHECK(parse_dimacs(emit_dimacs(cnf)) == cnf);
    auto c = cnf_to_csp(cnf);
    CHECK(parse_csp(emit_csp(c)) == c);
  }
  CspInstance with_targets(3, {}, CspTargets{2, 0});
  CHECK(parse_csp(emit_csp(with_targets)) == with_targets);
  CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_csp("csp 2 1\n1*x\n"), ParseError);
}

TEST_CASE("witness and weight map formats") {
  Witness w{WitnessKind::Cycle, {0, 4, 2}, -7};
  CHECK(emit_witness(w) == "witness cycle -7\n0 4 2\n");
  CHECK(parse_witness(emit_witness(w)) == w);
  WeightMap m{1, 60};
  CHECK(parse_weight_map(emit_weight_map(m)) == m);
  CHECK(m.to_source(58) == -2);
  WeightMap scaled{6, 0};
  CHECK_THROWS_AS(scaled.to_source(7), PreconditionError);
}

TEST_CASE("generators are deterministic") {
  CHECK(emit_digraph(random_digraph(12, 30, {-8, 8}, 7)) == emit_digraph(random_digraph(12, 30, {-8, 8}, 7)));
  CHECK(emit_digraph(planted_kcycle(12, 30, 5, 8, 7)) == emit_digraph(planted_kcycle(12, 30, 5, 8, 7)));
  CHECK(emit_dimacs(random_cnf(8, 16, 3, 1)) == emit_dimacs(random_cnf(8, 16, 3, 1)));
  CHECK(random_digraph(12, 30, {-8, 8}, 7).edge_count() == 30);
  CHECK(emit_digraph(random_digraph(12, 30, {-8, 8}, 7)) != emit_digraph(random_digraph(12, 30, {-8, 8}, 8)));
}
