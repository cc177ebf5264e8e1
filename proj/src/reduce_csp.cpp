#include "fgr/reduce_csp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "fgr/errors.hpp"
#include "fgr/oracles.hpp"
#include "fgr/tuple_index.hpp"

namespace fgr {

MultilinearPolynomial clause_to_polynomial(const std::vector<int>& clause, int variable_count, int k) {
  std::vector<int> vars;
  for (int lit : clause) {
    if (lit == 0) throw PreconditionError("literal 0 inside a clause");
    int v = std::abs(lit) - 1;
    if (v >= variable_count) throw PreconditionError("literal " + std::to_string(lit) + " out of range");
    vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (k >= 0 && static_cast<int>(vars.size()) > k)
    throw PreconditionError("clause has " + std::to_string(vars.size()) + " variables, more than k = " +
                            std::to_string(k));
  if (vars.size() > 20) throw PreconditionError("clause support too large for a truth table");
  std::vector<Weight> table(std::size_t{1} << vars.size());
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    bool sat = false;
    for (int lit : clause) {
      int j = static_cast<int>(std::lower_bound(vars.begin(), vars.end(), std::abs(lit) - 1) - vars.begin());
      bool value = (mask >> j) & 1;
      if (value == (lit > 0)) sat = true;
    }
    table[mask] = sat ? 1 : 0;
  }
  return MultilinearPolynomial::from_truth_table(variable_count, vars, table);
}

CspInstance cnf_to_csp(const Cnf& f) {
  std::vector<MultilinearPolynomial> clauses;
  clauses.reserve(f.clauses.size());
  for (const auto& c : f.clauses) clauses.push_back(clause_to_polynomial(c, f.variable_count));
  return CspInstance(f.variable_count, std::move(clauses));
}

std::optional<std::string> coefficient_bounds_check(const MultilinearPolynomial& p) {
  for (const auto& [mono, coef] : p.terms()) {
    const int g = static_cast<int>(mono.size());
    if (g == 0) {
      if (coef != 0 && coef != 1) return "constant term " + std::to_string(coef) + " not in {0,1}";
      continue;
    }
    if (g > 62) return "degree too large to bound";
    const Weight limit = Weight{1} << (g - 1);
    if (coef < -limit || coef > limit) {
      std::string name;
      for (int v : mono) name += (name.empty() ? "x" : "*x") + std::to_string(v + 1);
      return "coefficient " + std::to_string(coef) + " of " + name + " outside [-" + std::to_string(limit) + "," +
             std::to_string(limit) + "]";
    }
  }
  const auto support = p.support();
  if (support.size() <= 16) {
    Assignment a(p.variable_count(), 0);
    for (std::uint32_t mask = 0; mask < (1u << support.size()); ++mask) {
      for (std::size_t j = 0; j < support.size(); ++j) a[support[j]] = (mask >> j) & 1;
      Weight v = p.evaluate(a);
      if (v != 0 && v != 1) return "polynomial takes value " + std::to_string(v);
    }
  }
  return std::nullopt;
}

GroupSplit make_group_split(int variable_count, int l) {
  if (l < 1) throw PreconditionError("group count must be positive");
  GroupSplit s;
  s.l = l;
  s.real_variables = variable_count;
  s.group_size = std::max(1, (variable_count + l - 1) / l);
  return s;
}

std::vector<int> responsible_groups(const std::vector<int>& groups, int l, int k) {
  if (static_cast<int>(groups.size()) > k) throw PreconditionError("more groups than the edge arity");
  std::vector<int> out = groups;
  for (int g = 0; g < l && static_cast<int>(out.size()) < k; ++g)
    if (!std::binary_search(groups.begin(), groups.end(), g)) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

Assignment decode_assignment(const GroupSplit& split, const std::vector<std::int64_t>& nodes) {
  const int s = split.group_size;
  if (static_cast<int>(nodes.size()) != split.l) throw PreconditionError("expected one node per group");
  Assignment a(split.real_variables, 0);
  std::vector<bool> seen(split.l, false);
  for (std::int64_t node : nodes) {
    const int g = static_cast<int>(node >> s);
    if (g < 0 || g >= split.l || seen[g]) throw PreconditionError("witness does not pick one node per group");
    seen[g] = true;
    const std::uint32_t bits = static_cast<std::uint32_t>(node & ((std::int64_t{1} << s) - 1));
    for (int j = 0; j < s; ++j) {
      const int var = g * s + j;
      if (var < split.real_variables) a[var] = (bits >> (s - 1 - j)) & 1;
    }
  }
  return a;
}

namespace {

struct Term {
  Monomial vars;
  Weight coef;
};

Witness assignment_witness(const CspInstance& f, const Assignment& a) {
  Witness w{WitnessKind::Assignment, {}, f.evaluate(a)};
  w.items.assign(a.begin(), a.end());
  return w;
}

}  // namespace

CspHyperclique csp_to_hyperclique(const CspInstance& f, int l, int k, int max_group_size) {
  if (k < 0) k = std::max(2, f.degree());
  if (k < f.degree()) throw PreconditionError("edge arity below the clause degree");
  if (l <= k) throw PreconditionError("need l > k, got l = " + std::to_string(l) + ", k = " + std::to_string(k));
  GroupSplit split = make_group_split(f.variable_count(), l);
  const int s = split.group_size;
  if (s > max_group_size)
    throw PreconditionError("group size " + std::to_string(s) + " exceeds the cap " + std::to_string(max_group_size));
  const int n = f.variable_count();

  std::map<Monomial, Weight> total;
  for (const auto& c : f.clauses())
    for (const auto& [mono, coef] : c.terms()) total[mono] = checked_add(total[mono], coef);

  const auto classes = k_subsets(l, k);
  std::map<std::vector<int>, std::size_t> class_index;
  for (std::size_t i = 0; i < classes.size(); ++i) class_index[classes[i]] = i;
  std::vector<std::vector<Term>> owned_terms(classes.size());
  for (const auto& [mono, coef] : total) {
    if (coef == 0) continue;
    std::vector<int> groups;
    for (int v : mono) groups.push_back(split.group_of(v));
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    owned_terms[class_index.at(responsible_groups(groups, l, k))].push_back({mono, coef});
  }
  std::vector<std::vector<int>> owned_groups(classes.size());
  for (int g = 0; g < l; ++g) owned_groups[class_index.at(responsible_groups({g}, l, k))].push_back(g);

  // |W_1(e)| <= m n^k 2^k, kept as a validity assertion.
  long double w1_limit = static_cast<long double>(f.clauses().size()) * std::pow(2.0L * std::max(n, 1), k);
  const Weight w2_limit = static_cast<Weight>(k) * s;

  const std::uint32_t per_group = 1u << s;
  std::vector<int> radix(k, static_cast<int>(per_group));
  const std::int64_t combos = tuple_count(radix);
  std::vector<Hyperedge> edges;
  edges.reserve(static_cast<std::size_t>(checked_mul(combos, static_cast<Weight>(classes.size()))));
  Weight bound = 1;
  std::vector<int> bits_of_group(l, 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& groups = classes[c];
    for (std::int64_t idx = 0; idx < combos; ++idx) {
      auto choice = tuple_from_index(radix, idx);
      Hyperedge e;
      for (int j = 0; j < k; ++j) {
        bits_of_group[groups[j]] = choice[j];
        e.nodes.push_back(split.node(groups[j], choice[j]));
      }
      auto value = [&](int var) { return (bits_of_group[var / s] >> (s - 1 - var % s)) & 1; };
      for (const Term& t : owned_terms[c]) {
        bool on = true;
        for (int v : t.vars) on = on && value(v);
        if (on) e.w1 = checked_add(e.w1, t.coef);
      }
      for (int g : owned_groups[c])
        for (int j = 0; j < s; ++j)
          if (g * s + j < n) e.w2 += value(g * s + j);
      if (static_cast<long double>(checked_abs(e.w1)) > w1_limit) throw Error("W_1 exceeds m n^k 2^k");
      if (e.w2 > w2_limit) throw Error("W_2 exceeds k n/l");
      bound = std::max({bound, checked_abs(e.w1), e.w2});
      edges.push_back(std::move(e));
    }
  }

  const int node_count = l * static_cast<int>(per_group);
  std::vector<int> part_of(node_count);
  for (int v = 0; v < node_count; ++v) part_of[v] = v >> s;
  CspHyperclique out{UniformHypergraph(node_count, k, std::move(part_of), l, std::move(edges), bound), split, k, nullptr};
  out.pullback = [f, split](const Witness& w) {
    if (w.kind != WitnessKind::Hyperclique) throw PreconditionError("pullback expects a hyperclique witness");
    return assignment_witness(f, decode_assignment(split, w.items));
  };
  return out;
}

SolveResult max_csp_via_hyperclique(const CspInstance& f, int l, const HypercliqueSolver& solver) {
  CspHyperclique red = csp_to_hyperclique(f, l);
  SolveResult r = solver(red.instance, l);
  if (!r.found || !r.witness) return SolveResult::none();
  Witness w = red.pullback(*r.witness);
  if (w.claimed_weight != r.weight) throw Error("hyperclique weight disagrees with the decoded assignment");
  return SolveResult::of(std::move(w));
}

ExactCspResult exact_csp_via_hyperclique(const CspInstance& f, int l, const ExactHypercliqueSolver& solver) {
  if (!f.targets()) throw PreconditionError("exact CSP needs K_v and K_p");
  CspHyperclique red = csp_to_hyperclique(f, l);
  const int n = f.variable_count();
  ExactCspResult out;
  const Weight literal = checked_mul(checked_mul(2, binomial(l, red.arity)), red.split.group_size);
  out.multiplier = literal;
  if (literal <= n) {
    out.used_fallback = true;
    out.multiplier = 1;
    while (out.multiplier <= n) out.multiplier *= 2;
  }
  // Every full selection has W_2 total = popcount <= n < multiplier.
  if (out.multiplier <= n) throw Error("separation constant does not exceed n");

  std::vector<Hyperedge> edges;
  Weight bound = 1;
  for (const auto& e : red.instance.edges()) {
    Weight w = checked_add(checked_mul(e.w1, out.multiplier), e.w2);
    bound = std::max(bound, checked_abs(w));
    edges.push_back({e.nodes, w, 0});
  }
  UniformHypergraph combined(red.instance.node_count(), red.arity, red.instance.parts(), l, std::move(edges), bound);
  const CspTargets t = *f.targets();
  out.target = checked_add(checked_mul(t.k_p, out.multiplier), t.k_v);
  SolveResult r = solver(combined, l, out.target);
  if (!r.found || !r.witness) return out;
  Witness w = red.pullback(*r.witness);
  Weight ones = 0;
  for (auto b : w.items) ones += b;
  if (w.claimed_weight != t.k_p || ones != t.k_v) throw Error("exact hyperclique decoded to the wrong (K_p, K_v)");
  out.result = SolveResult::of(std::move(w));
  return out;
}

WeightGuesser::WeightGuesser(const UniformHypergraph& h, Mode mode, Weight target, std::int64_t cap) : h_(h) {
  if (!h.partitioned()) throw PreconditionError("weight guessing needs a partitioned hypergraph");
  classes_ = k_subsets(h.part_count(), h.arity());
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < classes_.size(); ++i) index[classes_[i]] = i;
  std::vector<std::set<Weight>> present(classes_.size());
  class_edges_.assign(classes_.size(), {});
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    std::vector<int> parts;
    for (NodeId v : h.edges()[i].nodes) parts.push_back(h.part_of(v));
    std::sort(parts.begin(), parts.end());
    auto it = index.find(parts);
    if (it == index.end()) continue;  // two nodes in one part: never in a hyperclique
    present[it->second].insert(h.edges()[i].w1);
    class_edges_[it->second].push_back(i);
  }
  std::vector<int> radix;
  for (const auto& p : present) {
    values_.emplace_back(p.rbegin(), p.rend());
    radix.push_back(static_cast<int>(p.size()));
  }
  long double combos = 1;
  for (int r : radix) combos *= r;
  if (combos > static_cast<long double>(cap))
    throw PreconditionError("guess combinations exceed the cap of " + std::to_string(cap));
  const std::int64_t count = tuple_count(radix);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    auto pick = tuple_from_index(radix, idx);
    Weight total = 0;
    for (std::size_t c = 0; c < pick.size(); ++c) total = checked_add(total, values_[c][pick[c]]);
    if (mode == Mode::Exact && total != target) continue;
    order_.emplace_back(total, idx);
  }
  // Values are listed in decreasing order, so a stable sort by total keeps
  // ties in index order.
  if (mode == Mode::Max)
    std::stable_sort(order_.begin(), order_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
}

bool WeightGuesser::next(UniformHypergraph& out, std::vector<Weight>& guess, Weight& total) {
  if (cursor_ >= order_.size()) return false;
  const auto [sum, idx] = order_[cursor_++];
  std::vector<int> radix;
  for (const auto& v : values_) radix.push_back(static_cast<int>(v.size()));
  auto pick = tuple_from_index(radix, idx);
  guess.assign(pick.size(), 0);
  std::vector<Hyperedge> edges;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    guess[c] = values_[c][pick[c]];
    for (std::size_t i : class_edges_[c])
      if (h_.edges()[i].w1 == guess[c]) edges.push_back({h_.edges()[i].nodes, 0, 0});
  }
  out = UniformHypergraph(h_.node_count(), h_.arity(), h_.parts(), h_.part_count(), std::move(edges));
  total = sum;
  return true;
}

std::optional<Witness> bf_detect_hyperclique(const UniformHypergraph& h, int size) {
  SolveResult r = bf_hyperclique(h, size, Objective::Max);
  if (!r.found) return std::nullopt;
  return r.witness;
}

namespace {

Weight clique_w1(const UniformHypergraph& h, const std::vector<std::int64_t>& items) {
  std::vector<NodeId> nodes(items.begin(), items.end());
  std::sort(nodes.begin(), nodes.end());
  Weight sum = 0;
  for (const auto& pick : k_subsets(static_cast<int>(nodes.size()), h.arity())) {
    std::vector<NodeId> sub;
    for (int p : pick) sub.push_back(nodes[p]);
    const Hyperedge* e = h.lookup(sub);
    if (!e) throw Error("guessed hyperclique is missing a hyperedge");
    sum = checked_add(sum, e->w1);
  }
  return sum;
}

SolveResult first_guess_hit(const UniformHypergraph& h, WeightGuesser& guesser, const HypercliqueDetector& detect) {
  UniformHypergraph inst;
  std::vector<Weight> guess;
  Weight total = 0;
  while (guesser.next(inst, guess, total)) {
    auto w = detect(inst, h.part_count());
    if (!w) continue;
    Witness out{WitnessKind::Hyperclique, w->items, total};
    std::sort(out.items.begin(), out.items.end());
    if (clique_w1(h, out.items) != total) throw Error("guessed hyperclique weight differs from its guess total");
    return SolveResult::of(std::move(out));
  }
  return SolveResult::none();
}

}  // namespace

SolveResult max_hyperclique_via_guessing(const UniformHypergraph& h, const HypercliqueDetector& detect,
                                         std::int64_t cap) {
  WeightGuesser g(h, WeightGuesser::Mode::Max, 0, cap);
  return first_guess_hit(h, g, detect);
}

SolveResult exact_hyperclique_via_guessing(const UniformHypergraph& h, Weight target,
                                           const HypercliqueDetector& detect, std::int64_t cap) {
  WeightGuesser g(h, WeightGuesser::Mode::Exact, target, cap);
  return first_guess_hit(h, g, detect);
}

SatCycleReduction maxksat_to_cycle(const CspInstance& f, int l) {
  SatCycleReduction out;
  out.hyperclique = csp_to_hyperclique(f, l);
  const UniformHypergraph& h = out.hyperclique.instance;
  std::vector<Hyperedge> negated;
  negated.reserve(h.edge_count());
  for (const auto& e : h.edges()) negated.push_back({e.nodes, -e.w1, 0});
  UniformHypergraph neg(h.node_count(), h.arity(), h.parts(), h.part_count(), std::move(negated), h.weight_bound());
  out.gamma = gamma(l, out.hyperclique.arity);
  auto stage1 = hyperclique_to_hypercycle(neg);
  auto stage2 = hypercycle_to_digraph(stage1.instance);
  out.cycle.instance = std::move(stage2.instance);
  out.cycle.weight_map = {-1, 0};
  out.cycle.pullback = [p1 = stage1.pullback, p2 = stage2.pullback, p3 = out.hyperclique.pullback](const Witness& w) {
    return p3(p1(p2(w)));
  };
  return out;
}

SolveResult max_sat_via_cycle(const CspInstance& f, int l, const LayeredSolver& solver) {
  SatCycleReduction red = maxksat_to_cycle(f, l);
  SolveResult r = solver(red.cycle.instance);
  if (!r.found || !r.witness) return SolveResult::none();
  Witness w = red.cycle.pullback(*r.witness);
  if (red.cycle.weight_map.to_target(w.claimed_weight) != r.weight)
    throw Error("cycle weight disagrees with the decoded assignment");
  return SolveResult::of(std::move(w));
}

}  // namespace fgr
