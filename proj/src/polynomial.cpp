#include "fgr/polynomial.hpp"

#include <algorithm>

#include "fgr/errors.hpp"

namespace fgr {

MultilinearPolynomial::MultilinearPolynomial(int variable_count, int degree_bound,
                                             std::vector<std::pair<Monomial, Weight>> terms)
    : variable_count_(variable_count), degree_bound_(degree_bound) {
  for (auto& [mono, coef] : terms) {
    std::sort(mono.begin(), mono.end());
    Weight& slot = terms_[mono];
    slot = checked_add(slot, coef);
  }
  std::erase_if(terms_, [](const auto& t) { return t.second == 0; });
  if (auto v = validate_polynomial(*this)) throw InvalidInstance(*v);
}

MultilinearPolynomial MultilinearPolynomial::from_truth_table(int variable_count, std::span<const int> vars,
                                                              std::span<const Weight> table) {
  const int s = static_cast<int>(vars.size());
  if (table.size() != (std::size_t{1} << s)) throw PreconditionError("truth table size must be 2^support");
  std::vector<Weight> a(table.begin(), table.end());
  for (int j = 0; j < s; ++j)
    for (std::size_t mask = 0; mask < a.size(); ++mask)
      if (mask & (std::size_t{1} << j)) a[mask] = checked_sub(a[mask], a[mask ^ (std::size_t{1} << j)]);
  std::vector<std::pair<Monomial, Weight>> terms;
  for (std::size_t mask = 0; mask < a.size(); ++mask) {
    if (a[mask] == 0) continue;
    Monomial m;
    for (int j = 0; j < s; ++j)
      if (mask & (std::size_t{1} << j)) m.push_back(vars[j]);
    terms.emplace_back(std::move(m), a[mask]);
  }
  return MultilinearPolynomial(variable_count, s, std::move(terms));
}

int MultilinearPolynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

std::vector<int> MultilinearPolynomial::support() const {
  std::vector<int> vars;
  for (const auto& [m, c] : terms_) vars.insert(vars.end(), m.begin(), m.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Weight MultilinearPolynomial::evaluate(std::span<const std::uint8_t> assignment) const {
  if (static_cast<int>(assignment.size()) < variable_count_) throw PreconditionError("assignment too short");
  Weight total = 0;
  for (const auto& [m, c] : terms_) {
    bool on = std::all_of(m.begin(), m.end(), [&](int v) { return assignment[v] != 0; });
    if (on) total = checked_add(total, c);
  }
  return total;
}

std::optional<std::string> validate_polynomial(const MultilinearPolynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c == 0) return "zero coefficient stored";
    if (static_cast<int>(m.size()) > p.degree_bound()) return "term exceeds degree bound";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < 0 || m[i] >= p.variable_count()) return "variable out of range";
      if (i > 0 && m[i] <= m[i - 1]) return "monomial not strictly increasing";
    }
  }
  return std::nullopt;
}

CspInstance::CspInstance(int variable_count, std::vector<MultilinearPolynomial> clauses,
                         std::optional<CspTargets> targets)
    : variable_count_(variable_count), clauses_(std::move(clauses)), targets_(targets) {
  if (auto v = validate_csp(*this)) throw InvalidInstance(*v);
}

int CspInstance::degree() const {
  int d = 0;
  for (const auto& c : clauses_) d = std::max(d, c.degree_bound());
  return d;
}

Weight CspInstance::evaluate(std::span<const std::uint8_t> assignment) const {
  Weight total = 0;
  for (const auto& c : clauses_) total = checked_add(total, c.evaluate(assignment));
  return total;
}

std::optional<std::string> validate_csp(const CspInstance& f) {
  if (f.variable_count() < 0) return "negative variable count";
  for (std::size_t i = 0; i < f.clauses().size(); ++i) {
    const auto& c = f.clauses()[i];
    if (c.variable_count() != f.variable_count()) return "clause " + std::to_string(i) + " has wrong variable count";
    if (auto v = validate_polynomial(c)) return "clause " + std::to_string(i) + ": " + *v;
    std::vector<int> sup = c.support();
    if (sup.size() > 20) return "clause " + std::to_string(i) + " support too large to check";
    Assignment a(f.variable_count(), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sup.size()); ++mask) {
      for (std::size_t j = 0; j < sup.size(); ++j) a[sup[j]] = (mask >> j) & 1;
      Weight val = c.evaluate(a);
      if (val != 0 && val != 1) return "clause " + std::to_string(i) + " is not 0/1-valued";
    }
  }
  if (f.targets() && (f.targets()->k_v < 0 || f.targets()->k_v > f.variable_count()))
    return "target K_v outside [0, n]";
  return std::nullopt;
}

}  // namespace fgr
