#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgr/checked.hpp"

namespace fgr {

using Monomial = std::vector<int>;  // sorted 0-based variable indices
using Assignment = std::vector<std::uint8_t>;

// Integer multilinear polynomial over boolean variables.
class MultilinearPolynomial {
 public:
  MultilinearPolynomial() = default;
  // Zero coefficients are dropped; repeated monomials are summed.
  MultilinearPolynomial(int variable_count, int degree_bound, std::vector<std::pair<Monomial, Weight>> terms);

  // Unique multilinear polynomial agreeing with `table` on {0,1}^vars.size();
  // table[mask] is the value where bit j of mask is variable vars[j].
  static MultilinearPolynomial from_truth_table(int variable_count, std::span<const int> vars,
                                                std::span<const Weight> table);

  int variable_count() const { return variable_count_; }
  int degree_bound() const { return degree_bound_; }
  const std::map<Monomial, Weight>& terms() const { return terms_; }
  int degree() const;
  // Variables with a nonzero term, sorted.
  std::vector<int> support() const;

  Weight evaluate(std::span<const std::uint8_t> assignment) const;

  friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

 private:
  int variable_count_ = 0;
  int degree_bound_ = 0;
  std::map<Monomial, Weight> terms_;
};

std::optional<std::string> validate_polynomial(const MultilinearPolynomial& p);

struct CspTargets {
  Weight k_v = 0;
  Weight k_p = 0;
  friend bool operator==(const CspTargets&, const CspTargets&) = default;
};

// Constraint satisfaction instance: every clause is a 0/1-valued polynomial.
class CspInstance {
 public:
  CspInstance() = default;
  CspInstance(int variable_count, std::vector<MultilinearPolynomial> clauses,
              std::optional<CspTargets> targets = std::nullopt);

  int variable_count() const { return variable_count_; }
  const std::vector<MultilinearPolynomial>& clauses() const { return clauses_; }
  const std::optional<CspTargets>& targets() const { return targets_; }
  // Largest clause degree bound.
  int degree() const;
  Weight evaluate(std::span<const std::uint8_t> assignment) const;

  friend bool operator==(const CspInstance&, const CspInstance&) = default;

 private:
  int variable_count_ = 0;
  std::vector<MultilinearPolynomial> clauses_;
  std::optional<CspTargets> targets_;
};

std::optional<std::string> validate_csp(const CspInstance& f);

// CNF with DIMACS literals (1-based, negative for negation).
struct Cnf {
  int variable_count = 0;
  std::vector<std::vector<int>> clauses;
  friend bool operator==(const Cnf&, const Cnf&) = default;
};

}  // namespace fgr
