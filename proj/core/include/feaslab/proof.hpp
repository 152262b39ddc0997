#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "feaslab/formula.hpp"
#include "feaslab/sequent.hpp"
#include "feaslab/theory.hpp"

namespace feaslab {

enum class RuleTag : std::uint8_t {
  TheoryAxiom,
  LogicalAxiom,
  EqOracle,
  Cut,
  ContractLeft,
  ContractRight,
  WeakenLeft,
  WeakenRight,
  AndLeft,
  AndRight,
  OrLeft,
  OrRight,
  ImpliesLeft,
  ImpliesRight,
  NotLeft,
  NotRight,
  ForallLeft,
  ForallRight,
  ExistsLeft,
  ExistsRight,
};

const char* rule_name(RuleTag tag);
std::optional<RuleTag> rule_from_name(std::string_view name);
/// Number of premises the rule takes; TheoryAxiom is variadic and returns -1.
int rule_arity(RuleTag tag);

/// A rule application. Only the fields the tag needs are set:
///   formula - principal formula (logical rules), cut formula, contracted or
///             weakened formula, the A of A ⊢ A, the equation of EqOracle;
///   term    - witness of ForallLeft / ExistsRight;
///   var     - eigenvariable of ForallRight / ExistsLeft;
///   axiom, instantiation, discharge - TheoryAxiom.
///
/// A TheoryAxiom with premises uses the schema as a rule: premise i proves
/// hypothesis discharge[i] (in its succedent) and the conclusion keeps the
/// undischarged hypotheses plus the premises' remaining formulas.
struct Rule {
  RuleTag tag = RuleTag::LogicalAxiom;
  Formula formula;
  Term term;
  std::string var;
  std::string axiom;
  Instantiation instantiation;
  std::vector<int> discharge;
};

struct ProofNode;
/// Proofs are immutable trees. A subproof object may be referenced more than
/// once; it then counts once per reference, as in the written-out tree.
using Proof = std::shared_ptr<const ProofNode>;

struct ProofNode {
  Sequent conclusion;
  Rule rule;
  std::vector<Proof> premises;
};

Proof make_node(Sequent conclusion, Rule rule, std::vector<Proof> premises = {});

inline const Sequent& end_sequent(const Proof& p) { return p->conclusion; }

struct SizeStats {
  std::uint64_t lines = 0;
  std::uint64_t cut_count = 0;
  std::uint64_t contraction_count = 0;
  std::uint64_t quantifier_rule_count = 0;
  std::uint64_t eq_oracle_count = 0;
  std::size_t max_formula_dag_nodes = 0;
  BigInt expanded_symbol_size = 0;
  std::size_t height = 0;
  /// Uses of each theory axiom, with multiplicity.
  std::map<std::string, std::uint64_t> axiom_uses;
};

/// Counts only, no checking.
SizeStats size(const Proof& p);

// Builders. Each computes its conclusion in a fixed order: left rules put the
// principal formula first in the antecedent, right rules put it last in the
// succedent, and binary rules list the first premise's context first.

Proof logical_axiom(const Formula& a);
Proof eq_oracle(const Term& s, const Term& t);
/// Theory axiom leaf, or the rule form when premises are given.
Proof theory_axiom(const Theory& th, std::string_view name, const Instantiation& inst,
                   std::vector<Proof> premises = {}, std::vector<int> discharge = {});
Proof cut(const Proof& left, const Proof& right, const Formula& a);
Proof contract_left(const Proof& p, const Formula& a);
Proof contract_right(const Proof& p, const Formula& a);
Proof weaken_left(const Proof& p, const Formula& a);
Proof weaken_right(const Proof& p, const Formula& a);
Proof and_left(const Proof& p, const Formula& a_and_b);
Proof and_right(const Proof& left, const Proof& right, const Formula& a_and_b);
Proof or_left(const Proof& left, const Proof& right, const Formula& a_or_b);
Proof or_right(const Proof& p, const Formula& a_or_b);
Proof implies_left(const Proof& left, const Proof& right, const Formula& a_implies_b);
Proof implies_right(const Proof& p, const Formula& a_implies_b);
Proof not_left(const Proof& p, const Formula& not_a);
Proof not_right(const Proof& p, const Formula& not_a);
Proof forall_left(const Proof& p, const Formula& forall_a, const Term& t);
Proof forall_right(const Proof& p, const Formula& forall_a, std::string_view eigen);
Proof exists_left(const Proof& p, const Formula& exists_a, std::string_view eigen);
Proof exists_right(const Proof& p, const Formula& exists_a, const Term& t);

/// Re-applies `rule` to new premises, recomputing the conclusion. Throws
/// std::invalid_argument when the premises do not fit the rule.
Proof rebuild_node(const Rule& rule, std::vector<Proof> premises, const Theory& th);

/// Instance of a quantifier body: A[t/x] for ∀x A or ∃x A.
Formula instantiate_body(const Formula& quantified, const Term& t);

/// Same proof with the root conclusion's formulas listed in the given order
/// (must be a permutation of the original).
Proof with_conclusion_order(const Proof& p, const Sequent& order);

/// Number of distinct node objects (the in-memory size).
std::size_t distinct_nodes(const Proof& p);

}  // namespace feaslab
