#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "feaslab/evaluate.hpp"
#include "feaslab/formula.hpp"
#include "feaslab/mat2.hpp"
#include "feaslab/sequent.hpp"
#include "feaslab/signature.hpp"

namespace feaslab {

/// Axiom schema `hypotheses ⊢ conclusion`; the metavariables stand for
/// arbitrary terms of the signature.
struct AxiomSchema {
  std::string name;
  std::vector<std::string> metavars;
  std::vector<Formula> hypotheses;
  Formula conclusion;
};

using Instantiation = std::vector<std::pair<std::string, Term>>;

enum class TheoryKind { Arithmetic, Group, Rational };

struct Theory {
  std::string name;  // CLI selector
  TheoryKind kind = TheoryKind::Arithmetic;
  Signature signature;
  std::vector<AxiomSchema> axioms;
  Presentation presentation = Presentation::Free;
  std::vector<std::string> generators;
  std::vector<Term> relators;
  bool restricted_conjugation = false;
  bool quantifiers_allowed = true;

  [[nodiscard]] const AxiomSchema* axiom(std::string_view axiom_name) const;
  /// Ground-equality oracle.
  [[nodiscard]] Verdict equal(const Term& s, const Term& t) const;
  /// Message when some closed subterm denotes an undefined operation.
  [[nodiscard]] std::optional<std::string> undefined_operation(const Formula& f) const;
};

Theory arith_feasibility();
/// F-axioms for words over the generators; `presentation` fixes the oracle.
/// Throws std::invalid_argument on an empty generator list or a BS(1,2)
/// presentation whose generators are not {x, y}.
Theory group_feasibility(const std::vector<std::string>& generators, Presentation presentation);
/// Adds the T-axioms for the relators and the F/T bridges to a group theory.
Theory triviality_theory(const std::vector<Term>& relators, Theory base, bool restricted_conjugation = false);
Theory rational_feasibility();

/// `arith`, `group:free:<g1,g2,...>`, `group:bs12` or `rat`.
Theory theory_from_selector(std::string_view selector);

/// The relator y²xy⁻¹x⁻¹ of ⟨x, y | y² = xyx⁻¹⟩.
Term bs12_relator();

/// Instance sequent of a schema; throws std::invalid_argument when the
/// instantiation does not bind exactly the schema's metavariables.
Sequent instantiate(const AxiomSchema& schema, const Instantiation& inst);

Formula F(const Term& t);
Formula T(const Term& t);

/// Literal constant of the rational signature.
Term rational_literal(const BigRational& q);
/// Literal constant of the group signature's exponent language.
Term natural_literal(const BigInt& n);

/// F(a) ∧ (F(b) ∧ (F(c) ∧ F(d))) over the entries of a matrix.
Formula matrix_phi(const Mat2& m);
Formula matrix_phi(const Term& a, const Term& b, const Term& c, const Term& d);

}  // namespace feaslab
