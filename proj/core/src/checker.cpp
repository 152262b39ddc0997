#include "feaslab/checker.hpp"

#include <unordered_map>
#include <unordered_set>

#include "feaslab/syntax.hpp"

namespace feaslab {

const char* to_string(CheckErrorKind k) {
  switch (k) {
    case CheckErrorKind::RuleMismatch: return "rule-mismatch";
    case CheckErrorKind::Eigenvariable: return "eigenvariable-violation";
    case CheckErrorKind::OracleReject: return "oracle-reject";
    case CheckErrorKind::UnknownAxiom: return "unknown-axiom";
    case CheckErrorKind::UndefinedOperation: return "undefined-operation";
    case CheckErrorKind::IllFormed: return "ill-formed";
  }
  return "error";
}

namespace {

class Checker {
 public:
  explicit Checker(const Theory& th) : th_(th) {}

  void run(const Proof& p, const std::string& path) {
    if (!checked_.insert(p.get()).second) return;
    for (std::size_t i = 0; i < p->premises.size(); ++i) {
      if (!p->premises[i]) throw CheckError(CheckErrorKind::RuleMismatch, path, "null premise");
      run(p->premises[i], path + "." + std::to_string(i));
    }
    check_node(*p, path);
  }

 private:
  void well_formed(const Formula& f, const std::string& path) {
    if (f.is_null()) throw CheckError(CheckErrorKind::RuleMismatch, path, "missing formula");
    if (!formulas_ok_.insert(f.node()).second) return;
    if (auto err = check_well_formed(f, th_.signature)) {
      throw CheckError(CheckErrorKind::IllFormed, path, *err);
    }
  }

  void check_node(const ProofNode& n, const std::string& path) {
    const Rule& r = n.rule;
    for (const auto* side : {&n.conclusion.antecedent, &n.conclusion.succedent}) {
      for (const auto& f : *side) well_formed(f, path);
    }
    const int arity = rule_arity(r.tag);
    if (arity >= 0 && static_cast<int>(n.premises.size()) != arity) {
      throw CheckError(CheckErrorKind::RuleMismatch, path,
                       std::string(rule_name(r.tag)) + " takes " + std::to_string(arity) + " premises, got " +
                           std::to_string(n.premises.size()));
    }
    if (r.tag != RuleTag::TheoryAxiom && r.formula.is_null()) {
      throw CheckError(CheckErrorKind::RuleMismatch, path, std::string(rule_name(r.tag)) + " without formula");
    }
    if (r.tag == RuleTag::TheoryAxiom) check_theory_axiom(n, path);
    if (r.tag == RuleTag::EqOracle) check_oracle(n, path);
    if (r.tag == RuleTag::ForallLeft || r.tag == RuleTag::ExistsRight) {
      if (r.term.is_null()) throw CheckError(CheckErrorKind::RuleMismatch, path, "missing witness term");
      if (auto err = check_well_formed(r.term, th_.signature)) throw CheckError(CheckErrorKind::IllFormed, path, *err);
    }
    if (r.tag == RuleTag::ForallRight || r.tag == RuleTag::ExistsLeft) check_eigenvariable(n, path);

    Proof expected;
    try {
      expected = rebuild(n);
    } catch (const std::invalid_argument& e) {
      throw CheckError(CheckErrorKind::RuleMismatch, path, e.what());
    }
    if (!same_sequent(expected->conclusion, n.conclusion)) {
      throw CheckError(CheckErrorKind::RuleMismatch, path,
                       std::string(rule_name(r.tag)) + " yields '" + to_string(expected->conclusion) + "', not '" +
                           to_string(n.conclusion) + "'");
    }
  }

  Proof rebuild(const ProofNode& n) { return rebuild_node(n.rule, n.premises, th_); }

  void check_theory_axiom(const ProofNode& n, const std::string& path) {
    const Rule& r = n.rule;
    const AxiomSchema* schema = th_.axiom(r.axiom);
    if (schema == nullptr) {
      throw CheckError(CheckErrorKind::UnknownAxiom, path, "theory " + th_.name + " has no axiom '" + r.axiom + "'");
    }
    Sequent inst;
    try {
      inst = instantiate(*schema, r.instantiation);
    } catch (const std::invalid_argument& e) {
      throw CheckError(CheckErrorKind::RuleMismatch, path, e.what());
    }
    for (const auto& [v, t] : r.instantiation) {
      if (t.is_null()) throw CheckError(CheckErrorKind::RuleMismatch, path, "null instantiation for " + v);
      if (auto err = check_well_formed(t, th_.signature)) throw CheckError(CheckErrorKind::IllFormed, path, *err);
    }
    for (const auto* side : {&inst.antecedent, &inst.succedent}) {
      for (const auto& f : *side) {
        if (auto err = th_.undefined_operation(f)) {
          throw CheckError(CheckErrorKind::UndefinedOperation, path, r.axiom + " instance uses " + *err);
        }
      }
    }
  }

  void check_oracle(const ProofNode& n, const std::string& path) {
    const Formula& eq = n.rule.formula;
    if (!eq.is_equality()) throw CheckError(CheckErrorKind::RuleMismatch, path, "EqOracle needs an equation");
    const Term& s = eq.args()[0];
    const Term& t = eq.args()[1];
    const Verdict v = th_.equal(s, t);
    if (v != Verdict::Equal) {
      throw CheckError(CheckErrorKind::OracleReject, path,
                       to_string(s) + " = " + to_string(t) + " is " + feaslab::to_string(v));
    }
    if (auto err = th_.undefined_operation(eq)) throw CheckError(CheckErrorKind::UndefinedOperation, path, *err);
  }

  void check_eigenvariable(const ProofNode& n, const std::string& path) {
    const std::string& y = n.rule.var;
    if (y.empty() || th_.signature.is_constant(y) || th_.signature.is_literal(y) ||
        th_.signature.function_arity(y) || th_.signature.predicate_arity(y)) {
      throw CheckError(CheckErrorKind::Eigenvariable, path, "'" + y + "' is not a variable");
    }
    if (n.conclusion.has_free(y)) {
      throw CheckError(CheckErrorKind::Eigenvariable, path, "eigenvariable " + y + " is free in the conclusion");
    }
  }

  const Theory& th_;
  std::unordered_set<const ProofNode*> checked_;
  std::unordered_set<const FormulaNode*> formulas_ok_;
};

}  // namespace

SizeStats check(const Proof& p, const Theory& th) {
  if (!p) throw CheckError(CheckErrorKind::RuleMismatch, "root", "empty proof");
  Checker(th).run(p, "root");
  return size(p);
}

}  // namespace feaslab
