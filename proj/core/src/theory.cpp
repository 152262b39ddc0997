#include "feaslab/theory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "feaslab/syntax.hpp"

namespace feaslab {

Formula F(const Term& t) { return Formula::atom("F", {t}); }
Formula T(const Term& t) { return Formula::atom("T", {t}); }

Term rational_literal(const BigRational& q) { return Term::constant(q.str()); }
Term natural_literal(const BigInt& n) { return Term::constant(n.str()); }

namespace {

Term var(const char* name) { return Term::variable(name); }
Term app(const char* f, std::vector<Term> args) { return Term::apply(f, std::move(args)); }

AxiomSchema schema(std::string name, std::vector<std::string> metavars, std::vector<Formula> hyps, Formula concl) {
  return AxiomSchema{std::move(name), std::move(metavars), std::move(hyps), concl};
}

AxiomSchema equality_schema(const std::string& pred) {
  const Term x = var("x");
  const Term y = var("y");
  const Formula px = Formula::atom(pred, {x});
  const Formula py = Formula::atom(pred, {y});
  return schema(pred + ":equality", {"x", "y"}, {Formula::equals(x, y), px}, py);
}

AxiomSchema binary_closure(const std::string& name, const std::string& pred, const char* op) {
  const Term x = var("x");
  const Term y = var("y");
  return schema(name, {"x", "y"}, {Formula::atom(pred, {x}), Formula::atom(pred, {y})},
                Formula::atom(pred, {app(op, {x, y})}));
}

AxiomSchema unary_closure(const std::string& name, const std::string& pred, const char* op) {
  const Term x = var("x");
  return schema(name, {"x"}, {Formula::atom(pred, {x})}, Formula::atom(pred, {app(op, {x})}));
}

}  // namespace

const AxiomSchema* Theory::axiom(std::string_view axiom_name) const {
  for (const auto& a : axioms) {
    if (a.name == axiom_name) return &a;
  }
  return nullptr;
}

Verdict Theory::equal(const Term& s, const Term& t) const {
  switch (kind) {
    case TheoryKind::Arithmetic: return arith_equal(s, t);
    case TheoryKind::Group: return group_equal(s, t, presentation);
    case TheoryKind::Rational: return rational_equal(s, t);
  }
  return Verdict::Undecided;
}

std::optional<std::string> Theory::undefined_operation(const Formula& f) const {
  if (kind != TheoryKind::Rational) return std::nullopt;
  std::optional<std::string> found;
  auto visit = [&](auto&& self, const Term& t) -> void {
    if (found) return;
    if (t.is_closed()) {
      try {
        (void)eval_rational(t);
      } catch (const UndefinedOperation& e) {
        found = "'" + to_string(t) + "': " + e.what();
      }
      return;
    }
    for (const auto& a : t.args()) self(self, a);
  };
  auto walk = [&](auto&& self, const Formula& g) -> void {
    if (g.is_atom()) {
      for (const auto& a : g.args()) visit(visit, a);
      return;
    }
    if (g.kind() == FormulaKind::Forall || g.kind() == FormulaKind::Exists || g.kind() == FormulaKind::Not) {
      self(self, g.left());
      return;
    }
    self(self, g.left());
    self(self, g.right());
  };
  walk(walk, f);
  return found;
}

Theory arith_feasibility() {
  Theory th;
  th.name = "arith";
  th.kind = TheoryKind::Arithmetic;
  th.signature = arithmetic_signature();
  const Term x = var("x");
  th.axioms = {
      schema("F:zero", {}, {}, F(Term::constant("0"))),
      equality_schema("F"),
      schema("F:successor", {"x"}, {F(x)}, F(app("s", {x}))),
      binary_closure("F:plus", "F", "+"),
      binary_closure("F:times", "F", "*"),
  };
  return th;
}

Theory group_feasibility(const std::vector<std::string>& generators, Presentation presentation) {
  if (generators.empty()) throw std::invalid_argument("group theory needs at least one generator");
  if (presentation == Presentation::BS12) {
    std::vector<std::string> sorted = generators;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<std::string>{"x", "y"}) {
      throw std::invalid_argument("the bs12 presentation uses exactly the generators x and y");
    }
  }
  Theory th;
  th.name = presentation == Presentation::BS12 ? "group:bs12" : "group:free:";
  if (presentation == Presentation::Free) {
    for (std::size_t i = 0; i < generators.size(); ++i) th.name += (i ? "," : "") + generators[i];
  }
  th.kind = TheoryKind::Group;
  th.signature = group_signature(generators);
  th.presentation = presentation;
  th.generators = generators;
  th.axioms.push_back(schema("F:identity", {}, {}, F(Term::constant("e"))));
  for (const auto& g : generators) th.axioms.push_back(schema("F:gen:" + g, {}, {}, F(Term::constant(g))));
  th.axioms.push_back(equality_schema("F"));
  th.axioms.push_back(binary_closure("F:composition", "F", "*"));
  th.axioms.push_back(unary_closure("F:inverse", "F", "inv"));
  return th;
}

Theory triviality_theory(const std::vector<Term>& relators, Theory base, bool restricted_conjugation) {
  if (base.kind != TheoryKind::Group) throw std::invalid_argument("triviality axioms need a group theory");
  Theory th = std::move(base);
  th.relators = relators;
  th.restricted_conjugation = restricted_conjugation;
  const Term u = var("u");
  const Term v = var("v");
  const Term w = var("w");
  th.axioms.push_back(schema("T:identity", {}, {}, T(Term::constant("e"))));
  for (std::size_t i = 0; i < relators.size(); ++i) {
    th.axioms.push_back(schema("T:relator:" + std::to_string(i + 1), {}, {}, T(relators[i])));
  }
  th.axioms.push_back(equality_schema("T"));
  th.axioms.push_back(binary_closure("T:composition", "T", "*"));
  th.axioms.push_back(unary_closure("T:inverse", "T", "inv"));
  const Term conj = app("*", {v, app("*", {w, app("inv", {v})})});
  if (restricted_conjugation) {
    th.axioms.push_back(schema("T:conjugation", {"v", "w"}, {F(v), T(w)}, T(conj)));
  } else {
    th.axioms.push_back(schema("T:conjugation", {"v", "w"}, {T(w)}, T(conj)));
  }
  th.axioms.push_back(schema("FT:right", {"w", "u"}, {F(w), T(u)}, F(app("*", {w, u}))));
  th.axioms.push_back(schema("FT:left", {"w", "u"}, {F(w), T(u)}, F(app("*", {u, w}))));
  return th;
}

Theory rational_feasibility() {
  Theory th;
  th.name = "rat";
  th.kind = TheoryKind::Rational;
  th.signature = rational_signature();
  th.axioms = {
      schema("F:zero", {}, {}, F(Term::constant("0"))),
      schema("F:one", {}, {}, F(Term::constant("1"))),
      equality_schema("F"),
      binary_closure("F:plus", "F", "+"),
      binary_closure("F:times", "F", "*"),
      unary_closure("F:neg", "F", "neg"),
      unary_closure("F:recip", "F", "recip"),
  };
  return th;
}

Term bs12_relator() {
  const Term x = Term::constant("x");
  const Term y = Term::constant("y");
  return app("*", {y, app("*", {y, app("*", {x, app("*", {app("inv", {y}), app("inv", {x})})})})});
}

Theory theory_from_selector(std::string_view selector) {
  if (selector == "arith") return arith_feasibility();
  if (selector == "rat") return rational_feasibility();
  if (selector == "group:bs12") {
    return triviality_theory({bs12_relator()}, group_feasibility({"x", "y"}, Presentation::BS12));
  }
  constexpr std::string_view free_prefix = "group:free:";
  if (selector.substr(0, free_prefix.size()) == free_prefix) {
    std::vector<std::string> gens;
    std::stringstream ss{std::string(selector.substr(free_prefix.size()))};
    std::string g;
    while (std::getline(ss, g, ',')) {
      if (g.empty()) throw std::invalid_argument("empty generator name in '" + std::string(selector) + "'");
      gens.push_back(g);
    }
    return triviality_theory({}, group_feasibility(gens, Presentation::Free));
  }
  throw std::invalid_argument("unknown theory selector '" + std::string(selector) + "'");
}

Sequent instantiate(const AxiomSchema& schema, const Instantiation& inst) {
  if (inst.size() != schema.metavars.size()) {
    throw std::invalid_argument(schema.name + ": expected " + std::to_string(schema.metavars.size()) +
                                " instantiated metavariables, got " + std::to_string(inst.size()));
  }
  for (const auto& mv : schema.metavars) {
    const auto n = std::count_if(inst.begin(), inst.end(), [&](const auto& p) { return p.first == mv; });
    if (n != 1) throw std::invalid_argument(schema.name + ": metavariable '" + mv + "' must be bound once");
  }
  // Two passes through placeholder names make the substitution simultaneous.
  auto apply = [&](Formula f) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      f = substitute(f, inst[i].first, Term::variable("?" + std::to_string(i)));
    }
    for (std::size_t i = 0; i < inst.size(); ++i) f = substitute(f, "?" + std::to_string(i), inst[i].second);
    return f;
  };
  Sequent s;
  for (const auto& h : schema.hypotheses) s.antecedent.push_back(apply(h));
  s.succedent.push_back(apply(schema.conclusion));
  return s;
}

Formula matrix_phi(const Term& a, const Term& b, const Term& c, const Term& d) {
  return Formula::conjunction(F(a), Formula::conjunction(F(b), Formula::conjunction(F(c), F(d))));
}

Formula matrix_phi(const Mat2& m) {
  return matrix_phi(rational_literal(m.a), rational_literal(m.b), rational_literal(m.c), rational_literal(m.d));
}

}  // namespace feaslab
