#include "feaslab/proof.hpp"

#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "feaslab/syntax.hpp"

namespace feaslab {

namespace {

struct RuleInfo {
  RuleTag tag;
  const char* name;
  int arity;
};

constexpr std::array<RuleInfo, 20> kRules{{
    {RuleTag::TheoryAxiom, "TheoryAxiom", -1},
    {RuleTag::LogicalAxiom, "LogicalAxiom", 0},
    {RuleTag::EqOracle, "EqOracle", 0},
    {RuleTag::Cut, "Cut", 2},
    {RuleTag::ContractLeft, "ContractLeft", 1},
    {RuleTag::ContractRight, "ContractRight", 1},
    {RuleTag::WeakenLeft, "WeakenLeft", 1},
    {RuleTag::WeakenRight, "WeakenRight", 1},
    {RuleTag::AndLeft, "AndLeft", 1},
    {RuleTag::AndRight, "AndRight", 2},
    {RuleTag::OrLeft, "OrLeft", 2},
    {RuleTag::OrRight, "OrRight", 1},
    {RuleTag::ImpliesLeft, "ImpliesLeft", 2},
    {RuleTag::ImpliesRight, "ImpliesRight", 1},
    {RuleTag::NotLeft, "NotLeft", 1},
    {RuleTag::NotRight, "NotRight", 1},
    {RuleTag::ForallLeft, "ForallLeft", 1},
    {RuleTag::ForallRight, "ForallRight", 1},
    {RuleTag::ExistsLeft, "ExistsLeft", 1},
    {RuleTag::ExistsRight, "ExistsRight", 1},
}};

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

std::vector<Formula> without(const std::vector<Formula>& side, const Formula& f, const char* rule) {
  auto r = remove_one(side, f);
  if (!r) fail(std::string(rule) + ": premise lacks " + to_string(f));
  return *r;
}

void expect_kind(const Formula& f, FormulaKind k, const char* rule) {
  if (f.is_null() || f.kind() != k) fail(std::string(rule) + ": wrong principal formula shape");
}

Rule rule_of(RuleTag tag, const Formula& f) {
  Rule r;
  r.tag = tag;
  r.formula = f;
  return r;
}

std::vector<Formula> prepend(const Formula& f, std::vector<Formula> v) {
  v.insert(v.begin(), f);
  return v;
}

std::vector<Formula> append(std::vector<Formula> v, const Formula& f) {
  v.push_back(f);
  return v;
}

}  // namespace

const char* rule_name(RuleTag tag) { return kRules[static_cast<std::size_t>(tag)].name; }

std::optional<RuleTag> rule_from_name(std::string_view name) {
  for (const auto& r : kRules) {
    if (name == r.name) return r.tag;
  }
  return std::nullopt;
}

int rule_arity(RuleTag tag) { return kRules[static_cast<std::size_t>(tag)].arity; }

Proof make_node(Sequent conclusion, Rule rule, std::vector<Proof> premises) {
  return std::make_shared<const ProofNode>(ProofNode{std::move(conclusion), std::move(rule), std::move(premises)});
}

SizeStats size(const Proof& root) {
  std::unordered_map<const ProofNode*, SizeStats> memo;
  std::unordered_map<const FormulaNode*, std::pair<std::size_t, BigInt>> fmemo;
  auto formula_info = [&](const Formula& f) -> const std::pair<std::size_t, BigInt>& {
    auto it = fmemo.find(f.node());
    if (it == fmemo.end()) it = fmemo.emplace(f.node(), std::make_pair(dag_node_count(f), tree_size(f))).first;
    return it->second;
  };
  auto go = [&](auto&& self, const Proof& p) -> const SizeStats& {
    if (auto it = memo.find(p.get()); it != memo.end()) return it->second;
    SizeStats s;
    s.lines = 1;
    switch (p->rule.tag) {
      case RuleTag::Cut: s.cut_count = 1; break;
      case RuleTag::ContractLeft:
      case RuleTag::ContractRight: s.contraction_count = 1; break;
      case RuleTag::ForallLeft:
      case RuleTag::ForallRight:
      case RuleTag::ExistsLeft:
      case RuleTag::ExistsRight: s.quantifier_rule_count = 1; break;
      case RuleTag::EqOracle: s.eq_oracle_count = 1; break;
      case RuleTag::TheoryAxiom: s.axiom_uses[p->rule.axiom] = 1; break;
      default: break;
    }
    for (const auto* side : {&p->conclusion.antecedent, &p->conclusion.succedent}) {
      for (const auto& f : *side) {
        const auto& [dag, tree] = formula_info(f);
        s.max_formula_dag_nodes = std::max(s.max_formula_dag_nodes, dag);
        s.expanded_symbol_size += tree;
      }
    }
    for (const auto& q : p->premises) {
      const SizeStats& t = self(self, q);
      s.lines += t.lines;
      s.cut_count += t.cut_count;
      s.contraction_count += t.contraction_count;
      s.quantifier_rule_count += t.quantifier_rule_count;
      s.eq_oracle_count += t.eq_oracle_count;
      s.max_formula_dag_nodes = std::max(s.max_formula_dag_nodes, t.max_formula_dag_nodes);
      s.expanded_symbol_size += t.expanded_symbol_size;
      s.height = std::max(s.height, t.height + 1);
      for (const auto& [k, v] : t.axiom_uses) s.axiom_uses[k] += v;
    }
    return memo.emplace(p.get(), std::move(s)).first->second;
  };
  return go(go, root);
}

std::size_t distinct_nodes(const Proof& root) {
  std::unordered_set<const ProofNode*> seen;
  std::vector<const ProofNode*> stack{root.get()};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& q : n->premises) stack.push_back(q.get());
  }
  return seen.size();
}

Proof logical_axiom(const Formula& a) {
  return make_node(Sequent{{a}, {a}}, rule_of(RuleTag::LogicalAxiom, a));
}

Proof eq_oracle(const Term& s, const Term& t) {
  const Formula eq = Formula::equals(s, t);
  return make_node(Sequent{{}, {eq}}, rule_of(RuleTag::EqOracle, eq));
}

Proof theory_axiom(const Theory& th, std::string_view name, const Instantiation& inst, std::vector<Proof> premises,
                   std::vector<int> discharge) {
  const AxiomSchema* schema = th.axiom(name);
  if (schema == nullptr) fail("unknown axiom '" + std::string(name) + "'");
  if (premises.size() != discharge.size()) fail("theory axiom: one discharge index per premise");
  const Sequent inst_seq = instantiate(*schema, inst);
  std::vector<bool> used(inst_seq.antecedent.size(), false);
  Sequent out;
  std::vector<Formula> succ;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    const int d = discharge[i];
    if (d < 0 || static_cast<std::size_t>(d) >= used.size() || used[static_cast<std::size_t>(d)]) {
      fail("theory axiom: bad discharge index");
    }
    used[static_cast<std::size_t>(d)] = true;
    const Sequent& ps = premises[i]->conclusion;
    out.antecedent.insert(out.antecedent.end(), ps.antecedent.begin(), ps.antecedent.end());
    auto rest = without(ps.succedent, inst_seq.antecedent[static_cast<std::size_t>(d)], "TheoryAxiom");
    succ.insert(succ.end(), rest.begin(), rest.end());
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) out.antecedent.push_back(inst_seq.antecedent[i]);
  }
  out.succedent = std::move(succ);
  out.succedent.push_back(inst_seq.succedent.front());
  Rule r;
  r.tag = RuleTag::TheoryAxiom;
  r.axiom = std::string(name);
  r.instantiation = inst;
  r.discharge = std::move(discharge);
  return make_node(std::move(out), std::move(r), std::move(premises));
}

Proof cut(const Proof& left, const Proof& right, const Formula& a) {
  Sequent s;
  s.antecedent = concat(left->conclusion.antecedent, without(right->conclusion.antecedent, a, "Cut"));
  s.succedent = concat(without(left->conclusion.succedent, a, "Cut"), right->conclusion.succedent);
  return make_node(std::move(s), rule_of(RuleTag::Cut, a), {left, right});
}

Proof contract_left(const Proof& p, const Formula& a) {
  auto rest = without(without(p->conclusion.antecedent, a, "ContractLeft"), a, "ContractLeft");
  return make_node(Sequent{prepend(a, rest), p->conclusion.succedent}, rule_of(RuleTag::ContractLeft, a), {p});
}

Proof contract_right(const Proof& p, const Formula& a) {
  auto rest = without(without(p->conclusion.succedent, a, "ContractRight"), a, "ContractRight");
  return make_node(Sequent{p->conclusion.antecedent, append(rest, a)}, rule_of(RuleTag::ContractRight, a), {p});
}

Proof weaken_left(const Proof& p, const Formula& a) {
  return make_node(Sequent{prepend(a, p->conclusion.antecedent), p->conclusion.succedent},
                   rule_of(RuleTag::WeakenLeft, a), {p});
}

Proof weaken_right(const Proof& p, const Formula& a) {
  return make_node(Sequent{p->conclusion.antecedent, append(p->conclusion.succedent, a)},
                   rule_of(RuleTag::WeakenRight, a), {p});
}

Proof and_left(const Proof& p, const Formula& ab) {
  expect_kind(ab, FormulaKind::And, "AndLeft");
  auto rest = without(without(p->conclusion.antecedent, ab.left(), "AndLeft"), ab.right(), "AndLeft");
  return make_node(Sequent{prepend(ab, rest), p->conclusion.succedent}, rule_of(RuleTag::AndLeft, ab), {p});
}

Proof and_right(const Proof& left, const Proof& right, const Formula& ab) {
  expect_kind(ab, FormulaKind::And, "AndRight");
  Sequent s;
  s.antecedent = concat(left->conclusion.antecedent, right->conclusion.antecedent);
  s.succedent = concat(without(left->conclusion.succedent, ab.left(), "AndRight"),
                       without(right->conclusion.succedent, ab.right(), "AndRight"));
  s.succedent.push_back(ab);
  return make_node(std::move(s), rule_of(RuleTag::AndRight, ab), {left, right});
}

Proof or_left(const Proof& left, const Proof& right, const Formula& ab) {
  expect_kind(ab, FormulaKind::Or, "OrLeft");
  Sequent s;
  s.antecedent = prepend(ab, concat(without(left->conclusion.antecedent, ab.left(), "OrLeft"),
                                    without(right->conclusion.antecedent, ab.right(), "OrLeft")));
  s.succedent = concat(left->conclusion.succedent, right->conclusion.succedent);
  return make_node(std::move(s), rule_of(RuleTag::OrLeft, ab), {left, right});
}

Proof or_right(const Proof& p, const Formula& ab) {
  expect_kind(ab, FormulaKind::Or, "OrRight");
  auto rest = without(without(p->conclusion.succedent, ab.left(), "OrRight"), ab.right(), "OrRight");
  return make_node(Sequent{p->conclusion.antecedent, append(rest, ab)}, rule_of(RuleTag::OrRight, ab), {p});
}

Proof implies_left(const Proof& left, const Proof& right, const Formula& ab) {
  expect_kind(ab, FormulaKind::Implies, "ImpliesLeft");
  Sequent s;
  s.antecedent = prepend(ab, concat(left->conclusion.antecedent,
                                    without(right->conclusion.antecedent, ab.right(), "ImpliesLeft")));
  s.succedent = concat(without(left->conclusion.succedent, ab.left(), "ImpliesLeft"), right->conclusion.succedent);
  return make_node(std::move(s), rule_of(RuleTag::ImpliesLeft, ab), {left, right});
}

Proof implies_right(const Proof& p, const Formula& ab) {
  expect_kind(ab, FormulaKind::Implies, "ImpliesRight");
  auto ante = without(p->conclusion.antecedent, ab.left(), "ImpliesRight");
  auto succ = without(p->conclusion.succedent, ab.right(), "ImpliesRight");
  return make_node(Sequent{ante, append(succ, ab)}, rule_of(RuleTag::ImpliesRight, ab), {p});
}

Proof not_left(const Proof& p, const Formula& na) {
  expect_kind(na, FormulaKind::Not, "NotLeft");
  auto succ = without(p->conclusion.succedent, na.left(), "NotLeft");
  return make_node(Sequent{prepend(na, p->conclusion.antecedent), succ}, rule_of(RuleTag::NotLeft, na), {p});
}

Proof not_right(const Proof& p, const Formula& na) {
  expect_kind(na, FormulaKind::Not, "NotRight");
  auto ante = without(p->conclusion.antecedent, na.left(), "NotRight");
  return make_node(Sequent{ante, append(p->conclusion.succedent, na)}, rule_of(RuleTag::NotRight, na), {p});
}

Proof rebuild_node(const Rule& r, std::vector<Proof> ps, const Theory& th) {
  const int arity = rule_arity(r.tag);
  if (arity >= 0 && static_cast<int>(ps.size()) != arity) fail(std::string(rule_name(r.tag)) + ": wrong premise count");
  if (r.tag != RuleTag::TheoryAxiom && r.formula.is_null()) fail(std::string(rule_name(r.tag)) + ": missing formula");
  switch (r.tag) {
    case RuleTag::TheoryAxiom: return theory_axiom(th, r.axiom, r.instantiation, std::move(ps), r.discharge);
    case RuleTag::LogicalAxiom: return logical_axiom(r.formula);
    case RuleTag::EqOracle:
      if (!r.formula.is_equality()) fail("EqOracle needs an equation");
      return eq_oracle(r.formula.args()[0], r.formula.args()[1]);
    case RuleTag::Cut: return cut(ps[0], ps[1], r.formula);
    case RuleTag::ContractLeft: return contract_left(ps[0], r.formula);
    case RuleTag::ContractRight: return contract_right(ps[0], r.formula);
    case RuleTag::WeakenLeft: return weaken_left(ps[0], r.formula);
    case RuleTag::WeakenRight: return weaken_right(ps[0], r.formula);
    case RuleTag::AndLeft: return and_left(ps[0], r.formula);
    case RuleTag::AndRight: return and_right(ps[0], ps[1], r.formula);
    case RuleTag::OrLeft: return or_left(ps[0], ps[1], r.formula);
    case RuleTag::OrRight: return or_right(ps[0], r.formula);
    case RuleTag::ImpliesLeft: return implies_left(ps[0], ps[1], r.formula);
    case RuleTag::ImpliesRight: return implies_right(ps[0], r.formula);
    case RuleTag::NotLeft: return not_left(ps[0], r.formula);
    case RuleTag::NotRight: return not_right(ps[0], r.formula);
    case RuleTag::ForallLeft:
      if (r.term.is_null()) fail("ForallLeft: missing term");
      return forall_left(ps[0], r.formula, r.term);
    case RuleTag::ForallRight: return forall_right(ps[0], r.formula, r.var);
    case RuleTag::ExistsLeft: return exists_left(ps[0], r.formula, r.var);
    case RuleTag::ExistsRight:
      if (r.term.is_null()) fail("ExistsRight: missing term");
      return exists_right(ps[0], r.formula, r.term);
  }
  fail("unknown rule");
}

Formula instantiate_body(const Formula& q, const Term& t) { return substitute(q.body(), q.bound_var(), t); }

Proof forall_left(const Proof& p, const Formula& fa, const Term& t) {
  expect_kind(fa, FormulaKind::Forall, "ForallLeft");
  auto rest = without(p->conclusion.antecedent, instantiate_body(fa, t), "ForallLeft");
  Rule r = rule_of(RuleTag::ForallLeft, fa);
  r.term = t;
  return make_node(Sequent{prepend(fa, rest), p->conclusion.succedent}, std::move(r), {p});
}

Proof forall_right(const Proof& p, const Formula& fa, std::string_view eigen) {
  expect_kind(fa, FormulaKind::Forall, "ForallRight");
  auto rest = without(p->conclusion.succedent, instantiate_body(fa, Term::variable(eigen)), "ForallRight");
  Rule r = rule_of(RuleTag::ForallRight, fa);
  r.var = std::string(eigen);
  return make_node(Sequent{p->conclusion.antecedent, append(rest, fa)}, std::move(r), {p});
}

Proof exists_left(const Proof& p, const Formula& ex, std::string_view eigen) {
  expect_kind(ex, FormulaKind::Exists, "ExistsLeft");
  auto rest = without(p->conclusion.antecedent, instantiate_body(ex, Term::variable(eigen)), "ExistsLeft");
  Rule r = rule_of(RuleTag::ExistsLeft, ex);
  r.var = std::string(eigen);
  return make_node(Sequent{prepend(ex, rest), p->conclusion.succedent}, std::move(r), {p});
}

Proof exists_right(const Proof& p, const Formula& ex, const Term& t) {
  expect_kind(ex, FormulaKind::Exists, "ExistsRight");
  auto rest = without(p->conclusion.succedent, instantiate_body(ex, t), "ExistsRight");
  Rule r = rule_of(RuleTag::ExistsRight, ex);
  r.term = t;
  return make_node(Sequent{p->conclusion.antecedent, append(rest, ex)}, std::move(r), {p});
}

Proof with_conclusion_order(const Proof& p, const Sequent& order) {
  if (!same_sequent(p->conclusion, order)) fail("with_conclusion_order: not a permutation of the conclusion");
  return make_node(order, p->rule, p->premises);
}

}  // namespace feaslab
