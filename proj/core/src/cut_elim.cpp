#include "feaslab/cut_elim.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "feaslab/checker.hpp"
#include "feaslab/links.hpp"
#include "feaslab/syntax.hpp"

namespace feaslab {

namespace {

using Positions = std::vector<std::size_t>;  // sorted

bool is_eigen_rule(RuleTag t) { return t == RuleTag::ForallRight || t == RuleTag::ExistsLeft; }

bool contains(const Positions& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? UINT64_MAX : s;
}

void collect_names(const Term& t, std::unordered_set<std::string>& out) {
  for (const auto& v : t.free_variables()) out.insert(v);
}

class Substituter {
 public:
  Substituter(std::function<std::string()> fresh) : fresh_(std::move(fresh)) {}

  Proof run(const Proof& p, const std::string& var, const Term& t) {
    std::unordered_map<const ProofNode*, Proof> memo;
    return rec(p, var, t, memo);
  }

 private:
  Proof rec(const Proof& p, const std::string& var, const Term& t, std::unordered_map<const ProofNode*, Proof>& memo) {
    if (auto it = memo.find(p.get()); it != memo.end()) return it->second;
    const ProofNode& n = *p;
    Proof out;
    if (is_eigen_rule(n.rule.tag) && n.rule.var == var) {
      // var is local to this subproof and absent from its conclusion.
      out = p;
    } else {
      Rule r = n.rule;
      std::vector<Proof> premises = n.premises;
      if (is_eigen_rule(r.tag) && t.has_free(r.var)) {
        const std::string renamed = fresh_();
        premises[0] = run(premises[0], r.var, Term::variable(renamed));
        r.var = renamed;
      }
      for (auto& q : premises) q = rec(q, var, t, memo);
      if (!r.formula.is_null()) r.formula = substitute(r.formula, var, t);
      if (!r.term.is_null()) r.term = feaslab::substitute(r.term, var, t);
      for (auto& [mv, term] : r.instantiation) term = feaslab::substitute(term, var, t);
      Sequent s = n.conclusion;
      for (auto& f : s.antecedent) f = substitute(f, var, t);
      for (auto& f : s.succedent) f = substitute(f, var, t);
      out = make_node(std::move(s), std::move(r), std::move(premises));
    }
    memo.emplace(p.get(), out);
    return out;
  }

  std::function<std::string()> fresh_;
};

class Eliminator {
 public:
  Eliminator(const Theory& th, std::uint64_t budget) : th_(th), budget_(budget) {}

  Proof run(const Proof& p) {
    collect_variables(p);
    return elim_all(p);
  }

  Proof substitute(const Proof& p, const std::string& var, const Term& t) {
    Substituter s([this] { return fresh(); });
    return s.run(p, var, t);
  }

  void collect_variables(const Proof& root) {
    std::unordered_set<const ProofNode*> seen;
    std::vector<const ProofNode*> stack{root.get()};
    while (!stack.empty()) {
      const ProofNode* n = stack.back();
      stack.pop_back();
      if (!seen.insert(n).second) continue;
      for (const auto* side : {&n->conclusion.antecedent, &n->conclusion.succedent}) {
        for (const auto& f : *side) names_.insert(f.free_variables().begin(), f.free_variables().end());
      }
      if (!n->rule.var.empty()) names_.insert(n->rule.var);
      if (!n->rule.term.is_null()) collect_names(n->rule.term, names_);
      for (const auto& [mv, t] : n->rule.instantiation) collect_names(t, names_);
      for (const auto& q : n->premises) stack.push_back(q.get());
    }
  }

 private:
  // Context inserted in place of a traced occurrence: the other side of the cut.
  struct Context {
    Proof other;
    Formula a;
    std::vector<Formula> ante, succ;
    std::vector<std::string> vars;
    std::map<std::pair<const ProofNode*, Positions>, Proof> memo;
  };

  std::string fresh() {
    std::string v = fresh_variable("u", [this](std::string_view s) {
      const std::string str(s);
      return names_.count(str) > 0 || th_.signature.is_constant(s) || th_.signature.function_arity(s) ||
             th_.signature.predicate_arity(s);
    });
    names_.insert(v);
    return v;
  }

  std::uint64_t lines(const Proof& p) {
    if (auto it = lines_.find(p.get()); it != lines_.end()) return it->second;
    std::uint64_t total = 1;
    for (const auto& q : p->premises) total = saturating_add(total, lines(q));
    lines_.emplace(p.get(), total);
    keep_.push_back(p);
    return total;
  }

  Proof track(Proof p) {
    if (lines(p) > budget_) throw BudgetExceeded(budget_);
    return p;
  }

  const NodeLinks& links(const Proof& p) {
    auto it = links_.find(p.get());
    if (it == links_.end()) {
      it = links_.emplace(p.get(), node_links(*p, th_)).first;
      keep_.push_back(p);
    }
    return it->second;
  }

  Proof rebuild(const Rule& r, std::vector<Proof> ps) { return track(rebuild_node(r, std::move(ps), th_)); }

  Proof elim_all(const Proof& p) {
    if (auto it = done_.find(p.get()); it != done_.end()) return it->second;
    std::vector<Proof> ps;
    ps.reserve(p->premises.size());
    for (const auto& q : p->premises) ps.push_back(elim_all(q));
    Proof out = p->rule.tag == RuleTag::Cut ? elim_cut(ps[0], ps[1], p->rule.formula) : rebuild(p->rule, ps);
    done_.emplace(p.get(), out);
    keep_.push_back(p);
    return out;
  }

  static Context make_context(const Proof& other, const Formula& a, bool other_proves_a) {
    Context c;
    c.other = other;
    c.a = a;
    c.ante = other->conclusion.antecedent;
    c.succ = other->conclusion.succedent;
    auto& side = other_proves_a ? c.succ : c.ante;
    side.erase(std::find(side.begin(), side.end(), a));
    std::set<std::string> vars;
    for (const auto* s : {&c.ante, &c.succ}) {
      for (const auto& f : *s) vars.insert(f.free_variables().begin(), f.free_variables().end());
    }
    c.vars.assign(vars.begin(), vars.end());
    return c;
  }

  // Cut of cut-free proofs: left proves A in its succedent, right uses it in
  // its antecedent.
  Proof elim_cut(const Proof& left, const Proof& right, const Formula& a) {
    switch (a.kind()) {
      case FormulaKind::Atom:
      case FormulaKind::And:
      case FormulaKind::Implies:
      case FormulaKind::Forall: break;
      default: throw FragmentExceeded("cut formula outside the supported fragment: " + to_string(a));
    }
    const auto& ante = right->conclusion.antecedent;
    const auto pos = static_cast<std::size_t>(std::find(ante.begin(), ante.end(), a) - ante.begin());
    Context c = make_context(left, a, true);
    return rewrite_right(c, right, {pos});
  }

  // Weakens in the whole context.
  Proof weaken_context(Proof p, const Context& c) {
    for (const auto& f : c.ante) p = track(weaken_left(p, f));
    for (const auto& f : c.succ) p = track(weaken_right(p, f));
    return p;
  }

  Proof contract_context(Proof p, const Context& c, std::size_t times) {
    for (std::size_t k = 0; k < times; ++k) {
      for (const auto& f : c.ante) p = track(contract_left(p, f));
      for (const auto& f : c.succ) p = track(contract_right(p, f));
    }
    return p;
  }

  // Splits traced positions of a conclusion side into per-premise positions.
  // Positions created by the rule are returned separately.
  std::vector<Positions> split(const NodeLinks& L, const Positions& s, bool succedent, std::size_t premises,
                               Positions& created) {
    std::vector<Positions> parts(premises);
    const auto& from = succedent ? L.succ : L.ante;
    for (std::size_t i : s) {
      if (from[i]) {
        parts[static_cast<std::size_t>(from[i]->premise)].push_back(from[i]->index);
      } else {
        created.push_back(i);
      }
    }
    for (auto& part : parts) std::sort(part.begin(), part.end());
    return parts;
  }

  // Replaces the traced premise occurrences by the context; renames an
  // eigenvariable first when the context mentions it.
  std::vector<Proof> rewrite_premises(Context& c, const Proof& p, std::vector<Positions>& parts, Rule& r,
                                      bool right, std::size_t& copies) {
    std::vector<Proof> ps = p->premises;
    copies = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (parts[i].empty()) continue;
      if (is_eigen_rule(r.tag) && std::binary_search(c.vars.begin(), c.vars.end(), r.var)) {
        const std::string renamed = fresh();
        ps[i] = substitute(ps[i], r.var, Term::variable(renamed));
        r.var = renamed;
      }
      ps[i] = right ? rewrite_right(c, ps[i], parts[i]) : rewrite_left(c, ps[i], parts[i]);
      ++copies;
    }
    return ps;
  }

  // p proves Π ⊢ Λ where s lists antecedent occurrences of the cut formula.
  // Returns a proof of Π - s, Γ ⊢ Λ, Δ for the context Γ ⊢ Δ, A of c.
  Proof rewrite_right(Context& c, const Proof& p, const Positions& s) {
    if (s.empty()) return p;
    const auto key = std::make_pair(p.get(), s);
    if (auto it = c.memo.find(key); it != c.memo.end()) return it->second;
    keep_.push_back(p);
    const NodeLinks& L = links(p);
    Positions created;
    std::vector<Positions> parts = split(L, s, false, p->premises.size(), created);
    Rule r = p->rule;
    Proof out;
    std::size_t copies = 0;
    if (created.empty()) {
      auto ps = rewrite_premises(c, p, parts, r, true, copies);
      out = contract_context(rebuild(r, std::move(ps)), c, copies - 1);
    } else {
      switch (r.tag) {
        case RuleTag::LogicalAxiom: out = c.other; break;
        case RuleTag::WeakenLeft:
          out = parts[0].empty() ? weaken_context(p->premises[0], c) : rewrite_right(c, p->premises[0], parts[0]);
          break;
        case RuleTag::ContractLeft: {
          auto& part = parts[0];
          for (const auto& act : L.active) part.push_back(act.index);
          std::sort(part.begin(), part.end());
          out = rewrite_right(c, p->premises[0], part);
          break;
        }
        case RuleTag::TheoryAxiom: {
          auto ps = rewrite_premises(c, p, parts, r, true, copies);
          for (const auto& cr : L.created) {
            if (cr.succedent || !contains(created, cr.index)) continue;
            ps.push_back(c.other);
            r.discharge.push_back(cr.hypothesis);
            ++copies;
          }
          out = contract_context(rebuild(r, std::move(ps)), c, copies - 1);
          break;
        }
        case RuleTag::AndLeft:
        case RuleTag::ImpliesLeft:
        case RuleTag::ForallLeft: {
          auto ps = rewrite_premises(c, p, parts, r, true, copies);
          const Proof principal = rebuild(r, std::move(ps));
          Context d = make_context(principal, c.a, false);
          const auto& succ = c.other->conclusion.succedent;
          const auto pos = static_cast<std::size_t>(std::find(succ.begin(), succ.end(), c.a) - succ.begin());
          out = contract_context(rewrite_left(d, c.other, {pos}), c, copies);
          break;
        }
        default:
          throw std::logic_error(std::string("cut elimination: unexpected principal rule ") + rule_name(r.tag));
      }
    }
    c.memo.emplace(key, out);
    return out;
  }

  // p proves Σ ⊢ Ω where s lists succedent occurrences of the cut formula,
  // and c.other introduces it on the left. Returns Σ, Π ⊢ Ω - s, Λ.
  Proof rewrite_left(Context& c, const Proof& p, const Positions& s) {
    if (s.empty()) return p;
    const auto key = std::make_pair(p.get(), s);
    if (auto it = c.memo.find(key); it != c.memo.end()) return it->second;
    keep_.push_back(p);
    const NodeLinks& L = links(p);
    Positions created;
    std::vector<Positions> parts = split(L, s, true, p->premises.size(), created);
    Rule r = p->rule;
    Proof out;
    std::size_t copies = 0;
    if (created.empty()) {
      auto ps = rewrite_premises(c, p, parts, r, false, copies);
      out = contract_context(rebuild(r, std::move(ps)), c, copies - 1);
    } else {
      switch (r.tag) {
        case RuleTag::LogicalAxiom: out = c.other; break;
        case RuleTag::WeakenRight:
          out = parts[0].empty() ? weaken_context(p->premises[0], c) : rewrite_left(c, p->premises[0], parts[0]);
          break;
        case RuleTag::ContractRight: {
          auto& part = parts[0];
          for (const auto& act : L.active) part.push_back(act.index);
          std::sort(part.begin(), part.end());
          out = rewrite_left(c, p->premises[0], part);
          break;
        }
        case RuleTag::AndRight:
        case RuleTag::ImpliesRight:
        case RuleTag::ForallRight: {
          auto ps = rewrite_premises(c, p, parts, r, false, copies);
          const Proof principal = rebuild(r, std::move(ps));
          out = contract_context(key_reduction(principal, c.other, c.a), c, copies);
          break;
        }
        default:
          throw std::logic_error(std::string("cut elimination: unexpected principal rule ") + rule_name(r.tag));
      }
    }
    c.memo.emplace(key, out);
    return out;
  }

  // Both sides introduce a in their last rule.
  Proof key_reduction(const Proof& right_intro, const Proof& left_intro, const Formula& a) {
    switch (a.kind()) {
      case FormulaKind::And: {
        const Proof inner = elim_cut(right_intro->premises[1], left_intro->premises[0], a.right());
        return elim_cut(right_intro->premises[0], inner, a.left());
      }
      case FormulaKind::Implies: {
        const Proof inner = elim_cut(left_intro->premises[0], right_intro->premises[0], a.left());
        return elim_cut(inner, left_intro->premises[1], a.right());
      }
      case FormulaKind::Forall: {
        const Term& t = left_intro->rule.term;
        const Proof inst = substitute(right_intro->premises[0], right_intro->rule.var, t);
        return elim_cut(inst, left_intro->premises[0], instantiate_body(a, t));
      }
      default: throw FragmentExceeded("no key reduction for " + to_string(a));
    }
  }

  const Theory& th_;
  std::uint64_t budget_;
  std::unordered_set<std::string> names_;
  std::unordered_map<const ProofNode*, std::uint64_t> lines_;
  std::unordered_map<const ProofNode*, NodeLinks> links_;
  std::unordered_map<const ProofNode*, Proof> done_;
  // Keeps every node used as a map key alive so addresses are not reused.
  std::vector<Proof> keep_;
};

bool has_cut(const Proof& root) {
  std::unordered_set<const ProofNode*> seen;
  std::vector<const ProofNode*> stack{root.get()};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->rule.tag == RuleTag::Cut) return true;
    for (const auto& q : n->premises) stack.push_back(q.get());
  }
  return false;
}

}  // namespace

std::uint64_t node_budget_from_env() {
  const char* v = std::getenv("FEASLAB_NODE_BUDGET");
  if (v == nullptr) return kDefaultNodeBudget;
  char* end = nullptr;
  const unsigned long long b = std::strtoull(v, &end, 10);
  if (end == v || *end != '\0' || b == 0) return kDefaultNodeBudget;
  return b;
}

Proof eliminate_cuts(const Proof& p, const Theory& th, std::uint64_t budget) {
  if (!has_cut(p)) return p;
  Eliminator e(th, budget);
  return with_conclusion_order(e.run(p), p->conclusion);
}

Proof substitute_proof(const Proof& p, std::string_view var, const Term& t) {
  std::unordered_set<std::string> names;
  {
    std::unordered_set<const ProofNode*> seen;
    std::vector<const ProofNode*> stack{p.get()};
    while (!stack.empty()) {
      const ProofNode* n = stack.back();
      stack.pop_back();
      if (!seen.insert(n).second) continue;
      if (!n->rule.var.empty()) names.insert(n->rule.var);
      for (const auto* side : {&n->conclusion.antecedent, &n->conclusion.succedent}) {
        for (const auto& f : *side) names.insert(f.free_variables().begin(), f.free_variables().end());
      }
      for (const auto& q : n->premises) stack.push_back(q.get());
    }
  }
  collect_names(t, names);
  Substituter s([&names] {
    std::string v = fresh_variable("u", [&names](std::string_view x) { return names.count(std::string(x)) > 0; });
    names.insert(v);
    return v;
  });
  return s.run(p, std::string(var), t);
}

const char* status_name(BlowupStatus s) {
  switch (s) {
    case BlowupStatus::Ok: return "ok";
    case BlowupStatus::BudgetExceeded: return "budget-exceeded";
    case BlowupStatus::FragmentExceeded: return "fragment-exceeded";
  }
  return "?";
}

std::vector<BlowupRow> blowup_report(std::string_view generator, std::size_t n_min, std::size_t n_max,
                                     const GenOptions& opts, std::uint64_t budget, const BlowupHook& hook) {
  std::vector<BlowupRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const GenReport g = generate(generator, n, opts);
    BlowupRow row;
    row.n = n;
    row.lines_with_cuts = g.stats.lines;
    row.cut_count = g.stats.cut_count;
    const auto start = std::chrono::steady_clock::now();
    Proof cf;
    try {
      cf = eliminate_cuts(g.proof, g.theory, budget);
      const SizeStats st = size(cf);
      row.lines_cut_free = st.lines;
      row.contraction_count = st.contraction_count;
      row.ratio = static_cast<double>(st.lines) / static_cast<double>(row.lines_with_cuts);
    } catch (const BudgetExceeded&) {
      row.status = BlowupStatus::BudgetExceeded;
    } catch (const FragmentExceeded&) {
      row.status = BlowupStatus::FragmentExceeded;
    }
    row.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (hook) hook(row, g, cf ? &cf : nullptr);
    rows.push_back(row);
  }
  return rows;
}

std::string blowup_csv(const std::vector<BlowupRow>& rows) {
  std::ostringstream out;
  out << "n,lines_with_cuts,lines_cut_free,ratio,cut_count,contraction_count,wall_time_ms,status\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.lines_with_cuts << ',' << r.lines_cut_free << ',' << r.ratio << ',' << r.cut_count << ','
        << r.contraction_count << ',' << r.wall_time_ms << ',' << status_name(r.status) << '\n';
  }
  return out.str();
}

}  // namespace feaslab
