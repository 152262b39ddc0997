#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "feaslab/checker.hpp"
#include "feaslab/generators.hpp"
#include "feaslab/proof.hpp"
#include "feaslab/proof_io.hpp"
#include "feaslab/syntax.hpp"
#include "feaslab/theory.hpp"

using namespace feaslab;

namespace {

Term v(const char* name) { return Term::variable(name); }
Term app(const char* f, std::vector<Term> args) { return Term::apply(f, std::move(args)); }

std::uint64_t count_lines(const Proof& p) {
  std::uint64_t n = 1;
  for (const auto& q : p->premises) n += count_lines(q);
  return n;
}

std::uint64_t count_rule(const Proof& p, RuleTag tag) {
  std::uint64_t n = p->rule.tag == tag ? 1 : 0;
  for (const auto& q : p->premises) n += count_rule(q, tag);
  return n;
}

bool rejected(const Proof& p, const Theory& th) {
  try {
    check(p, th);
    return false;
  } catch (const CheckError&) {
    return true;
  }
}

// Distinct nodes with one path each, in preorder.
void collect(const Proof& p, std::vector<int>& path, std::set<const ProofNode*>& seen,
             std::vector<std::pair<std::vector<int>, Proof>>& out) {
  if (!seen.insert(p.get()).second) return;
  out.emplace_back(path, p);
  for (std::size_t i = 0; i < p->premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect(p->premises[i], path, seen, out);
    path.pop_back();
  }
}

// Copy of `root` with the node at `path` replaced; ancestors keep their
// recorded conclusions and rules.
Proof replace_at(const Proof& root, const std::vector<int>& path, std::size_t depth, const Proof& node) {
  if (depth == path.size()) return node;
  std::vector<Proof> prem = root->premises;
  const auto i = static_cast<std::size_t>(path[depth]);
  prem[i] = replace_at(prem[i], path, depth + 1, node);
  return make_node(root->conclusion, root->rule, prem);
}

Term perturb(const Term& t, const Theory& th) {
  switch (th.kind) {
    case TheoryKind::Arithmetic: return app("s", {t});
    case TheoryKind::Group: return app("inv", {t});
    case TheoryKind::Rational: return app("neg", {t});
  }
  return t;
}

struct MutationTally {
  int conclusion = 0;
  int instantiation = 0;
  int premise = 0;
};

void mutate_all(const GenReport& r, std::mt19937& rng, MutationTally& tally, int per_kind) {
  std::vector<std::pair<std::vector<int>, Proof>> nodes;
  std::vector<int> path;
  std::set<const ProofNode*> seen;
  collect(r.proof, path, seen, nodes);
  std::shuffle(nodes.begin(), nodes.end(), rng);

  int conclusion = 0, instantiation = 0, premise = 0;
  for (const auto& [where, node] : nodes) {
    const Sequent& s = node->conclusion;
    if (conclusion < per_kind) {
      Sequent m = s;
      auto& side = (m.antecedent.empty() || (rng() & 1U)) ? m.succedent : m.antecedent;
      if (!side.empty()) {
        auto& f = side[rng() % side.size()];
        f = Formula::negation(f);
        const Proof bad = replace_at(r.proof, where, 0, make_node(m, node->rule, node->premises));
        CHECK_MESSAGE(rejected(bad, r.theory), "conclusion mutation at " << where.size());
        ++conclusion;
      }
    }
    if (instantiation < per_kind) {
      Rule rule = node->rule;
      bool changed = false;
      if (rule.tag == RuleTag::TheoryAxiom && !rule.instantiation.empty()) {
        auto& slot = rule.instantiation[rng() % rule.instantiation.size()].second;
        slot = perturb(slot, r.theory);
        changed = true;
      } else if (rule.tag == RuleTag::ForallLeft || rule.tag == RuleTag::ExistsRight) {
        const Term t2 = perturb(rule.term, r.theory);
        changed = instantiate_body(rule.formula, t2) != instantiate_body(rule.formula, rule.term);
        rule.term = t2;
      }
      if (changed) {
        const Proof bad = replace_at(r.proof, where, 0, make_node(s, rule, node->premises));
        CHECK_MESSAGE(rejected(bad, r.theory), "instantiation mutation on " << rule_name(rule.tag));
        ++instantiation;
      }
    }
    if (premise < per_kind && !node->premises.empty()) {
      const std::size_t drop = rng() % node->premises.size();
      std::vector<Proof> prem = node->premises;
      prem.erase(prem.begin() + static_cast<std::ptrdiff_t>(drop));
      Rule rule = node->rule;
      if (rule.tag == RuleTag::TheoryAxiom && drop < rule.discharge.size()) {
        rule.discharge.erase(rule.discharge.begin() + static_cast<std::ptrdiff_t>(drop));
      }
      const Proof bad = replace_at(r.proof, where, 0, make_node(s, rule, prem));
      CHECK_MESSAGE(rejected(bad, r.theory), "premise drop on " << rule_name(rule.tag));
      ++premise;
    }
  }
  tally.conclusion += conclusion;
  tally.instantiation += instantiation;
  tally.premise += premise;
}

}  // namespace

TEST_CASE("builders compute conclusions in a fixed order") {
  const Formula a = F(v("x"));
  const Formula b = F(v("y"));
  const Proof ax = logical_axiom(a);
  CHECK(ax->conclusion.antecedent == std::vector<Formula>{a});
  CHECK(ax->conclusion.succedent == std::vector<Formula>{a});

  const Proof wl = weaken_left(logical_axiom(b), a);
  CHECK(wl->conclusion.antecedent == std::vector<Formula>{a, b});
  const Proof ar = and_right(logical_axiom(a), logical_axiom(b), Formula::conjunction(a, b));
  CHECK(ar->conclusion.antecedent == std::vector<Formula>{a, b});
  CHECK(ar->conclusion.succedent == std::vector<Formula>{Formula::conjunction(a, b)});

  const Proof ir = implies_right(ax, Formula::implication(a, a));
  CHECK(ir->conclusion.antecedent.empty());
  const Formula all = Formula::forall("x", Formula::implication(a, a));
  const Proof fr = forall_right(ir, all, "x");
  CHECK(same_sequent(fr->conclusion, Sequent{{}, {all}}));
  const Proof fl = forall_left(logical_axiom(F(Term::constant("0"))), Formula::forall("x", a), Term::constant("0"));
  CHECK(fl->conclusion.antecedent == std::vector<Formula>{Formula::forall("x", a)});
  CHECK(count_lines(fr) == size(fr).lines);
  CHECK(check(fr, arith_feasibility()).lines == 3);
}

TEST_CASE("theory axioms as leaves and as rules") {
  const Theory th = arith_feasibility();
  const Term zero = Term::constant("0");
  const Proof z = theory_axiom(th, "F:zero", {});
  const Proof s = theory_axiom(th, "F:successor", {{"x", zero}}, {z}, {0});
  CHECK(same_sequent(s->conclusion, Sequent{{}, {F(app("s", {zero}))}}));
  const Proof open = theory_axiom(th, "F:successor", {{"x", zero}});
  CHECK(same_sequent(open->conclusion, Sequent{{F(zero)}, {F(app("s", {zero}))}}));
  CHECK_NOTHROW(check(s, th));
  CHECK_NOTHROW(check(open, th));
  CHECK_THROWS_AS(theory_axiom(th, "F:nope", {}), std::invalid_argument);
}

TEST_CASE("equality oracle leaves") {
  const Theory th = arith_feasibility();
  const Term four = successor_numeral(4);
  const Term sq = app("*", {arith_two(), arith_two()});
  CHECK_NOTHROW(check(eq_oracle(sq, four), th));
  try {
    check(eq_oracle(sq, successor_numeral(5)), th);
    FAIL("accepted a false equation");
  } catch (const CheckError& e) {
    CHECK(e.kind() == CheckErrorKind::OracleReject);
    CHECK(e.path() == "root");
  }
}

TEST_CASE("eigenvariable condition") {
  const Formula fx = F(v("x"));
  const Formula all = Formula::forall("x", fx);
  const Proof bad = make_node(Sequent{{fx}, {all}}, Rule{RuleTag::ForallRight, all, {}, "x", {}, {}, {}},
                              {logical_axiom(fx)});
  try {
    check(bad, arith_feasibility());
    FAIL("accepted an eigenvariable violation");
  } catch (const CheckError& e) {
    CHECK(e.kind() == CheckErrorKind::Eigenvariable);
  }
}

TEST_CASE("unary proofs: 2n+1 lines, n cuts, no contractions") {
  for (std::size_t n = 0; n <= 20; ++n) {
    const GenReport r = gen_unary(n);
    const SizeStats s = check(r.proof, r.theory);
    CHECK(s.lines == count_lines(r.proof));
    CHECK(s.lines == 2 * n + 1);
    CHECK(s.cut_count == count_rule(r.proof, RuleTag::Cut));
    CHECK(s.cut_count == n);
    CHECK(s.contraction_count == 0);
    CHECK(r.goal == F(successor_numeral(n)));
  }
}

TEST_CASE("proofs survive a JSON round trip") {
  for (const char* name : {"unary", "square-cut", "quantifier", "group-power", "distorted", "rational-orbit"}) {
    const GenReport r = generate(name, 2);
    const std::string text = proof_to_json(r.proof, r.theory);
    const ProofDocument doc = proof_from_json(text);
    CHECK(doc.theory.name == r.theory.name);
    CHECK(proof_to_json(doc.proof, doc.theory) == text);
    CHECK(check(doc.proof, doc.theory).lines == r.stats.lines);
  }
  CHECK_THROWS(proof_from_json("{\"theory\": \"arith\"}"));
  CHECK_THROWS(proof_from_json("not json"));
}

TEST_CASE("rule names round trip") {
  for (int i = 0; i <= static_cast<int>(RuleTag::ExistsRight); ++i) {
    const auto tag = static_cast<RuleTag>(i);
    CHECK(rule_from_name(rule_name(tag)) == tag);
  }
  CHECK(rule_from_name("bogus") == std::nullopt);
}

TEST_CASE("every mutation of a valid proof is rejected") {
  std::mt19937 rng(99);
  MutationTally tally;
  GenOptions bs;
  bs.theory = "group:bs12";
  bs.power_mode = PowerMode::Quantifier;
  const std::vector<GenReport> reports = {
      gen_unary(6),
      gen_square_cut(3),
      gen_quantifier(1),
      gen_geometric(4),
      generate("group-power", 2, bs),
      gen_distorted(1),
      gen_matrix_power(Mat2::of(2, 1, 1, 1), 1, MatrixMode::Quantifier),
      gen_rational_orbit(Mat2::of(2, 1, 1, 1), ExtRational(0L), 1),
  };
  for (const auto& r : reports) {
    REQUIRE_NOTHROW(check(r.proof, r.theory));
    mutate_all(r, rng, tally, 12);
  }
  MESSAGE("mutations: conclusion " << tally.conclusion << ", instantiation " << tally.instantiation << ", premise "
                                   << tally.premise);
  CHECK(tally.conclusion >= 70);
  CHECK(tally.instantiation >= 70);
  CHECK(tally.premise >= 70);
  CHECK(tally.conclusion + tally.instantiation + tally.premise >= 200);
}

TEST_CASE("conclusion order can be permuted") {
  const Formula a = F(v("x"));
  const Formula b = F(v("y"));
  const Proof p = weaken_left(logical_axiom(b), a);
  const Proof q = with_conclusion_order(p, Sequent{{b, a}, {b}});
  CHECK(q->conclusion.antecedent == std::vector<Formula>{b, a});
  CHECK_NOTHROW(check(q, arith_feasibility()));
  CHECK_THROWS(with_conclusion_order(p, Sequent{{a}, {b}}));
}

TEST_CASE("shared subproofs count with multiplicity") {
  const GenReport r = gen_square_cut(8);
  CHECK(r.stats.lines == count_lines(r.proof));
  CHECK(distinct_nodes(r.proof) <= r.stats.lines);
}
