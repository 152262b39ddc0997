#include <doctest.h>

#include <random>
#include <set>

#include "feaslab/formula.hpp"
#include "feaslab/sequent.hpp"
#include "feaslab/signature.hpp"
#include "feaslab/syntax.hpp"

using namespace feaslab;

namespace {

const Signature& arith() {
  static const Signature s = arithmetic_signature();
  return s;
}

Term v(const char* name) { return Term::variable(name); }
Term app(const char* f, std::vector<Term> args) { return Term::apply(f, std::move(args)); }

struct RandomSyntax {
  std::mt19937 rng;
  explicit RandomSyntax(unsigned seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Term term(int depth) {
    const int k = depth == 0 ? pick(2) : pick(6);
    switch (k) {
      case 0: return Term::constant("0");
      case 1: return v(std::array{"x", "y", "z"}[static_cast<std::size_t>(pick(3))]);
      case 2: return app("s", {term(depth - 1)});
      case 3: return app("+", {term(depth - 1), term(depth - 1)});
      case 4: return app("*", {term(depth - 1), term(depth - 1)});
      default: return app("exp", {term(depth - 1), term(depth - 1)});
    }
  }

  Formula formula(int depth) {
    const int k = depth == 0 ? pick(2) : pick(8);
    switch (k) {
      case 0: return Formula::atom("F", {term(2)});
      case 1: return Formula::equals(term(2), term(2));
      case 2: return Formula::negation(formula(depth - 1));
      case 3: return Formula::conjunction(formula(depth - 1), formula(depth - 1));
      case 4: return Formula::disjunction(formula(depth - 1), formula(depth - 1));
      case 5: return Formula::implication(formula(depth - 1), formula(depth - 1));
      case 6: return Formula::forall(std::array{"x", "y"}[static_cast<std::size_t>(pick(2))], formula(depth - 1));
      default: return Formula::exists(std::array{"x", "z"}[static_cast<std::size_t>(pick(2))], formula(depth - 1));
    }
  }
};

// Reference substitution for a closed replacement, where capture cannot occur.
Term naive_subst(const Term& t, const std::string& var, const Term& r) {
  if (t.is_variable()) return t.symbol() == var ? r : t;
  if (t.is_constant()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(naive_subst(a, var, r));
  return Term::apply(t.symbol(), args);
}

Formula naive_subst(const Formula& f, const std::string& var, const Term& r) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::vector<Term> args;
      for (const auto& a : f.args()) args.push_back(naive_subst(a, var, r));
      return Formula::atom(f.predicate(), args);
    }
    case FormulaKind::Not: return Formula::negation(naive_subst(f.left(), var, r));
    case FormulaKind::And: return Formula::conjunction(naive_subst(f.left(), var, r), naive_subst(f.right(), var, r));
    case FormulaKind::Or: return Formula::disjunction(naive_subst(f.left(), var, r), naive_subst(f.right(), var, r));
    case FormulaKind::Implies:
      return Formula::implication(naive_subst(f.left(), var, r), naive_subst(f.right(), var, r));
    case FormulaKind::Forall:
      return f.bound_var() == var ? f : Formula::forall(f.bound_var(), naive_subst(f.body(), var, r));
    case FormulaKind::Exists:
      return f.bound_var() == var ? f : Formula::exists(f.bound_var(), naive_subst(f.body(), var, r));
  }
  return f;
}

}  // namespace

TEST_CASE("numerals and powers parse to the expected trees") {
  CHECK(parse_term("s(s(0))", arith()) == app("s", {app("s", {Term::constant("0")})}));
  CHECK(parse_term("2", arith()) == successor_numeral(2));
  CHECK(parse_term("exp(x, s(s(0)))", arith()) == app("exp", {v("x"), successor_numeral(2)}));
}

TEST_CASE("products are right associative and bind tighter than sums") {
  CHECK(parse_term("x*x*x", arith()) == app("*", {v("x"), app("*", {v("x"), v("x")})}));
  CHECK(parse_term("x+y*z", arith()) == app("+", {v("x"), app("*", {v("y"), v("z")})}));
}

TEST_CASE("formulas from the feasibility axioms parse") {
  const Formula f0 = parse_formula("F(0)", arith());
  CHECK(f0 == Formula::atom("F", {Term::constant("0")}));
  const Formula sq = parse_formula("forall x (F(x) -> F(exp(x,2)))", arith());
  CHECK(sq.kind() == FormulaKind::Forall);
  CHECK(sq.bound_var() == "x");
  CHECK(sq.body() == Formula::implication(Formula::atom("F", {v("x")}),
                                          Formula::atom("F", {app("exp", {v("x"), successor_numeral(2)})})));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_term("s(0", arith()), ParseError);
  CHECK_THROWS_AS(parse_term("s(0,0)", arith()), ParseError);
  CHECK_THROWS_AS(parse_formula("G(0)", arith()), ParseError);
  CHECK_THROWS_AS(parse_formula("F(0) /\\", arith()), ParseError);
  try {
    parse_term("s(0))", arith());
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("printing then parsing returns the same formula") {
  RandomSyntax gen(7);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = gen.formula(3);
    const Formula back = parse_formula(to_string(f), arith());
    REQUIRE_MESSAGE(back == f, to_string(f));
  }
}

TEST_CASE("sequents round-trip and compare as multisets") {
  const Sequent s = parse_sequent("F(x), F(x), F(y) |- F(x*y)", arith());
  CHECK(s.antecedent.size() == 3);
  CHECK(parse_sequent(to_string(s), arith()).antecedent == s.antecedent);
  const Sequent permuted = parse_sequent("F(y), F(x), F(x) |- F(x*y)", arith());
  const Sequent fewer = parse_sequent("F(y), F(x) |- F(x*y)", arith());
  CHECK(same_sequent(s, permuted));
  CHECK_FALSE(same_sequent(s, fewer));
  CHECK(parse_sequent("|- F(0)", arith()).antecedent.empty());
}

TEST_CASE("interning: structural equality iff equal ids") {
  RandomSyntax a(11), b(11), c(12);
  for (int i = 0; i < 500; ++i) {
    const Term s = a.term(3);
    const Term t = b.term(3);
    CHECK(s.id() == t.id());
    const Term u = c.term(3);
    CHECK((to_string(s) == to_string(u)) == (s.id() == u.id()));
  }
}

TEST_CASE("substitution agrees with a tree-copying reference for closed replacements") {
  RandomSyntax gen(3);
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula(3);
    Term r = gen.term(2);
    r = naive_subst(naive_subst(naive_subst(r, "x", Term::constant("0")), "y", Term::constant("0")), "z",
                    Term::constant("0"));
    for (const char* var : {"x", "y", "z"}) CHECK(substitute(f, var, r) == naive_subst(f, var, r));
  }
}

TEST_CASE("substitution examples") {
  const Formula step = parse_formula("F(x) -> F(exp(x,2))", arith());
  const Term xk = parse_term("exp(x,k)", arith());
  CHECK(substitute(step, "x", xk) == parse_formula("F(exp(x,k)) -> F(exp(exp(x,k),2))", arith()));
  const Formula f0 = parse_formula("F(0)", arith());
  CHECK(substitute(f0, "x", xk) == f0);
  const Formula bound = parse_formula("forall x F(x)", arith());
  CHECK(substitute(bound, "x", xk) == bound);
}

TEST_CASE("substitution renames bound variables that would capture") {
  const Formula f = parse_formula("forall y F(x+y)", arith());
  const Formula g = substitute(f, "x", v("y"));
  REQUIRE(g.kind() == FormulaKind::Forall);
  CHECK(g.bound_var() != "y");
  CHECK(g.free_variables() == std::vector<std::string>{"y"});
  CHECK(g.body() == Formula::atom("F", {app("+", {v("y"), v(g.bound_var().c_str())})}));
}

TEST_CASE("substitution preserves sharing") {
  Term t = v("x");
  for (int i = 0; i < 20; ++i) t = app("*", {t, t});
  const Term r = parse_term("s(y)", arith());
  const Term u = substitute(t, "x", r);
  CHECK(dag_node_count(u) <= dag_node_count(t) + dag_node_count(r));
}

TEST_CASE("nested squares: linear DAG, exponential tree") {
  Term t = v("x");
  BigInt expected_tree = 1;
  for (int m = 1; m <= 40; ++m) {
    t = app("*", {t, t});
    expected_tree = 2 * expected_tree + 1;
    CHECK(dag_node_count(t) == static_cast<std::size_t>(m + 1));
    CHECK(tree_size(t) == expected_tree);
  }
}

TEST_CASE("nested exp terms expand to exponentially large exp-free products") {
  const Term two = successor_numeral(2);
  Term t = v("x");
  Term expanded = v("x");
  for (int m = 1; m <= 10; ++m) {
    t = app("exp", {t, two});
    expanded = app("*", {expanded, expanded});
    CHECK(dag_node_count(t) == static_cast<std::size_t>(m + 4));
    // x^(2^m) written as a product has 2^m leaves.
    CHECK(tree_size(expanded) == (BigInt(1) << (m + 1)) - 1);
  }
}

TEST_CASE("signatures") {
  CHECK_NOTHROW(arith().validate());
  CHECK(arith().function_arity("exp") == 2);
  CHECK(arith().predicate_arity("F") == 1);
  const Signature g = group_signature({"x", "y"});
  CHECK(g.is_constant("e"));
  CHECK(g.predicate_arity("T") == 1);
  const Signature q = rational_signature();
  CHECK(q.is_constant("inf"));
  CHECK(q.is_literal("-3/4"));
  CHECK_FALSE(q.is_literal("6/8"));
  CHECK(canonical_rational_literal("6/8") == std::optional<std::string>("3/4"));
  CHECK(canonical_rational_literal("-0") == std::optional<std::string>("0"));
  CHECK(check_well_formed(parse_term("s(s(0))", arith()), arith()) == std::nullopt);
  CHECK(check_well_formed(app("s", {v("x"), v("y")}), arith()).has_value());
}
