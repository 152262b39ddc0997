#include "feaslab/generators.hpp"

#include <stdexcept>

#include "feaslab/syntax.hpp"

namespace feaslab {

namespace {

Term app(const char* f, std::vector<Term> args) { return Term::apply(f, std::move(args)); }
Term lit(long v) { return Term::constant(std::to_string(v)); }

Proof leaf(const Theory& th, const char* axiom, Instantiation inst = {}) {
  return theory_axiom(th, axiom, inst);
}

/// F(from) ⊢ F(to) through an oracle equation: 3 lines.
Proof rename_lemma(const Theory& th, const Term& from, const Term& to) {
  const Proof eq = eq_oracle(from, to);
  const Proof subst = leaf(th, "F:equality", {{"x", from}, {"y", to}});
  return cut(eq, subst, Formula::equals(from, to));
}

/// Replaces the succedent F(from) of p by F(to): 4 extra lines.
Proof rename(const Theory& th, const Proof& p, const Term& from, const Term& to) {
  return cut(p, rename_lemma(th, from, to), F(from));
}

GenReport finish(const Theory& th, Proof p, std::optional<SemanticValue> value) {
  GenReport r{th, std::move(p), Formula(), std::move(value), SizeStats{}};
  if (r.proof->conclusion.succedent.size() == 1) r.goal = r.proof->conclusion.succedent.front();
  r.stats = size(r.proof);
  return r;
}

// F(t), F(t) ⊢ F(t ∘ t) contracted to F(t) ⊢ F(t ∘ t), then renamed to F(sq):
// the 6-line squaring lemma.
Proof squaring_lemma(const Theory& th, const char* product_axiom, const char* op, const Term& t, const Term& sq) {
  const Proof prod = leaf(th, product_axiom, {{"x", t}, {"y", t}});
  const Proof once = contract_left(prod, F(t));
  return cut(once, rename_lemma(th, app(op, {t, t}), sq), F(app(op, {t, t})));
}

/// A(k) = ∀v(F(v) → F(power(v, k))).
Formula power_closure(const char* v, const char* power_symbol, const Term& k) {
  const Term x = Term::variable(v);
  return Formula::forall(v, Formula::implication(F(x), F(app(power_symbol, {x, k}))));
}

/// ⊢ A(k0) from the product axiom, 8 lines.
Proof power_closure_base(const Theory& th, const char* v, const char* product_axiom, const char* op,
                         const char* power_symbol, const Term& k0) {
  const Term x = Term::variable(v);
  const Term sq = app(power_symbol, {x, k0});
  const Proof lemma = squaring_lemma(th, product_axiom, op, x, sq);
  const Proof imp = implies_right(lemma, Formula::implication(F(x), F(sq)));
  return forall_right(imp, power_closure(v, power_symbol, k0), v);
}

/// A(k) ⊢ A(k2) where power(power(v,k),k) = power(v,k2): 14 lines.
Proof power_closure_step(const Theory& th, const char* v, const char* power_symbol, const Term& k, const Term& k2) {
  const Term x = Term::variable(v);
  const Term a = app(power_symbol, {x, k});
  const Term b = app(power_symbol, {a, k});
  const Term c = app(power_symbol, {x, k2});
  const Formula ak = power_closure(v, power_symbol, k);
  const Formula x_to_a = Formula::implication(F(x), F(a));
  const Formula a_to_b = Formula::implication(F(a), F(b));
  Proof p = implies_left(logical_axiom(F(x)), logical_axiom(F(a)), x_to_a);
  p = implies_left(p, logical_axiom(F(b)), a_to_b);
  p = cut(p, rename_lemma(th, b, c), F(b));
  p = forall_left(p, ak, a);
  p = forall_left(p, ak, x);
  p = contract_left(p, ak);
  p = implies_right(p, Formula::implication(F(x), F(c)));
  return forall_right(p, power_closure(v, power_symbol, k2), v);
}

/// From ⊢ A(k) and ⊢ F(base): ⊢ F(power(base, k)); adds 4 lines plus two cuts.
Proof apply_power_closure(const Proof& closure, const Formula& ak, const Proof& base_proof, const Term& base,
                          const char* power_symbol, const Term& k) {
  const Term target = app(power_symbol, {base, k});
  Proof p = implies_left(logical_axiom(F(base)), logical_axiom(F(target)), Formula::implication(F(base), F(target)));
  p = forall_left(p, ak, base);
  p = cut(base_proof, p, F(base));
  return cut(closure, p, ak);
}

BigInt pow2_int(std::size_t k) {
  BigInt v = 1;
  v <<= static_cast<unsigned>(k);
  return v;
}

}  // namespace

Term arith_two() { return successor_numeral(2); }

Term double_exponent(std::size_t j, bool arith) {
  const Term two = arith ? arith_two() : lit(2);
  if (j == 0) return two;
  const Term jj = arith ? successor_numeral(j) : lit(static_cast<long>(j));
  return app("exp", {two, app("exp", {two, jj})});
}

std::string describe(const SemanticValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using V = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<V, NatValue>) {
          return x.describe();
        } else if constexpr (std::is_same_v<V, Word>) {
          return to_string(x);
        } else {
          return x.to_string();
        }
      },
      v);
}

// ---------------------------------------------------------------------------
// Arithmetic.

GenReport gen_unary(std::size_t n) {
  const Theory th = arith_feasibility();
  Proof p = leaf(th, "F:zero");
  for (std::size_t k = 0; k < n; ++k) {
    const Term t = successor_numeral(k);
    p = cut(p, leaf(th, "F:successor", {{"x", t}}), F(t));
  }
  return finish(th, p, NatValue(static_cast<unsigned long>(n)));
}

GenReport gen_geometric(std::size_t n) {
  if (n < 1) throw std::invalid_argument("gen_geometric needs n >= 1");
  const Theory th = arith_feasibility();
  const Term two = arith_two();
  Proof p = gen_unary(2).proof;
  Term t = two;
  for (std::size_t k = 1; k < n; ++k) {
    const Proof times = leaf(th, "F:times", {{"x", t}, {"y", two}});
    const Proof step = cut(gen_unary(2).proof, times, F(two));
    p = cut(p, step, F(t));
    t = app("*", {t, two});
  }
  return finish(th, p, NatValue(pow2_int(n)));
}

GenReport gen_square_cut(std::size_t n) {
  const Theory th = arith_feasibility();
  const Term two = arith_two();
  Proof p = gen_unary(2).proof;
  Term t = two;
  for (std::size_t j = 0; j < n; ++j) {
    const Term next = app("exp", {t, two});
    p = cut(p, squaring_lemma(th, "F:times", "*", t, next), F(t));
    t = next;
  }
  return finish(th, p, NatValue::power(NatValue(2UL), NatValue(pow2_int(n))));
}

GenReport gen_quantifier(std::size_t n) {
  const Theory th = arith_feasibility();
  const Term two = arith_two();
  Proof closure = power_closure_base(th, "x", "F:times", "*", "exp", two);
  for (std::size_t j = 0; j < n; ++j) {
    const Proof step = power_closure_step(th, "x", "exp", double_exponent(j, true), double_exponent(j + 1, true));
    closure = cut(closure, step, power_closure("x", "exp", double_exponent(j, true)));
  }
  const Term k = double_exponent(n, true);
  const Proof p = apply_power_closure(closure, power_closure("x", "exp", k), gen_unary(2).proof, two, "exp", k);
  // 2^{2^{2^n}}: the exponent 2^{2^n} itself may need the power form.
  const NatValue e = NatValue::power(NatValue(2UL), NatValue(pow2_int(n)));
  return finish(th, p, NatValue::power(NatValue(2UL), e));
}

// ---------------------------------------------------------------------------
// Groups.

GenReport gen_group_power(const Theory& th, std::string_view generator, std::size_t n, PowerMode mode) {
  if (th.kind != TheoryKind::Group) throw std::invalid_argument("gen_group_power needs a group theory");
  const std::string gen_axiom = "F:gen:" + std::string(generator);
  if (th.axiom(gen_axiom) == nullptr) {
    throw std::invalid_argument("'" + std::string(generator) + "' is not a generator of " + th.name);
  }
  const Term g = Term::constant(generator);
  auto value_of = [&](const BigInt& k) -> SemanticValue {
    if (th.presentation == Presentation::BS12) return bs_power(bs_normalize(Word{Letter{std::string(generator), 1}}), k);
    return Word{Letter{std::string(generator), k}};
  };
  switch (mode) {
    case PowerMode::Linear: {
      if (n == 0) return finish(th, leaf(th, "F:identity"), value_of(0));
      Proof p = leaf(th, gen_axiom.c_str());
      Term t = g;
      for (std::size_t k = 1; k < n; ++k) {
        const Proof comp = leaf(th, "F:composition", {{"x", t}, {"y", g}});
        p = cut(p, cut(leaf(th, gen_axiom.c_str()), comp, F(g)), F(t));
        t = app("*", {t, g});
      }
      return finish(th, p, value_of(n));
    }
    case PowerMode::Squaring: {
      Proof p = leaf(th, gen_axiom.c_str());
      Term t = g;
      for (std::size_t j = 0; j < n; ++j) {
        const Term next = app("pow", {g, natural_literal(pow2_int(j + 1))});
        p = cut(p, squaring_lemma(th, "F:composition", "*", t, next), F(t));
        t = next;
      }
      return finish(th, p, value_of(pow2_int(n)));
    }
    case PowerMode::Quantifier: {
      if (!th.quantifiers_allowed) throw std::invalid_argument(th.name + " is configured without quantifiers");
      Proof closure = power_closure_base(th, "z", "F:composition", "*", "pow", lit(2));
      for (std::size_t j = 0; j < n; ++j) {
        const Proof step = power_closure_step(th, "z", "pow", double_exponent(j, false), double_exponent(j + 1, false));
        closure = cut(closure, step, power_closure("z", "pow", double_exponent(j, false)));
      }
      const Term k = double_exponent(n, false);
      const Proof p =
          apply_power_closure(closure, power_closure("z", "pow", k), leaf(th, gen_axiom.c_str()), g, "pow", k);
      std::optional<SemanticValue> v;
      if (n <= 20) v = value_of(pow2_int(std::size_t{1} << n));
      return finish(th, p, v);
    }
  }
  throw std::invalid_argument("unknown power mode");
}

GenReport gen_distorted(std::size_t n) {
  const Theory th = theory_from_selector("group:bs12");
  const Term x = Term::constant("x");
  const Term y = Term::constant("y");
  // X = x^{2^n} by squaring.
  const Proof px = gen_group_power(th, "x", n, PowerMode::Squaring).proof;
  const Term big_x = n == 0 ? x : app("pow", {x, natural_literal(pow2_int(n))});
  const Term xy = app("*", {big_x, y});
  const Term inv_x = app("inv", {big_x});
  const Term w = app("*", {xy, inv_x});
  // F(X), F(y), F(X⁻¹) ⊢ F(X y X⁻¹), with the two F(X) merged.
  Proof p = cut(leaf(th, "F:composition", {{"x", big_x}, {"y", y}}),
                leaf(th, "F:composition", {{"x", xy}, {"y", inv_x}}), F(xy));
  p = cut(leaf(th, "F:inverse", {{"x", big_x}}), p, F(inv_x));
  p = contract_left(p, F(big_x));
  p = cut(leaf(th, "F:gen:y"), p, F(y));
  p = cut(px, p, F(big_x));
  // y^{2^{2^n}} = x^{2^n} y x^{-2^n}.
  const Term target = app("pow", {y, double_exponent(n, false)});
  p = rename(th, p, w, target);
  std::optional<SemanticValue> v;
  if (n <= 24) v = BSElement(BigRational(pow2_int(std::size_t{1} << n)), 0);
  return finish(th, p, v);
}

// ---------------------------------------------------------------------------
// Rationals and matrices.

Proof rational_literal_proof(const Theory& th, const BigRational& q) {
  const Term target = rational_literal(q);
  if (q == 0) return leaf(th, "F:zero");
  if (q == 1) return leaf(th, "F:one");
  if (denominator(q) != 1) {
    const BigRational p_part(numerator(q));
    const BigRational q_part(denominator(q));
    const Term pt = rational_literal(p_part);
    const Term qt = rational_literal(q_part);
    const Term rq = app("recip", {qt});
    const Proof recip = cut(rational_literal_proof(th, q_part), leaf(th, "F:recip", {{"x", qt}}), F(qt));
    Proof prod = cut(recip, leaf(th, "F:times", {{"x", pt}, {"y", rq}}), F(rq));
    prod = cut(rational_literal_proof(th, p_part), prod, F(pt));
    return rename(th, prod, app("*", {pt, rq}), target);
  }
  if (q < 0) {
    const BigRational m(-q);
    const Term mt = rational_literal(m);
    const Proof negp = cut(rational_literal_proof(th, m), leaf(th, "F:neg", {{"x", mt}}), F(mt));
    return rename(th, negp, app("neg", {mt}), target);
  }
  // Binary expansion: m = 2h or 2h + 1, doubling through one contraction.
  const BigInt m = numerator(q);
  const BigRational h(BigInt(m / 2));
  const Term ht = rational_literal(h);
  const Term hh = app("+", {ht, ht});
  Proof p = contract_left(leaf(th, "F:plus", {{"x", ht}, {"y", ht}}), F(ht));
  p = cut(rational_literal_proof(th, h), p, F(ht));
  Term got = hh;
  if (bit_test(m, 0)) {
    const Term one = Term::constant("1");
    const Term hh1 = app("+", {hh, one});
    Proof inc = cut(leaf(th, "F:one"), leaf(th, "F:plus", {{"x", hh}, {"y", one}}), F(one));
    p = cut(p, inc, F(hh));
    got = hh1;
  }
  return rename(th, p, got, target);
}

namespace {

struct Entries {
  Term a, b, c, d;
};

Entries literal_entries(const Mat2& m) {
  return {rational_literal(m.a), rational_literal(m.b), rational_literal(m.c), rational_literal(m.d)};
}

/// ⊢ φ(M) from literal proofs of its entries.
Proof phi_literal_proof(const Theory& th, const Mat2& m) {
  const Entries e = literal_entries(m);
  const Formula cd = Formula::conjunction(F(e.c), F(e.d));
  const Formula bcd = Formula::conjunction(F(e.b), cd);
  Proof p = and_right(rational_literal_proof(th, m.c), rational_literal_proof(th, m.d), cd);
  p = and_right(rational_literal_proof(th, m.b), p, bcd);
  return and_right(rational_literal_proof(th, m.a), p, Formula::conjunction(F(e.a), bcd));
}

/// F(u), F(v), F(w), F(z) ⊢ F(u*v + w*z): 5 lines.
Proof product_sum(const Theory& th, const Term& u, const Term& v, const Term& w, const Term& z) {
  const Term uv = app("*", {u, v});
  const Term wz = app("*", {w, z});
  Proof p = leaf(th, "F:plus", {{"x", uv}, {"y", wz}});
  p = cut(leaf(th, "F:times", {{"x", u}, {"y", v}}), p, F(uv));
  return cut(leaf(th, "F:times", {{"x", w}, {"y", z}}), p, F(wz));
}

/// φ(a,b,c,d) ⊢ φ(targets), where targets[i] equals entry i of the square
/// of (a b; c d) by the oracle: 54 lines.
Proof matrix_square_lemma(const Theory& th, const Entries& m, const Entries& target) {
  const Term sq[4] = {app("+", {app("*", {m.a, m.a}), app("*", {m.b, m.c})}),
                      app("+", {app("*", {m.a, m.b}), app("*", {m.b, m.d})}),
                      app("+", {app("*", {m.c, m.a}), app("*", {m.d, m.c})}),
                      app("+", {app("*", {m.c, m.b}), app("*", {m.d, m.d})})};
  const Term tgt[4] = {target.a, target.b, target.c, target.d};
  Proof entry[4] = {product_sum(th, m.a, m.a, m.b, m.c), product_sum(th, m.a, m.b, m.b, m.d),
                    product_sum(th, m.c, m.a, m.d, m.c), product_sum(th, m.c, m.b, m.d, m.d)};
  for (int i = 0; i < 4; ++i) entry[i] = rename(th, entry[i], sq[i], tgt[i]);
  const Formula cd = Formula::conjunction(F(tgt[2]), F(tgt[3]));
  const Formula bcd = Formula::conjunction(F(tgt[1]), cd);
  Proof p = and_right(entry[2], entry[3], cd);
  p = and_right(entry[1], p, bcd);
  p = and_right(entry[0], p, Formula::conjunction(F(tgt[0]), bcd));
  // Sixteen hypothesis occurrences, four of each entry, merged to one each.
  for (const Term& t : {m.a, m.b, m.c, m.d}) {
    for (int k = 0; k < 3; ++k) p = contract_left(p, F(t));
  }
  const Formula mcd = Formula::conjunction(F(m.c), F(m.d));
  const Formula mbcd = Formula::conjunction(F(m.b), mcd);
  p = and_left(p, mcd);
  p = and_left(p, mbcd);
  return and_left(p, Formula::conjunction(F(m.a), mbcd));
}

Formula phi(const Entries& e) { return matrix_phi(e.a, e.b, e.c, e.d); }

Entries matrix_power_terms(const Entries& m, const Term& k) {
  return {app("mp11", {m.a, m.b, m.c, m.d, k}), app("mp12", {m.a, m.b, m.c, m.d, k}),
          app("mp21", {m.a, m.b, m.c, m.d, k}), app("mp22", {m.a, m.b, m.c, m.d, k})};
}

/// φ(from) ⊢ φ(to), entrywise oracle renaming: 18 lines.
Proof phi_rename(const Theory& th, const Entries& from, const Entries& to) {
  const Formula cd = Formula::conjunction(F(to.c), F(to.d));
  const Formula bcd = Formula::conjunction(F(to.b), cd);
  Proof p = and_right(rename_lemma(th, from.c, to.c), rename_lemma(th, from.d, to.d), cd);
  p = and_right(rename_lemma(th, from.b, to.b), p, bcd);
  p = and_right(rename_lemma(th, from.a, to.a), p, Formula::conjunction(F(to.a), bcd));
  const Formula fcd = Formula::conjunction(F(from.c), F(from.d));
  const Formula fbcd = Formula::conjunction(F(from.b), fcd);
  p = and_left(p, fcd);
  p = and_left(p, fbcd);
  return and_left(p, Formula::conjunction(F(from.a), fbcd));
}

const char* kMatrixVars[4] = {"a", "b", "c", "d"};

Entries matrix_vars() {
  return {Term::variable("a"), Term::variable("b"), Term::variable("c"), Term::variable("d")};
}

/// ψ(k) = ∀a∀b∀c∀d(φ(M) → φ(M^k)) with M = (a b; c d).
Formula psi(const Term& k) {
  const Entries m = matrix_vars();
  Formula f = Formula::implication(phi(m), phi(matrix_power_terms(m, k)));
  for (int i = 3; i >= 0; --i) f = Formula::forall(kMatrixVars[i], f);
  return f;
}

/// Instantiates ψ(k)'s four quantifiers with the given entries; returns the
/// chain of formulas from ψ(k) down to the instance.
std::vector<Formula> psi_chain(const Formula& q, const Entries& e) {
  std::vector<Formula> chain{q};
  for (const Term& t : {e.a, e.b, e.c, e.d}) chain.push_back(instantiate_body(chain.back(), t));
  return chain;
}

/// Adds the four ForallLeft steps turning chain.back() into chain.front().
Proof forall_left_chain(Proof p, const std::vector<Formula>& chain, const Entries& e) {
  const Term ts[4] = {e.a, e.b, e.c, e.d};
  for (int i = 3; i >= 0; --i) p = forall_left(p, chain[static_cast<std::size_t>(i)], ts[i]);
  return p;
}

Proof forall_right_chain(Proof p, const Formula& psi_k) {
  std::vector<Formula> levels{psi_k};
  for (int i = 0; i < 3; ++i) levels.push_back(levels.back().body());
  for (int i = 3; i >= 0; --i) p = forall_right(p, levels[static_cast<std::size_t>(i)], kMatrixVars[i]);
  return p;
}

/// ⊢ ψ(2): 59 lines.
Proof psi_base(const Theory& th) {
  const Entries m = matrix_vars();
  const Entries m2 = matrix_power_terms(m, lit(2));
  Proof p = matrix_square_lemma(th, m, m2);
  p = implies_right(p, Formula::implication(phi(m), phi(m2)));
  return forall_right_chain(p, psi(lit(2)));
}

/// ψ(k) ⊢ ψ(k2) where k2 = k²: 38 lines.
Proof psi_step(const Theory& th, const Term& k, const Term& k2) {
  const Entries m = matrix_vars();
  const Entries n = matrix_power_terms(m, k);
  const Entries nk = matrix_power_terms(n, k);
  const Entries m2 = matrix_power_terms(m, k2);
  const Formula psi_k = psi(k);
  const auto at_m = psi_chain(psi_k, m);
  const auto at_n = psi_chain(psi_k, n);
  Proof p = implies_left(logical_axiom(phi(m)), logical_axiom(phi(n)), at_m.back());
  p = implies_left(p, logical_axiom(phi(nk)), at_n.back());
  p = cut(p, phi_rename(th, nk, m2), phi(nk));
  p = forall_left_chain(p, at_n, n);
  p = forall_left_chain(p, at_m, m);
  p = contract_left(p, psi_k);
  p = implies_right(p, Formula::implication(phi(m), phi(m2)));
  return forall_right_chain(p, psi(k2));
}

void require_invertible(const Mat2& a) {
  if (a.det() == 0) throw std::invalid_argument("matrix has zero determinant");
}

/// ⊢ φ(A^{2^n}) with literal entries.
Proof matrix_squaring_proof(const Theory& th, const Mat2& a, std::size_t n) {
  Proof p = phi_literal_proof(th, a);
  Mat2 m = a;
  for (std::size_t j = 0; j < n; ++j) {
    const Mat2 next = mat_mul(m, m);
    p = cut(p, matrix_square_lemma(th, literal_entries(m), literal_entries(next)), matrix_phi(m));
    m = next;
  }
  return p;
}

}  // namespace

GenReport gen_matrix_power(const Mat2& a, std::size_t n, MatrixMode mode) {
  require_invertible(a);
  const Theory th = rational_feasibility();
  if (mode == MatrixMode::Squaring) {
    return finish(th, matrix_squaring_proof(th, a, n), mat_pow(a, pow2_int(n)));
  }
  Proof closure = psi_base(th);
  for (std::size_t j = 0; j < n; ++j) {
    const Term k = double_exponent(j, false);
    closure = cut(closure, psi_step(th, k, double_exponent(j + 1, false)), psi(k));
  }
  const Term k = double_exponent(n, false);
  const Entries lits = literal_entries(a);
  const Entries target = matrix_power_terms(lits, k);
  const auto chain = psi_chain(psi(k), lits);
  Proof p = implies_left(logical_axiom(phi(lits)), logical_axiom(phi(target)), chain.back());
  p = cut(phi_literal_proof(th, a), p, phi(lits));
  p = forall_left_chain(p, chain, lits);
  p = cut(closure, p, psi(k));
  std::optional<SemanticValue> v;
  if (n <= 4) v = mat_pow(a, pow2_int(std::size_t{1} << n));
  return finish(th, p, v);
}

GenReport gen_rational_orbit(const Mat2& a, const ExtRational& x, std::size_t n) {
  require_invertible(a);
  if (x.is_infinite()) throw UndefinedOperation("the orbit start must be finite");
  const Theory th = rational_feasibility();
  const Mat2 m = mat_pow(a, pow2_int(n));
  const Entries e = literal_entries(m);
  const Term xt = rational_literal(x.value());
  const BigRational den = m.c * x.value() + m.d;
  if (den == 0) throw UndefinedOperation("recip(0) in the Mobius step: c*x + d = 0");
  const ExtRational value = mobius_apply(m, x);

  // F(a), F(x), F(b), F(c), F(x), F(d) ⊢ F((a*x + b) * recip(c*x + d)).
  const Term ax = app("*", {e.a, xt});
  const Term axb = app("+", {ax, e.b});
  const Term cx = app("*", {e.c, xt});
  const Term cxd = app("+", {cx, e.d});
  const Term rc = app("recip", {cxd});
  const Term q = app("*", {axb, rc});
  Proof num = cut(leaf(th, "F:times", {{"x", e.a}, {"y", xt}}), leaf(th, "F:plus", {{"x", ax}, {"y", e.b}}), F(ax));
  Proof den_p = cut(leaf(th, "F:times", {{"x", e.c}, {"y", xt}}), leaf(th, "F:plus", {{"x", cx}, {"y", e.d}}), F(cx));
  den_p = cut(den_p, leaf(th, "F:recip", {{"x", cxd}}), F(cxd));
  Proof p = cut(num, leaf(th, "F:times", {{"x", axb}, {"y", rc}}), F(axb));
  p = cut(den_p, p, F(rc));
  p = contract_left(p, F(xt));
  p = rename(th, p, q, rational_literal(value.value()));
  const Formula cd = Formula::conjunction(F(e.c), F(e.d));
  const Formula bcd = Formula::conjunction(F(e.b), cd);
  p = and_left(p, cd);
  p = and_left(p, bcd);
  p = and_left(p, Formula::conjunction(F(e.a), bcd));
  p = cut(matrix_squaring_proof(th, a, n), p, matrix_phi(m));
  p = cut(rational_literal_proof(th, x.value()), p, F(xt));
  return finish(th, p, value);
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"unary",       "geometric", "square-cut",   "quantifier",
                                              "group-power", "distorted", "matrix-power", "rational-orbit"};
  return names;
}

GenReport generate(std::string_view name, std::size_t n, const GenOptions& opts) {
  auto require_theory = [&](std::string_view expected) {
    if (!opts.theory.empty() && opts.theory != expected) {
      throw std::invalid_argument("generator " + std::string(name) + " runs in theory " + std::string(expected));
    }
  };
  if (name == "unary") return require_theory("arith"), gen_unary(n);
  if (name == "geometric") return require_theory("arith"), gen_geometric(n);
  if (name == "square-cut") return require_theory("arith"), gen_square_cut(n);
  if (name == "quantifier") return require_theory("arith"), gen_quantifier(n);
  if (name == "distorted") return require_theory("group:bs12"), gen_distorted(n);
  if (name == "matrix-power") return require_theory("rat"), gen_matrix_power(opts.matrix, n, opts.matrix_mode);
  if (name == "rational-orbit") return require_theory("rat"), gen_rational_orbit(opts.matrix, opts.x, n);
  if (name == "group-power") {
    const Theory th = theory_from_selector(opts.theory.empty() ? "group:free:" + opts.generator_symbol : opts.theory);
    return gen_group_power(th, opts.generator_symbol, n, opts.power_mode);
  }
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

}  // namespace feaslab
