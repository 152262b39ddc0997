#include "feaslab/evaluate.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "feaslab/mat2.hpp"
#include "feaslab/signature.hpp"
#include "feaslab/syntax.hpp"

namespace feaslab {

namespace {

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

[[noreturn]] void foreign(const Term& t) {
  throw std::invalid_argument("cannot evaluate '" + to_string(t) + "'");
}

NatValue nat_or_throw(std::optional<NatValue> v, const Term& t) {
  if (!v) throw std::domain_error("value of '" + to_string(t) + "' is not representable");
  return *v;
}

}  // namespace

NatValue eval_nat(const Term& root, std::size_t bit_budget) {
  std::unordered_map<const TermNode*, NatValue> memo;
  auto go = [&](auto&& self, const Term& t) -> NatValue {
    if (auto it = memo.find(t.node()); it != memo.end()) return it->second;
    NatValue v;
    switch (t.kind()) {
      case TermKind::Variable:
        throw std::invalid_argument("eval_nat: open term (variable " + t.symbol() + ")");
      case TermKind::Constant:
        if (!is_digits(t.symbol())) foreign(t);
        v = NatValue(BigInt(t.symbol()));
        break;
      case TermKind::Application: {
        const std::string& f = t.symbol();
        if (f == "s" && t.args().size() == 1) {
          v = nat_or_throw(NatValue::add(self(self, t.arg(0)), NatValue(1UL), bit_budget), t);
        } else if (f == "+" && t.args().size() == 2) {
          v = nat_or_throw(NatValue::add(self(self, t.arg(0)), self(self, t.arg(1)), bit_budget), t);
        } else if (f == "*" && t.args().size() == 2) {
          v = nat_or_throw(NatValue::multiply(self(self, t.arg(0)), self(self, t.arg(1)), bit_budget), t);
        } else if (f == "exp" && t.args().size() == 2) {
          v = NatValue::power(self(self, t.arg(0)), self(self, t.arg(1)), bit_budget);
        } else {
          foreign(t);
        }
        break;
      }
    }
    memo.emplace(t.node(), v);
    return v;
  };
  return go(go, root);
}

BigInt eval_exact_nat(const Term& t) {
  NatValue v = eval_nat(t);
  if (!v.is_exact()) throw std::domain_error("value of '" + to_string(t) + "' is too large to expand");
  return v.exact();
}

namespace {

BigInt natural_exponent(const ExtRational& k) {
  if (k.is_infinite() || denominator(k.value()) != 1 || k.value() < 0) {
    throw UndefinedOperation("exponent " + k.to_string() + " is not a natural number");
  }
  return numerator(k.value());
}

ExtRational ext_pow(const ExtRational& base, const BigInt& k) {
  ExtRational result(1L);
  ExtRational b = base;
  BigInt n = k;
  while (n > 0) {
    if (bit_test(n, 0)) result = mul(result, b);
    n >>= 1;
    if (n > 0) b = mul(b, b);
  }
  return result;
}

int mp_index(const std::string& f) {
  if (f == "mp11") return 0;
  if (f == "mp12") return 1;
  if (f == "mp21") return 2;
  if (f == "mp22") return 3;
  return -1;
}

const BigRational& entry(const Mat2& m, int i) {
  switch (i) {
    case 0: return m.a;
    case 1: return m.b;
    case 2: return m.c;
    default: return m.d;
  }
}

// Literal constants are interned, so their values can be cached by node.
std::optional<BigRational> literal_value(const Term& t) {
  static std::mutex mutex;
  static std::unordered_map<const TermNode*, std::optional<BigRational>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(t.node()); it != cache.end()) return it->second;
  }
  std::optional<BigRational> v;
  if (auto c = canonical_rational_literal(t.symbol())) v = BigRational(*c);
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() >= 4096) cache.clear();
  cache.emplace(t.node(), v);
  return v;
}

// Proof checking asks for the same large powers many times.
Mat2 cached_mat_pow(const Mat2& m, const BigInt& k) {
  static std::mutex mutex;
  static std::map<std::string, Mat2> cache;
  const std::string key = m.to_string() + "^" + k.str();
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Mat2 r = mat_pow(m, k);
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() >= 64) cache.clear();
  cache.emplace(key, r);
  return r;
}

}  // namespace

ExtRational eval_rational(const Term& root) {
  std::unordered_map<const TermNode*, ExtRational> memo;
  auto go = [&](auto&& self, const Term& t) -> ExtRational {
    if (auto it = memo.find(t.node()); it != memo.end()) return it->second;
    ExtRational v;
    switch (t.kind()) {
      case TermKind::Variable:
        throw std::invalid_argument("eval_rational: open term (variable " + t.symbol() + ")");
      case TermKind::Constant:
        if (t.symbol() == "inf") {
          v = ExtRational::infinity();
        } else if (auto c = literal_value(t)) {
          v = ExtRational(*c);
        } else {
          foreign(t);
        }
        break;
      case TermKind::Application: {
        const std::string& f = t.symbol();
        if (f == "+") {
          v = add(self(self, t.arg(0)), self(self, t.arg(1)));
        } else if (f == "*") {
          v = mul(self(self, t.arg(0)), self(self, t.arg(1)));
        } else if (f == "neg") {
          v = neg(self(self, t.arg(0)));
        } else if (f == "recip") {
          v = recip(self(self, t.arg(0)));
        } else if (f == "exp") {
          v = ext_pow(self(self, t.arg(0)), natural_exponent(self(self, t.arg(1))));
        } else if (int i = mp_index(f); i >= 0 && t.args().size() == 5) {
          Mat2 m{self(self, t.arg(0)).value(), self(self, t.arg(1)).value(), self(self, t.arg(2)).value(),
                 self(self, t.arg(3)).value()};
          v = ExtRational(entry(cached_mat_pow(m, natural_exponent(self(self, t.arg(4)))), i));
        } else {
          foreign(t);
        }
        break;
      }
    }
    memo.emplace(t.node(), v);
    return v;
  };
  return go(go, root);
}

Word term_to_word(const Term& root) {
  std::unordered_map<const TermNode*, Word> memo;
  auto go = [&](auto&& self, const Term& t) -> Word {
    if (auto it = memo.find(t.node()); it != memo.end()) return it->second;
    Word w;
    switch (t.kind()) {
      case TermKind::Variable:
        w = Word{Letter{t.symbol(), 1}};
        break;
      case TermKind::Constant:
        if (is_digits(t.symbol())) foreign(t);
        if (t.symbol() != "e") w = Word{Letter{t.symbol(), 1}};
        break;
      case TermKind::Application: {
        const std::string& f = t.symbol();
        if (f == "*") {
          w = free_multiply(self(self, t.arg(0)), self(self, t.arg(1)));
        } else if (f == "inv") {
          w = free_inverse(self(self, t.arg(0)));
        } else if (f == "pow") {
          w = free_power(self(self, t.arg(0)), eval_exact_nat(t.arg(1)));
        } else {
          foreign(t);
        }
        break;
      }
    }
    memo.emplace(t.node(), w);
    return w;
  };
  return go(go, root);
}

GroupValue eval_group(const Term& root, Presentation p) {
  if (!root.is_closed()) throw std::invalid_argument("eval_group: open term");
  if (p == Presentation::Free) return term_to_word(root);
  std::unordered_map<const TermNode*, BSElement> memo;
  auto go = [&](auto&& self, const Term& t) -> BSElement {
    if (auto it = memo.find(t.node()); it != memo.end()) return it->second;
    BSElement v;
    if (t.is_constant()) {
      if (t.symbol() == "x") {
        v = BSElement::x();
      } else if (t.symbol() == "y") {
        v = BSElement::y();
      } else if (t.symbol() != "e") {
        foreign(t);
      }
    } else {
      const std::string& f = t.symbol();
      if (f == "*") {
        v = bs_multiply(self(self, t.arg(0)), self(self, t.arg(1)));
      } else if (f == "inv") {
        v = bs_inverse(self(self, t.arg(0)));
      } else if (f == "pow") {
        v = bs_power(self(self, t.arg(0)), eval_exact_nat(t.arg(1)));
      } else {
        foreign(t);
      }
    }
    memo.emplace(t.node(), v);
    return v;
  };
  return go(go, root);
}

std::string to_string(const GroupValue& v) {
  if (const auto* w = std::get_if<Word>(&v)) return to_string(*w);
  return std::get<BSElement>(v).to_string();
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "equal";
    case Verdict::Unequal: return "unequal";
    default: return "undecided";
  }
}

// ---------------------------------------------------------------------------
// Arithmetic: closed terms by value, open terms as atom^exponent monomials.

namespace {

struct Monomial {
  Term atom;  // null for a closed value
  NatValue exponent;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.atom == b.atom && a.exponent == b.exponent;
  }
};

Monomial arith_normal(const Term& t, std::unordered_map<const TermNode*, Monomial>& memo) {
  if (auto it = memo.find(t.node()); it != memo.end()) return it->second;
  Monomial m{t, NatValue(1UL)};
  if (t.is_closed()) {
    try {
      m = Monomial{Term(), eval_nat(t)};
    } catch (const std::exception&) {
    }
  } else if (t.is_application() && t.args().size() == 2 && (t.symbol() == "exp" || t.symbol() == "*")) {
    Monomial u = arith_normal(t.arg(0), memo);
    Monomial v = arith_normal(t.arg(1), memo);
    if (t.symbol() == "exp" && !u.atom.is_null() && v.atom.is_null()) {
      if (auto e = NatValue::multiply(u.exponent, v.exponent)) m = Monomial{u.atom, *e};
    } else if (t.symbol() == "*" && !u.atom.is_null() && u.atom == v.atom) {
      if (auto e = NatValue::add(u.exponent, v.exponent)) m = Monomial{u.atom, *e};
    }
  }
  memo.emplace(t.node(), m);
  return m;
}

}  // namespace

Verdict arith_equal(const Term& s, const Term& t) {
  if (s == t) return Verdict::Equal;
  std::unordered_map<const TermNode*, Monomial> memo;
  const Monomial a = arith_normal(s, memo);
  const Monomial b = arith_normal(t, memo);
  if (a == b) return Verdict::Equal;
  if (a.atom.is_null() && b.atom.is_null()) {
    // Canonical representations under one budget: different means different.
    return Verdict::Unequal;
  }
  return Verdict::Undecided;
}

Verdict group_equal(const Term& s, const Term& t, Presentation p) {
  if (s == t) return Verdict::Equal;
  try {
    if (s.is_closed() && t.is_closed()) {
      return eval_group(s, p) == eval_group(t, p) ? Verdict::Equal : Verdict::Unequal;
    }
    // Free reduction is sound in every presentation.
    if (term_to_word(s) == term_to_word(t)) return Verdict::Equal;
  } catch (const std::exception&) {
  }
  return Verdict::Undecided;
}

// ---------------------------------------------------------------------------
// Rationals: closed terms by value, open terms as polynomials over Q whose
// atoms are variables and irreducible subterms.

namespace {

using Mono = std::map<std::string, int>;
using Poly = std::map<Mono, BigRational>;

void poly_add_into(Poly& acc, const Mono& m, const BigRational& c) {
  auto [it, fresh] = acc.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  } else if (c == 0) {
    acc.erase(it);
  }
}

Poly poly_const(const BigRational& c) {
  Poly p;
  poly_add_into(p, Mono{}, c);
  return p;
}

Poly poly_atom(const std::string& key) { return Poly{{Mono{{key, 1}}, BigRational(1)}}; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [m, c] : b) poly_add_into(out, m, c);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Mono m = ma;
      for (const auto& [k, d] : mb) m[k] += d;
      poly_add_into(out, m, BigRational(ca * cb));
    }
  }
  return out;
}

Poly poly_scale(const Poly& a, const BigRational& c) {
  Poly out;
  for (const auto& [m, v] : a) poly_add_into(out, m, BigRational(v * c));
  return out;
}

Poly poly_pow(const Poly& a, unsigned k) {
  Poly out = poly_const(BigRational(1));
  for (unsigned i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

std::optional<BigRational> poly_constant(const Poly& p) {
  if (p.empty()) return BigRational(0);
  if (p.size() == 1 && p.begin()->first.empty()) return p.begin()->second;
  return std::nullopt;
}

std::string poly_key(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p) {
    if (!out.empty()) out += " + ";
    out += c.str();
    for (const auto& [atom, d] : m) out += "*{" + atom + "}^" + std::to_string(d);
  }
  return out;
}

/// An atom standing for entry ij of M^k with M open.
struct MpAtom {
  int ij;
  std::array<Poly, 4> m;
  std::string mkey;
  BigInt k;
};

class RationalNormalizer {
 public:
  explicit RationalNormalizer(bool expand_small) : expand_small_(expand_small) {}

  std::optional<Poly> normal(const Term& t) {
    if (auto it = memo_.find(t.node()); it != memo_.end()) return it->second;
    std::optional<Poly> p = compute(t);
    memo_.emplace(t.node(), p);
    return p;
  }

 private:
  static constexpr unsigned kSmallPower = 8;

  std::optional<Poly> compute(const Term& t) {
    if (t.is_closed()) {
      try {
        ExtRational v = eval_rational(t);
        if (v.is_infinite()) return std::nullopt;
        return poly_const(v.value());
      } catch (const std::exception&) {
        return std::nullopt;
      }
    }
    if (t.is_variable()) return poly_atom("var:" + t.symbol());
    const std::string& f = t.symbol();
    if (f == "+" || f == "*") {
      auto a = normal(t.arg(0));
      auto b = normal(t.arg(1));
      if (!a || !b) return std::nullopt;
      return f == "+" ? poly_add(*a, *b) : poly_mul(*a, *b);
    }
    if (f == "neg") {
      auto a = normal(t.arg(0));
      if (!a) return std::nullopt;
      return poly_scale(*a, BigRational(-1));
    }
    if (f == "recip") {
      auto a = normal(t.arg(0));
      if (!a) return std::nullopt;
      return poly_atom("recip:" + poly_key(*a));
    }
    if (f == "exp") {
      auto a = normal(t.arg(0));
      auto k = closed_natural(t.arg(1));
      if (!a || !k) return std::nullopt;
      if (*k <= 64) return poly_pow(*a, static_cast<unsigned>(*k));
      return poly_atom("exp:" + poly_key(*a) + "^" + k->str());
    }
    if (int ij = mp_index(f); ij >= 0 && t.args().size() == 5) {
      std::array<Poly, 4> m;
      for (int i = 0; i < 4; ++i) {
        auto p = normal(t.arg(static_cast<std::size_t>(i)));
        if (!p) return std::nullopt;
        m[static_cast<std::size_t>(i)] = *p;
      }
      auto k = closed_natural(t.arg(4));
      if (!k) return std::nullopt;
      return matrix_power_entry(ij, m, *k);
    }
    return std::nullopt;
  }

  static std::optional<BigInt> closed_natural(const Term& t) {
    if (!t.is_closed()) return std::nullopt;
    try {
      return natural_exponent(eval_rational(t));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  // The four entries are the entries of one power N^j of an atom matrix.
  std::optional<std::pair<std::string, BigInt>> as_power(const std::array<Poly, 4>& m) {
    std::string base;
    BigInt j;
    for (int i = 0; i < 4; ++i) {
      const Poly& p = m[static_cast<std::size_t>(i)];
      if (p.size() != 1 || p.begin()->second != 1 || p.begin()->first.size() != 1) return std::nullopt;
      const auto& [key, deg] = *p.begin()->first.begin();
      if (deg != 1) return std::nullopt;
      auto it = atoms_.find(key);
      if (it == atoms_.end() || it->second.ij != i) return std::nullopt;
      if (i == 0) {
        base = it->second.mkey;
        j = it->second.k;
      } else if (it->second.mkey != base || it->second.k != j) {
        return std::nullopt;
      }
    }
    return std::make_pair(base, j);
  }

  Poly matrix_power_entry(int ij, const std::array<Poly, 4>& m, const BigInt& k) {
    bool closed = true;
    for (const auto& p : m) closed = closed && poly_constant(p).has_value();
    if (closed) {
      Mat2 a{*poly_constant(m[0]), *poly_constant(m[1]), *poly_constant(m[2]), *poly_constant(m[3])};
      return poly_const(entry(cached_mat_pow(a, k), ij));
    }
    if (auto nested = as_power(m)) {
      const MpAtom& inner = atoms_.at(m[0].begin()->first.begin()->first);
      return make_atom(ij, inner.m, nested->first, BigInt(nested->second * k));
    }
    return make_atom(ij, m, poly_key(m[0]) + " ; " + poly_key(m[1]) + " ; " + poly_key(m[2]) + " ; " + poly_key(m[3]), k);
  }

  Poly make_atom(int ij, const std::array<Poly, 4>& m, const std::string& mkey, const BigInt& k) {
    if (k <= 1 || (expand_small_ && k <= kSmallPower)) {
      std::array<Poly, 4> r{poly_const(BigRational(1)), Poly{}, Poly{}, poly_const(BigRational(1))};
      for (BigInt i = 0; i < k; ++i) {
        r = {poly_add(poly_mul(r[0], m[0]), poly_mul(r[1], m[2])), poly_add(poly_mul(r[0], m[1]), poly_mul(r[1], m[3])),
             poly_add(poly_mul(r[2], m[0]), poly_mul(r[3], m[2])), poly_add(poly_mul(r[2], m[1]), poly_mul(r[3], m[3]))};
      }
      return r[static_cast<std::size_t>(ij)];
    }
    static const char* names[] = {"mp11", "mp12", "mp21", "mp22"};
    std::string key = std::string(names[ij]) + "[" + mkey + "]^" + k.str();
    atoms_.emplace(key, MpAtom{ij, m, mkey, k});
    return poly_atom(key);
  }

  bool expand_small_;
  std::unordered_map<const TermNode*, std::optional<Poly>> memo_;
  std::map<std::string, MpAtom> atoms_;
};

}  // namespace

Verdict rational_equal(const Term& s, const Term& t) {
  if (s == t) return Verdict::Equal;
  if (s.is_closed() && t.is_closed()) {
    try {
      return eval_rational(s) == eval_rational(t) ? Verdict::Equal : Verdict::Unequal;
    } catch (const std::exception&) {
      return Verdict::Undecided;
    }
  }
  for (bool expand : {false, true}) {
    RationalNormalizer norm(expand);
    auto a = norm.normal(s);
    auto b = norm.normal(t);
    if (a && b && *a == *b) return Verdict::Equal;
  }
  return Verdict::Undecided;
}

}  // namespace feaslab
