#include "feaslab/signature.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "feaslab/bignum.hpp"

namespace feaslab {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool canonical_rational(std::string_view s) {
  auto c = canonical_rational_literal(s);
  return c && *c == s;
}

// Long literals recur in every sequent of a proof; parsing them is costly.
bool canonical_rational_cached(std::string_view s) {
  if (s.size() <= 64) return canonical_rational(s);
  static std::mutex mutex;
  static std::unordered_map<std::string, bool> cache;
  std::string key(s);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const bool ok = canonical_rational(s);
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() >= 1024) cache.clear();
  cache.emplace(std::move(key), ok);
  return ok;
}

}  // namespace

bool Signature::is_constant(std::string_view s) const {
  return std::find(constants.begin(), constants.end(), s) != constants.end() || is_literal(s);
}

std::optional<int> Signature::function_arity(std::string_view s) const {
  for (const auto& [sym, arity] : functions) {
    if (sym == s) return arity;
  }
  return std::nullopt;
}

std::optional<int> Signature::predicate_arity(std::string_view s) const {
  for (const auto& [sym, arity] : predicates) {
    if (sym == s) return arity;
  }
  return std::nullopt;
}

bool Signature::is_literal(std::string_view s) const {
  switch (literals) {
    case LiteralMode::None:
    case LiteralMode::UnaryNumerals:
      return false;
    case LiteralMode::NaturalConstants: {
      auto c = canonical_natural_literal(s);
      return c && *c == s;
    }
    case LiteralMode::RationalConstants: return canonical_rational_cached(s);
  }
  return false;
}

void Signature::validate() const {
  std::set<std::string> seen;
  auto add = [&](const std::string& s) {
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate symbol '" + s + "' in signature " + name);
  };
  for (const auto& c : constants) add(c);
  for (const auto& [f, a] : functions) {
    add(f);
    if (a < 1) throw std::invalid_argument("function '" + f + "' must have arity >= 1");
  }
  for (const auto& [p, a] : predicates) {
    add(p);
    if (a < 1) throw std::invalid_argument("predicate '" + p + "' must have arity >= 1");
  }
}

Signature arithmetic_signature() {
  Signature s;
  s.name = "arith";
  s.constants = {"0"};
  s.functions = {{"s", 1}, {"+", 2}, {"*", 2}, {"exp", 2}};
  s.predicates = {{"F", 1}, {"=", 2}};
  s.literals = LiteralMode::UnaryNumerals;
  return s;
}

Signature group_signature(const std::vector<std::string>& generators) {
  Signature s;
  s.name = "group";
  s.constants = {"e"};
  for (const auto& g : generators) s.constants.push_back(g);
  s.functions = {{"*", 2}, {"inv", 1}, {"pow", 2}, {"exp", 2}};
  s.predicates = {{"F", 1}, {"T", 1}, {"=", 2}};
  s.literals = LiteralMode::NaturalConstants;
  s.validate();
  return s;
}

Signature rational_signature() {
  Signature s;
  s.name = "rat";
  s.constants = {"inf"};
  s.functions = {{"+", 2},    {"*", 2},    {"neg", 1},  {"recip", 1}, {"exp", 2},
                 {"mp11", 5}, {"mp12", 5}, {"mp21", 5}, {"mp22", 5}};
  s.predicates = {{"F", 1}, {"=", 2}};
  s.literals = LiteralMode::RationalConstants;
  return s;
}

std::optional<std::string> canonical_natural_literal(std::string_view text) {
  if (!all_digits(text)) return std::nullopt;
  BigInt v{std::string(text)};
  return v.str();
}

std::optional<std::string> canonical_rational_literal(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  BigInt d{std::string(den)};
  if (d == 0) return std::nullopt;
  BigRational q(BigInt(std::string(num)), d);
  if (negative) q = -q;
  return q.str();
}

std::optional<std::string> check_well_formed(const Term& t, const Signature& sig) {
  std::unordered_set<const TermNode*> seen;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term u = stack.back();
    stack.pop_back();
    if (!seen.insert(u.node()).second) continue;
    switch (u.kind()) {
      case TermKind::Variable:
        if (sig.is_constant(u.symbol()) || sig.function_arity(u.symbol()))
          return "variable name '" + u.symbol() + "' clashes with a signature symbol";
        break;
      case TermKind::Constant:
        if (!sig.is_constant(u.symbol())) return "unknown constant '" + u.symbol() + "'";
        break;
      case TermKind::Application: {
        auto arity = sig.function_arity(u.symbol());
        if (!arity) return "unknown function symbol '" + u.symbol() + "'";
        if (static_cast<std::size_t>(*arity) != u.args().size())
          return "arity mismatch for '" + u.symbol() + "'";
        for (const auto& a : u.args()) stack.push_back(a);
        break;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_well_formed(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto arity = sig.predicate_arity(f.predicate());
      if (!arity) return "unknown predicate '" + f.predicate() + "'";
      if (static_cast<std::size_t>(*arity) != f.args().size())
        return "arity mismatch for predicate '" + f.predicate() + "'";
      for (const auto& a : f.args()) {
        if (auto err = check_well_formed(a, sig)) return err;
      }
      return std::nullopt;
    }
    case FormulaKind::Not:
      return check_well_formed(f.left(), sig);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      if (sig.is_constant(f.bound_var())) return "bound variable clashes with constant '" + f.bound_var() + "'";
      return check_well_formed(f.body(), sig);
    default:
      if (auto err = check_well_formed(f.left(), sig)) return err;
      return check_well_formed(f.right(), sig);
  }
}

}  // namespace feaslab
