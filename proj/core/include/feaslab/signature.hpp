#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "feaslab/formula.hpp"
#include "feaslab/term.hpp"

namespace feaslab {

/// How decimal literals in source text are read.
enum class LiteralMode {
  None,
  /// `7` is sugar for the successor chain s(s(...s(0)...)).
  UnaryNumerals,
  /// `7` is an interned constant denoting the natural number 7.
  NaturalConstants,
  /// `7`, `-3`, `5/2` are interned constants denoting exact rationals.
  RationalConstants,
};

struct Signature {
  std::string name;
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, int>> functions;
  std::vector<std::pair<std::string, int>> predicates;
  LiteralMode literals = LiteralMode::None;

  [[nodiscard]] bool is_constant(std::string_view s) const;
  [[nodiscard]] std::optional<int> function_arity(std::string_view s) const;
  [[nodiscard]] std::optional<int> predicate_arity(std::string_view s) const;
  /// True when `s` is a literal constant under this signature's literal mode.
  [[nodiscard]] bool is_literal(std::string_view s) const;

  /// Throws std::invalid_argument on a duplicate symbol or an arity < 1.
  void validate() const;
};

/// 0, s, +, *, exp; predicates F and =. Decimal numerals are successor chains.
Signature arithmetic_signature();
/// e and the named generators; * (composition), inv, pow; predicates F, T, =.
/// The second argument of pow is an exponent written with natural literals
/// and exp.
Signature group_signature(const std::vector<std::string>& generators);
/// 0, 1, inf; +, *, neg, recip, exp and the matrix-power entries mp11..mp22;
/// predicates F and =. Rational literals are constants.
Signature rational_signature();

/// Canonical spelling of a rational literal ("4/2" -> "2", "-0" -> "0"), or
/// nullopt when `text` is not a literal.
std::optional<std::string> canonical_rational_literal(std::string_view text);
std::optional<std::string> canonical_natural_literal(std::string_view text);

/// Checks symbols and arities; returns an error message or nullopt.
std::optional<std::string> check_well_formed(const Term& t, const Signature& sig);
std::optional<std::string> check_well_formed(const Formula& f, const Signature& sig);

}  // namespace feaslab
