#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "feaslab/term.hpp"

namespace feaslab {

enum class FormulaKind : std::uint8_t { Atom, Not, And, Or, Implies, Forall, Exists };

struct FormulaNode;

/// Handle to a hash-consed formula; see Term for the sharing contract.
class Formula {
 public:
  Formula() = default;

  static Formula atom(std::string_view predicate, std::vector<Term> args);
  static Formula equals(const Term& lhs, const Term& rhs) { return atom("=", {lhs, rhs}); }
  static Formula negation(const Formula& f);
  static Formula conjunction(const Formula& a, const Formula& b);
  static Formula disjunction(const Formula& a, const Formula& b);
  static Formula implication(const Formula& a, const Formula& b);
  static Formula forall(std::string_view var, const Formula& body);
  static Formula exists(std::string_view var, const Formula& body);

  [[nodiscard]] bool is_null() const { return node_ == nullptr; }
  [[nodiscard]] FormulaKind kind() const;
  [[nodiscard]] bool is_atom() const { return kind() == FormulaKind::Atom; }
  [[nodiscard]] bool is_equality() const;

  /// Predicate symbol of an atom.
  [[nodiscard]] const std::string& predicate() const;
  [[nodiscard]] std::span<const Term> args() const;
  /// Children of a connective: one for Not, two for binary connectives.
  [[nodiscard]] const Formula& left() const;
  [[nodiscard]] const Formula& right() const;
  /// Bound variable and body of a quantifier.
  [[nodiscard]] const std::string& bound_var() const;
  [[nodiscard]] const Formula& body() const { return left(); }

  [[nodiscard]] std::uint64_t id() const;
  [[nodiscard]] const std::vector<std::string>& free_variables() const;
  [[nodiscard]] bool has_free(std::string_view var) const;
  [[nodiscard]] const FormulaNode* node() const { return node_; }

  friend bool operator==(const Formula& a, const Formula& b) { return a.node_ == b.node_; }
  friend bool operator<(const Formula& a, const Formula& b) { return a.id() < b.id(); }

 private:
  explicit Formula(const FormulaNode* n) : node_(n) {}
  friend class FormulaTable;
  const FormulaNode* node_ = nullptr;
};

struct FormulaNode {
  FormulaKind kind;
  std::string symbol;  // predicate or bound variable
  std::vector<Term> args;
  std::vector<Formula> children;
  std::uint64_t id;
  std::size_t hash;
  std::vector<std::string> free_vars;
};

/// Capture-avoiding substitution of `replacement` for the free occurrences of
/// `var`. Bound variables that would capture a free variable of the
/// replacement are renamed to fresh names.
Formula substitute(const Formula& f, std::string_view var, const Term& replacement);

/// First name of the form `<base>_<k>` (k = 1, 2, ...) for which `taken` is false.
std::string fresh_variable(std::string_view base, const std::function<bool(std::string_view)>& taken);

/// Distinct formula and term nodes reachable from the roots.
std::size_t dag_node_count(std::span<const Formula> roots);
inline std::size_t dag_node_count(const Formula& f) {
  return dag_node_count(std::span<const Formula>(&f, 1));
}
BigInt tree_size(const Formula& f);

/// Nesting depth of connectives and quantifiers; atoms have degree 0.
int logical_degree(const Formula& f);

}  // namespace feaslab

template <>
struct std::hash<feaslab::Formula> {
  std::size_t operator()(const feaslab::Formula& f) const noexcept {
    return std::hash<const void*>{}(f.node());
  }
};
