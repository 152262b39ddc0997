#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "feaslab/bignum.hpp"

namespace feaslab {

enum class TermKind : std::uint8_t { Variable, Constant, Application };

struct TermNode;

/// Handle to a hash-consed first-order term.
///
/// Terms are interned in a process-wide table, so two structurally equal
/// terms always share one node and compare equal by pointer. Nodes are never
/// freed; handles are trivially copyable and safe to share across threads.
class Term {
 public:
  Term() = default;

  static Term variable(std::string_view name);
  static Term constant(std::string_view symbol);
  static Term apply(std::string_view symbol, std::vector<Term> args);

  [[nodiscard]] bool is_null() const { return node_ == nullptr; }
  [[nodiscard]] TermKind kind() const;
  [[nodiscard]] bool is_variable() const { return kind() == TermKind::Variable; }
  [[nodiscard]] bool is_constant() const { return kind() == TermKind::Constant; }
  [[nodiscard]] bool is_application() const { return kind() == TermKind::Application; }

  /// Variable name, constant symbol or function symbol.
  [[nodiscard]] const std::string& symbol() const;
  [[nodiscard]] std::span<const Term> args() const;
  [[nodiscard]] const Term& arg(std::size_t i) const { return args()[i]; }

  /// Interning id; unique per structurally distinct term.
  [[nodiscard]] std::uint64_t id() const;
  [[nodiscard]] bool is_closed() const { return free_variables().empty(); }
  /// Sorted, duplicate-free.
  [[nodiscard]] const std::vector<std::string>& free_variables() const;
  [[nodiscard]] bool has_free(std::string_view var) const;

  [[nodiscard]] const TermNode* node() const { return node_; }

  friend bool operator==(const Term& a, const Term& b) { return a.node_ == b.node_; }
  friend bool operator<(const Term& a, const Term& b) { return a.id() < b.id(); }

 private:
  explicit Term(const TermNode* n) : node_(n) {}
  friend class TermTable;
  const TermNode* node_ = nullptr;
};

struct TermNode {
  TermKind kind;
  std::string symbol;
  std::vector<Term> args;
  std::uint64_t id;
  std::size_t hash;
  std::vector<std::string> free_vars;
};

/// Replaces every occurrence of `var` in `t` by `replacement`. Sharing in
/// `t` is preserved: each distinct subterm is rebuilt at most once.
Term substitute(const Term& t, std::string_view var, const Term& replacement);

/// Number of distinct nodes reachable from the given roots.
std::size_t dag_node_count(std::span<const Term> roots);
inline std::size_t dag_node_count(const Term& t) { return dag_node_count(std::span<const Term>(&t, 1)); }

/// Size of the term written out as a tree.
BigInt tree_size(const Term& t);

/// Number of interned term nodes created so far.
std::size_t interned_term_count();

}  // namespace feaslab

template <>
struct std::hash<feaslab::Term> {
  std::size_t operator()(const feaslab::Term& t) const noexcept {
    return std::hash<const void*>{}(t.node());
  }
};
