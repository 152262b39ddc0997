#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feaslab/formula.hpp"

namespace feaslab {

/// Two-sided sequent. Both sides are multisets: order is kept for display and
/// occurrence tracking but ignored by equality.
struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;

  [[nodiscard]] std::size_t size() const { return antecedent.size() + succedent.size(); }
  [[nodiscard]] bool has_free(std::string_view var) const;
  void collect_free_variables(std::vector<std::string>& out) const;
};

/// Multiset equality of formula lists.
bool same_multiset(std::span<const Formula> a, std::span<const Formula> b);
/// Multiset equality on both sides.
bool same_sequent(const Sequent& a, const Sequent& b);

/// `v` with one occurrence of `f` removed, or nullopt when absent.
std::optional<std::vector<Formula>> remove_one(std::span<const Formula> v, const Formula& f);

std::vector<Formula> concat(std::span<const Formula> a, std::span<const Formula> b);

}  // namespace feaslab
