#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "feaslab/generators.hpp"
#include "feaslab/proof.hpp"
#include "feaslab/theory.hpp"

namespace feaslab {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000;

/// A cut formula outside atoms, conjunctions, implications and universals.
class FragmentExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some intermediate proof grew past the line budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("cut elimination exceeded the node budget of " + std::to_string(budget)),
        budget_(budget) {}
  [[nodiscard]] std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// FEASLAB_NODE_BUDGET when set to a positive integer, else kDefaultNodeBudget.
std::uint64_t node_budget_from_env();

/// Cut-free proof of the same end sequent. Cuts are removed innermost first.
/// A proof without cuts is returned as is.
Proof eliminate_cuts(const Proof& p, const Theory& th, std::uint64_t budget = node_budget_from_env());

/// Substitutes t for the free occurrences of var throughout the proof,
/// renaming eigenvariables that would capture a variable of t.
Proof substitute_proof(const Proof& p, std::string_view var, const Term& t);

enum class BlowupStatus { Ok, BudgetExceeded, FragmentExceeded };
const char* status_name(BlowupStatus s);

struct BlowupRow {
  std::size_t n = 0;
  std::uint64_t lines_with_cuts = 0;
  /// 0 unless status is Ok.
  std::uint64_t lines_cut_free = 0;
  double ratio = 0.0;
  double wall_time_ms = 0.0;
  std::uint64_t cut_count = 0;
  /// Contractions in the cut-free proof.
  std::uint64_t contraction_count = 0;
  BlowupStatus status = BlowupStatus::Ok;
};

/// Called once per row with the generated proof and, when elimination
/// succeeded, the cut-free proof (else null).
using BlowupHook = std::function<void(const BlowupRow&, const GenReport&, const Proof* cut_free)>;

/// One row per n in [n_min, n_max]. Rows that exceed the budget are flagged.
std::vector<BlowupRow> blowup_report(std::string_view generator, std::size_t n_min, std::size_t n_max,
                                     const GenOptions& opts = {}, std::uint64_t budget = node_budget_from_env(),
                                     const BlowupHook& hook = {});
inline std::vector<BlowupRow> blowup_report(std::string_view generator, std::size_t n_max) {
  return blowup_report(generator, 1, n_max);
}

/// Header plus one line per row.
std::string blowup_csv(const std::vector<BlowupRow>& rows);

}  // namespace feaslab
