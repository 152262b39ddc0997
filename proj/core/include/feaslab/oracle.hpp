#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "feaslab/evaluate.hpp"
#include "feaslab/proof.hpp"

namespace feaslab {

/// Lines charged for the constant 0, a successor step and a + or * step.
struct CostModel {
  std::uint64_t k_leaf = 1;
  std::uint64_t k_unary = 1;
  std::uint64_t k_binary = 1;
};

/// The kernel's accounting: F:zero is one line and each closure axiom adds
/// one line on top of its premises.
CostModel calibrated_cost_model();

inline constexpr std::uint64_t kDefaultOracleBound = 100'000;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CostTable {
  enum class Step : std::uint8_t { Leaf, Successor, Plus, Times };
  struct Entry {
    std::uint64_t cost = 0;
    Step step = Step::Leaf;
    std::uint64_t a = 0, b = 0;
  };
  std::uint64_t bound = 0;
  CostModel model;
  std::vector<Entry> entries;  // indexed by value 0..bound

  [[nodiscard]] std::uint64_t cost(std::uint64_t n) const { return entries.at(n).cost; }
  /// A cheapest construction term over 0, s, + and *.
  [[nodiscard]] Term construction(std::uint64_t n) const;
};

/// C(0) = k_leaf, C(n) = min(C(n-1) + k_unary, C(a) + C(b) + k_binary) over
/// a + b = n with a, b >= 1 and a * b = n with a, b >= 2.
/// Throws BoundExceeded when n exceeds max_bound.
CostTable min_tree_derivation(std::uint64_t n, const CostModel& model = calibrated_cost_model(),
                              std::uint64_t max_bound = kDefaultOracleBound);

/// Cut-free proof of F(t) for t built from 0, s, + and *, checked against
/// the arithmetic theory. Throws std::invalid_argument on other terms.
Proof construction_proof(const Term& t);

/// Smallest construction proof of F(t) with t denoting n, found by trying
/// every construction term in order of size. nullopt when none fits in
/// `budget` lines. Budgets above kMaxEnumerationLines are refused.
inline constexpr std::uint64_t kMaxEnumerationLines = 14;
std::optional<Proof> enumerate_min_proof(std::uint64_t n, std::uint64_t budget);

class RadiusExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distance from the identity in the Cayley graph over the generators and
/// their inverses, by breadth-first search. BS12 uses {x, y}.
std::size_t word_metric_distance(const GroupValue& target, Presentation presentation,
                                 const std::vector<std::string>& generators, std::size_t radius);

}  // namespace feaslab
