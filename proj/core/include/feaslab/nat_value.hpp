#pragma once

#include <memory>
#include <optional>
#include <string>

#include "feaslab/bignum.hpp"

namespace feaslab {

/// Default cap on the bit length of an exactly expanded natural.
inline constexpr std::size_t kDefaultBitBudget = std::size_t{1} << 24;

/// A natural number that is either held exactly or, when its expansion would
/// exceed the bit budget, as base^exponent with the smallest possible base.
///
/// Canonical form: a value is exact iff its bit length fits the budget it was
/// built with, so two values built under the same budget are equal iff their
/// representations are equal.
class NatValue {
 public:
  NatValue() : exact_(0) {}
  NatValue(BigInt v) : exact_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  NatValue(unsigned long v) : exact_(v) {}       // NOLINT(google-explicit-constructor)

  static NatValue power(const NatValue& base, const NatValue& exponent,
                        std::size_t bit_budget = kDefaultBitBudget);

  [[nodiscard]] bool is_exact() const { return exact_.has_value(); }
  [[nodiscard]] const BigInt& exact() const { return *exact_; }
  [[nodiscard]] const BigInt& base() const { return base_; }
  [[nodiscard]] const NatValue& exponent() const { return *exponent_; }

  /// nullopt when the result cannot be represented (e.g. a sum of two
  /// unexpanded powers).
  [[nodiscard]] static std::optional<NatValue> add(const NatValue& a, const NatValue& b,
                                                   std::size_t bit_budget = kDefaultBitBudget);
  [[nodiscard]] static std::optional<NatValue> multiply(const NatValue& a, const NatValue& b,
                                                        std::size_t bit_budget = kDefaultBitBudget);

  /// Decimal for exact values, `b^(e)` otherwise.
  [[nodiscard]] std::string to_string() const;
  /// Tower descriptor such as "2^2^2^2" when the value is a pure tower of one
  /// base, else to_string().
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const NatValue& a, const NatValue& b);

 private:
  friend struct NatValueAccess;
  std::optional<BigInt> exact_;
  BigInt base_;
  std::shared_ptr<const NatValue> exponent_;
};

/// Smallest r with r^m = v for some m >= 1; returns {r, m}. v >= 2.
std::pair<BigInt, BigInt> perfect_power_root(const BigInt& v);

}  // namespace feaslab
