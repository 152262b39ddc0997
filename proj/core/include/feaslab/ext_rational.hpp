#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "feaslab/bignum.hpp"

namespace feaslab {

/// Raised by partial operations on the extended rationals.
class UndefinedOperation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of Q ∪ {∞}.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(BigRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ExtRational(long v) : value_(v) {}                    // NOLINT(google-explicit-constructor)
  static ExtRational infinity();

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  [[nodiscard]] bool is_zero() const { return !infinite_ && value_ == 0; }
  /// Finite value; throws UndefinedOperation on ∞.
  [[nodiscard]] const BigRational& value() const;

  /// "p/q", "p" or "inf".
  [[nodiscard]] std::string to_string() const;
  /// Accepts the to_string() forms; throws std::invalid_argument.
  static ExtRational parse(std::string_view text);

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }

 private:
  BigRational value_{0};
  bool infinite_ = false;
};

// Finite operands follow Q. With ∞ only these are defined:
// ∞·∞ = ∞, a·∞ = ∞ for a ≠ 0, 0·∞ = 0, a/∞ = 0 for finite a.
ExtRational add(const ExtRational& a, const ExtRational& b);
ExtRational sub(const ExtRational& a, const ExtRational& b);
ExtRational mul(const ExtRational& a, const ExtRational& b);
ExtRational div(const ExtRational& a, const ExtRational& b);
ExtRational neg(const ExtRational& a);
/// 1/a; 1/∞ = 0, 1/0 is undefined.
ExtRational recip(const ExtRational& a);

}  // namespace feaslab
