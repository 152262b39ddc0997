#pragma once

#include <string>
#include <string_view>

#include "feaslab/bignum.hpp"
#include "feaslab/ext_rational.hpp"

namespace feaslab {

/// Exact 2×2 rational matrix (a b; c d).
struct Mat2 {
  BigRational a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {}; }
  static Mat2 of(long a, long b, long c, long d) {
    return Mat2{BigRational(a), BigRational(b), BigRational(c), BigRational(d)};
  }

  [[nodiscard]] BigRational det() const { return a * d - b * c; }
  [[nodiscard]] BigRational trace() const { return a + d; }
  [[nodiscard]] bool is_symmetric() const { return b == c; }
  [[nodiscard]] bool is_integer() const;

  /// "(a b; c d)".
  [[nodiscard]] std::string to_string() const;
  /// Accepts "(a b; c d)" with rational literal entries; throws std::invalid_argument.
  static Mat2 parse(std::string_view text);

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

Mat2 mat_mul(const Mat2& x, const Mat2& y);
/// x^n by repeated squaring.
Mat2 mat_pow(const Mat2& x, const BigInt& n);
/// Inverse; throws std::invalid_argument when singular.
Mat2 mat_inverse(const Mat2& x);

/// x ↦ (ax + b)/(cx + d) on Q ∪ {∞}, with ∞ ↦ a/c. Throws
/// std::invalid_argument when det = 0.
ExtRational mobius_apply(const Mat2& m, const ExtRational& x);

}  // namespace feaslab
