#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feaslab/bignum.hpp"

namespace feaslab {

/// One syllable g^k of a group word.
struct Letter {
  std::string gen;
  BigInt exp;
  friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == b.exp; }
};

/// A word as a list of syllables. Reduced words have no zero exponents and
/// no two adjacent syllables over the same generator.
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
/// Product of reduced words, reduced.
Word free_multiply(const Word& a, const Word& b);
Word free_inverse(const Word& w);
/// w^k for a reduced word; k may be negative.
Word free_power(const Word& w, const BigInt& k);
/// Total absolute exponent of a reduced word.
BigInt free_length(const Word& w);
/// "x^2 y x^-1", or "e" for the empty word.
std::string to_string(const Word& w);

/// Element (a, t) of BS(1,2) = Z[1/2] ⋊ Z with (a,t)(b,s) = (a + 2^t b, t + s).
/// x = (0, 1) and y = (1, 0).
class BSElement {
 public:
  BSElement() = default;
  BSElement(BigRational a, std::int64_t t);

  static BSElement x() { return BSElement(BigRational(0), 1); }
  static BSElement y() { return BSElement(BigRational(1), 0); }

  [[nodiscard]] const BigRational& a() const { return a_; }
  [[nodiscard]] std::int64_t t() const { return t_; }

  /// "(p/2^k, t)"; integers print without a denominator.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const BSElement& p, const BSElement& q) { return p.a_ == q.a_ && p.t_ == q.t_; }
  friend bool operator!=(const BSElement& p, const BSElement& q) { return !(p == q); }

 private:
  BigRational a_{0};
  std::int64_t t_ = 0;
};

BSElement bs_multiply(const BSElement& p, const BSElement& q);
BSElement bs_inverse(const BSElement& p);
/// p^k; throws std::domain_error when the shift exponent overflows.
BSElement bs_power(const BSElement& p, const BigInt& k);
/// Image of a word over {x, y} under x ↦ (0,1), y ↦ (1,0). Throws
/// std::invalid_argument on other generators.
BSElement bs_normalize(const Word& w);
bool bs_eq(const Word& a, const Word& b);

/// 2^t as an exact rational.
BigRational pow2(std::int64_t t);

}  // namespace feaslab
