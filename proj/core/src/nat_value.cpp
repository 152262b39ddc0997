#include "feaslab/nat_value.hpp"

#include <gmp.h>

#include <stdexcept>

namespace feaslab {

namespace {

std::size_t bit_length(const BigInt& v) {
  if (v <= 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(v)) + 1;
}

bool exact_root(const BigInt& v, unsigned long m, BigInt& out) {
  BigInt r;
  const int exact = mpz_root(r.backend().data(), v.backend().data(), m);
  if (exact != 0) out = r;
  return exact != 0;
}

NatValue make_power(const BigInt& root, const NatValue& exponent);

// Exact value or its canonical power form when it exceeds the budget.
std::optional<NatValue> canonical(const BigInt& v, std::size_t bit_budget) {
  if (bit_length(v) <= bit_budget) return NatValue(v);
  auto [r, m] = perfect_power_root(v);
  if (m == 1) return std::nullopt;
  return make_power(r, NatValue(m));
}

}  // namespace

struct NatValueAccess {
  static NatValue power_form(const BigInt& root, const NatValue& exponent);
};

namespace {
NatValue make_power(const BigInt& root, const NatValue& exponent) {
  return NatValueAccess::power_form(root, exponent);
}
}  // namespace

std::pair<BigInt, BigInt> perfect_power_root(const BigInt& v) {
  if (v < 2) throw std::invalid_argument("perfect_power_root needs v >= 2");
  if (mpz_perfect_power_p(v.backend().data()) == 0) return {v, 1};
  BigInt r = v;
  BigInt m = 1;
  // Strip prime-order roots until none is exact.
  for (unsigned long p = 2; bit_length(r) >= p; ++p) {
    bool prime = true;
    for (unsigned long d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        prime = false;
        break;
      }
    }
    if (!prime) continue;
    BigInt s;
    while (r >= 2 && exact_root(r, p, s)) {
      r = s;
      m *= p;
    }
    if (mpz_perfect_power_p(r.backend().data()) == 0) break;
  }
  return {r, m};
}

NatValue NatValueAccess::power_form(const BigInt& root, const NatValue& exponent) {
  NatValue v;
  v.exact_.reset();
  v.base_ = root;
  v.exponent_ = std::make_shared<const NatValue>(exponent);
  return v;
}

std::optional<NatValue> NatValue::add(const NatValue& a, const NatValue& b, std::size_t bit_budget) {
  if (a.is_exact() && b.is_exact()) return canonical(a.exact() + b.exact(), bit_budget);
  if (a.is_exact() && a.exact() == 0) return b;
  if (b.is_exact() && b.exact() == 0) return a;
  return std::nullopt;
}

std::optional<NatValue> NatValue::multiply(const NatValue& a, const NatValue& b, std::size_t bit_budget) {
  if (a.is_exact() && b.is_exact()) {
    const std::size_t bits = bit_length(a.exact()) + bit_length(b.exact());
    if (bits <= bit_budget + 1) return canonical(a.exact() * b.exact(), bit_budget);
    // Both factors must be powers of one root for the product to be representable.
    if (a.exact() < 2 || b.exact() < 2) return canonical(a.exact() * b.exact(), bit_budget);
    auto [ra, ma] = perfect_power_root(a.exact());
    auto [rb, mb] = perfect_power_root(b.exact());
    if (ra != rb) return std::nullopt;
    return make_power(ra, NatValue(BigInt(ma + mb)));
  }
  if (a.is_exact() && !b.is_exact()) return multiply(b, a, bit_budget);
  // a is a power form.
  if (b.is_exact()) {
    if (b.exact() == 0) return NatValue(0UL);
    if (b.exact() == 1) return a;
    auto [rb, mb] = perfect_power_root(b.exact());
    if (rb != a.base()) return std::nullopt;
    auto e = add(a.exponent(), NatValue(mb), bit_budget);
    if (!e) return std::nullopt;
    return make_power(a.base(), *e);
  }
  if (a.base() != b.base()) return std::nullopt;
  auto e = add(a.exponent(), b.exponent(), bit_budget);
  if (!e) return std::nullopt;
  return make_power(a.base(), *e);
}

NatValue NatValue::power(const NatValue& base, const NatValue& exponent, std::size_t bit_budget) {
  if (exponent.is_exact() && exponent.exact() == 0) return NatValue(1UL);
  if (base.is_exact() && base.exact() <= 1) return base;
  if (base.is_exact()) {
    const BigInt& b = base.exact();
    if (exponent.is_exact()) {
      const BigInt& e = exponent.exact();
      const BigInt bits = BigInt(bit_length(b) - 1) * e + 1;  // lower bound on bit length
      if (bits <= bit_budget) {
        BigInt r;
        mpz_pow_ui(r.backend().data(), b.backend().data(), static_cast<unsigned long>(e));
        if (bit_length(r) <= bit_budget) return NatValue(r);
      }
    }
    auto [root, m] = perfect_power_root(b);
    auto e = multiply(NatValue(m), exponent, bit_budget);
    if (!e) throw std::domain_error("exponent not representable");
    return make_power(root, *e);
  }
  auto e = multiply(base.exponent(), exponent, bit_budget);
  if (!e) throw std::domain_error("exponent not representable");
  return make_power(base.base(), *e);
}

bool operator==(const NatValue& a, const NatValue& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.base() == b.base() && a.exponent() == b.exponent();
}

std::string NatValue::to_string() const {
  if (is_exact()) return exact().str();
  const NatValue& e = exponent();
  if (e.is_exact()) return base().str() + "^" + e.exact().str();
  return base().str() + "^(" + e.to_string() + ")";
}

std::string NatValue::describe() const {
  if (is_exact()) {
    const std::string digits = exact().str();
    if (digits.size() <= 60) return digits;
    return digits.substr(0, 12) + "...(" + std::to_string(digits.size()) + " digits)";
  }
  const NatValue& e = exponent();
  std::string inner = e.describe();
  if (!e.is_exact() || inner.find_first_not_of("0123456789") != std::string::npos) inner = "(" + inner + ")";
  return base().str() + "^" + inner;
}

}  // namespace feaslab
