#include <doctest.h>

#include <cmath>
#include <random>

#include "feaslab/evaluate.hpp"
#include "feaslab/ext_rational.hpp"
#include "feaslab/groups.hpp"
#include "feaslab/mat2.hpp"
#include "feaslab/nat_value.hpp"
#include "feaslab/signature.hpp"
#include "feaslab/syntax.hpp"
#include "feaslab/torus.hpp"

using namespace feaslab;

namespace {

ExtRational inf() { return ExtRational::infinity(); }

ExtRational q(long p, long r) { return ExtRational(BigRational(BigRational(p) / r)); }

Mat2 random_invertible(std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  for (;;) {
    Mat2 m = Mat2::of(d(rng), d(rng), d(rng), d(rng));
    if (m.det() != 0) return m;
  }
}

ExtRational random_point(std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-20, 20);
  if (d(rng) == 0) return inf();
  long den = d(rng);
  if (den == 0) den = 1;
  return q(d(rng), den);
}

// Plain iterated product, no squaring.
Mat2 slow_pow(const Mat2& m, int n) {
  Mat2 r = Mat2::identity();
  for (int i = 0; i < n; ++i) r = mat_mul(r, m);
  return r;
}

BigInt fib(int n) {
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

TEST_CASE("natural values stay exact under the budget") {
  const NatValue a = NatValue::power(NatValue(2UL), NatValue(10UL));
  REQUIRE(a.is_exact());
  CHECK(a.exact() == 1024);
  const NatValue tower = NatValue::power(NatValue(2UL), NatValue(BigInt(1) << 30), 1 << 16);
  CHECK_FALSE(tower.is_exact());
  CHECK(tower.base() == 2);
  CHECK(NatValue::add(tower, tower, 1 << 16) == std::nullopt);
  CHECK(NatValue::multiply(NatValue(3UL), NatValue(4UL))->exact() == 12);
  CHECK(perfect_power_root(BigInt(1024)) == std::pair<BigInt, BigInt>(2, 10));
  CHECK(perfect_power_root(BigInt(36)) == std::pair<BigInt, BigInt>(6, 2));
  CHECK(perfect_power_root(BigInt(12)) == std::pair<BigInt, BigInt>(12, 1));
}

TEST_CASE("arithmetic terms evaluate") {
  const Signature s = arithmetic_signature();
  CHECK(eval_exact_nat(parse_term("exp(exp(2,2),2)", s)) == 16);
  CHECK(eval_exact_nat(parse_term("s(s(0))*s(s(s(0)))+s(0)", s)) == 7);
  CHECK_THROWS_AS(eval_nat(parse_term("s(x)", s)), std::invalid_argument);
  CHECK(arith_equal(parse_term("x*x", s), parse_term("exp(x,2)", s)) != Verdict::Unequal);
  CHECK(arith_equal(parse_term("2*2", s), parse_term("4", s)) == Verdict::Equal);
  CHECK(arith_equal(parse_term("2*2", s), parse_term("5", s)) == Verdict::Unequal);
}

TEST_CASE("extended rationals: defined operations with infinity") {
  CHECK(mul(inf(), inf()) == inf());
  for (long a : {-3L, -1L, 1L, 7L}) {
    CHECK(mul(ExtRational(a), inf()) == inf());
    CHECK(mul(inf(), ExtRational(a)) == inf());
    CHECK(div(ExtRational(a), inf()) == ExtRational(0L));
  }
  CHECK(mul(ExtRational(0L), inf()) == ExtRational(0L));
  CHECK(mul(inf(), ExtRational(0L)) == ExtRational(0L));
  CHECK(div(ExtRational(0L), inf()) == ExtRational(0L));
  CHECK(recip(inf()) == ExtRational(0L));
  CHECK(recip(q(-2, 3)) == q(-3, 2));
  CHECK(add(q(1, 2), q(1, 3)) == q(5, 6));
  CHECK(div(q(1, 2), q(1, 4)) == ExtRational(2L));
}

TEST_CASE("extended rationals: every partial case raises") {
  const std::vector<ExtRational> finite = {ExtRational(0L), ExtRational(1L), q(-5, 3)};
  for (const auto& a : finite) {
    CHECK_THROWS_AS(add(a, inf()), UndefinedOperation);
    CHECK_THROWS_AS(add(inf(), a), UndefinedOperation);
    CHECK_THROWS_AS(sub(a, inf()), UndefinedOperation);
    CHECK_THROWS_AS(sub(inf(), a), UndefinedOperation);
    CHECK_THROWS_AS(div(inf(), a), UndefinedOperation);
    CHECK_THROWS_AS(div(a, ExtRational(0L)), UndefinedOperation);
  }
  CHECK_THROWS_AS(add(inf(), inf()), UndefinedOperation);
  CHECK_THROWS_AS(sub(inf(), inf()), UndefinedOperation);
  CHECK_THROWS_AS(div(inf(), inf()), UndefinedOperation);
  CHECK_THROWS_AS(neg(inf()), UndefinedOperation);
  CHECK_THROWS_AS(recip(ExtRational(0L)), UndefinedOperation);
  CHECK_THROWS_AS((void)inf().value(), UndefinedOperation);
}

TEST_CASE("extended rationals print and parse") {
  for (const auto& x : {inf(), q(-7, 4), ExtRational(12L), ExtRational(0L)}) {
    CHECK(ExtRational::parse(x.to_string()) == x);
  }
  CHECK(inf().to_string() == "inf");
  CHECK(q(6, -8).to_string() == "-3/4");
  CHECK_THROWS_AS(ExtRational::parse("1/0"), std::invalid_argument);
}

TEST_CASE("rational terms evaluate and flag undefined operations") {
  const Signature s = rational_signature();
  CHECK(eval_rational(parse_term("recip(inf)", s)) == ExtRational(0L));
  CHECK(eval_rational(parse_term("mp12(2,1,1,1,5)", s)) == ExtRational(55L));
  CHECK_THROWS_AS(eval_rational(parse_term("inf + 1", s)), UndefinedOperation);
}

TEST_CASE("Mobius action is a homomorphism") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 a = random_invertible(rng);
    const Mat2 b = random_invertible(rng);
    const ExtRational x = random_point(rng);
    REQUIRE_MESSAGE(mobius_apply(mat_mul(a, b), x) == mobius_apply(a, mobius_apply(b, x)),
                    a.to_string() << " " << b.to_string() << " " << x.to_string());
  }
}

TEST_CASE("Mobius action at the pole and at infinity") {
  const Mat2 rot = Mat2::of(0, -1, 1, 0);
  CHECK(mobius_apply(rot, ExtRational(0L)) == inf());
  CHECK(mobius_apply(rot, inf()) == ExtRational(0L));
  CHECK(mobius_apply(Mat2::of(1, 1, 0, 1), inf()) == inf());
  CHECK(mobius_apply(Mat2::of(2, 1, 1, 1), ExtRational(1L)) == q(3, 2));
  CHECK_THROWS_AS(mobius_apply(Mat2::of(1, 2, 2, 4), ExtRational(1L)), std::invalid_argument);
}

TEST_CASE("matrix powers match iterated products") {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Mat2 m = random_invertible(rng);
    for (int n : {0, 1, 2, 5, 13}) CHECK(mat_pow(m, n) == slow_pow(m, n));
  }
  const Mat2 m = Mat2::of(2, 1, 1, 1);
  CHECK(mat_mul(m, mat_inverse(m)) == Mat2::identity());
  CHECK(Mat2::parse(m.to_string()) == m);
  CHECK(Mat2::parse("(1/2 0; 0 2)") == Mat2{BigRational(1, 2), 0, 0, 2});
}

TEST_CASE("free groups") {
  const Word x = {{"x", 1}};
  const Word y = {{"y", 1}};
  const Word w = free_multiply(free_multiply(x, y), free_inverse(x));
  CHECK(to_string(w) == "x y x^-1");
  CHECK(free_multiply(w, free_inverse(w)).empty());
  CHECK(free_power(x, BigInt(1) << 40) == Word{{"x", BigInt(1) << 40}});
  CHECK(free_length(free_power(w, 5)) == 7);
  CHECK(free_reduce({{"x", 2}, {"x", -2}, {"y", 0}}).empty());
  CHECK(to_string(Word{}) == "e");
}

TEST_CASE("Baumslag-Solitar relation x y x^-1 = y^2") {
  const BSElement x = BSElement::x(), y = BSElement::y();
  CHECK(bs_multiply(bs_multiply(x, y), bs_inverse(x)) == bs_power(y, 2));
  for (int n = 0; n <= 20; ++n) {
    const BSElement xn = bs_power(x, n);
    CHECK(bs_multiply(bs_multiply(xn, y), bs_inverse(xn)) == bs_power(y, BigInt(1) << n));
  }
  CHECK(bs_eq({{"x", 1}, {"y", 1}, {"x", -1}}, {{"y", 2}}));
  CHECK_FALSE(bs_eq({{"y", 1}, {"x", 1}}, {{"x", 1}, {"y", 1}}));
  CHECK(bs_inverse(x).to_string() == "(0, -1)");
  CHECK(pow2(-3) == BigRational(1, 8));
}

TEST_CASE("torus eigenvalues") {
  const auto [hi, lo] = eigenvalues_sym2(Mat2::of(2, 1, 1, 1));
  CHECK(std::abs(hi - (3 + std::sqrt(5.0)) / 2) < 1e-12);
  CHECK(std::abs(lo - (3 - std::sqrt(5.0)) / 2) < 1e-12);
  CHECK(std::abs(dominant_eigenvalue(Mat2::of(2, 1, 1, 1)) - hi) < 1e-12);
  CHECK_THROWS_AS(eigenvalues_sym2(Mat2::of(1, 1, 0, 1)), std::invalid_argument);
}

TEST_CASE("torus growth follows Fibonacci numbers and stabilises") {
  const Mat2 a = Mat2::of(2, 1, 1, 1);
  for (unsigned n = 0; n <= 30; ++n) {
    const Mat2 p = mat_pow(a, n);
    CHECK(p == Mat2{BigRational(fib(2 * n + 1)), BigRational(fib(2 * n)), BigRational(fib(2 * n)),
                    BigRational(fib(2 * n - 1 + (n == 0 ? 2 : 0)))});
    CHECK(winding_growth(a, 1, 0, n).norm == fib(2 * n + 1));
  }
  CHECK(winding_growth(a, 1, 0, 5).norm == 89);
  const double r29 = winding_growth(a, 1, 0, 29).ratio;
  const double r30 = winding_growth(a, 1, 0, 30).ratio;
  CHECK(std::abs(r29 - r30) < 1e-9);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::abs(r30 - phi / std::sqrt(5.0)) < 1e-9);
  CHECK_THROWS_AS(winding_growth(a, 0, 0, 3), std::invalid_argument);
  CHECK(std::abs(big_log(BigInt(1) << 2000) - 2000 * std::log(2.0)) < 1e-6);
}
