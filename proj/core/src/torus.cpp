#include "feaslab/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace feaslab {

namespace {

long double to_ld(const BigRational& q) { return q.convert_to<long double>(); }

std::pair<long double, long double> real_roots(long double tr, long double det) {
  const long double disc = tr * tr - 4 * det;
  if (disc < 0) throw std::invalid_argument("matrix has complex eigenvalues");
  const long double root = std::sqrt(disc);
  // Larger-magnitude root first, the other through the product to avoid cancellation.
  const long double big = tr >= 0 ? (tr + root) / 2 : (tr - root) / 2;
  const long double small = big == 0 ? 0 : det / big;
  return {big, small};
}

}  // namespace

std::pair<double, double> eigenvalues_sym2(const Mat2& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("eigenvalues_sym2: matrix is not symmetric");
  auto [p, q] = real_roots(to_ld(m.trace()), to_ld(m.det()));
  if (p < q) std::swap(p, q);
  return {static_cast<double>(p), static_cast<double>(q)};
}

double dominant_eigenvalue(const Mat2& m) {
  auto [p, q] = real_roots(to_ld(m.trace()), to_ld(m.det()));
  return static_cast<double>(std::max(std::fabs(p), std::fabs(q)));
}

double big_log(const BigInt& v) {
  if (v <= 0) throw std::invalid_argument("big_log of non-positive value");
  const auto bits = static_cast<long>(boost::multiprecision::msb(v)) + 1;
  if (bits <= 1000) return std::log(v.convert_to<double>());
  const long shift = bits - 64;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

WindingGrowth winding_growth(const Mat2& a, const BigInt& v1, const BigInt& v2, unsigned n) {
  if (v1 == 0 && v2 == 0) throw std::invalid_argument("winding_growth: zero vector");
  if (!a.is_integer()) throw std::invalid_argument("winding_growth: matrix must be integral");
  const BigRational det = a.det();
  if (det != 1 && det != -1) throw std::invalid_argument("winding_growth: determinant must be +-1");
  const Mat2 p = mat_pow(a, n);
  const BigInt x = numerator(BigRational(p.a * v1 + p.b * v2));
  const BigInt y = numerator(BigRational(p.c * v1 + p.d * v2));
  WindingGrowth g;
  g.norm = abs(x) > abs(y) ? BigInt(abs(x)) : BigInt(abs(y));
  const double lambda = dominant_eigenvalue(a);
  g.ratio = g.norm == 0 ? 0.0 : std::exp(big_log(g.norm) - n * std::log(lambda));
  return g;
}

}  // namespace feaslab
