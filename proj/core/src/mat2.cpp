#include "feaslab/mat2.hpp"

#include <sstream>
#include <stdexcept>

#include "feaslab/signature.hpp"

namespace feaslab {

bool Mat2::is_integer() const {
  auto integral = [](const BigRational& q) { return denominator(q) == 1; };
  return integral(a) && integral(b) && integral(c) && integral(d);
}

std::string Mat2::to_string() const {
  return "(" + a.str() + " " + b.str() + "; " + c.str() + " " + d.str() + ")";
}

Mat2 Mat2::parse(std::string_view text) {
  std::string s(text);
  for (char& ch : s) {
    if (ch == '(' || ch == ')' || ch == ';' || ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  std::string tok;
  BigRational entries[4];
  int k = 0;
  while (in >> tok) {
    if (k == 4) throw std::invalid_argument("matrix has more than four entries");
    auto canon = canonical_rational_literal(tok);
    if (!canon) throw std::invalid_argument("bad matrix entry '" + tok + "'");
    entries[k++] = BigRational(*canon);
  }
  if (k != 4) throw std::invalid_argument("matrix needs four entries");
  return Mat2{entries[0], entries[1], entries[2], entries[3]};
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(const Mat2& x, const BigInt& n) {
  if (n < 0) throw std::invalid_argument("negative matrix exponent");
  Mat2 result = Mat2::identity();
  Mat2 base = x;
  BigInt k = n;
  while (k > 0) {
    if (bit_test(k, 0)) result = mat_mul(result, base);
    k >>= 1;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

Mat2 mat_inverse(const Mat2& x) {
  const BigRational det = x.det();
  if (det == 0) throw std::invalid_argument("singular matrix");
  return Mat2{x.d / det, -x.b / det, -x.c / det, x.a / det};
}

ExtRational mobius_apply(const Mat2& m, const ExtRational& x) {
  if (m.det() == 0) throw std::invalid_argument("mobius_apply: zero determinant");
  if (x.is_infinite()) {
    if (m.c == 0) return ExtRational::infinity();
    return ExtRational(BigRational(m.a / m.c));
  }
  const BigRational num = m.a * x.value() + m.b;
  const BigRational den = m.c * x.value() + m.d;
  // det ≠ 0 keeps num and den from vanishing together.
  if (den == 0) return ExtRational::infinity();
  return ExtRational(BigRational(num / den));
}

}  // namespace feaslab
