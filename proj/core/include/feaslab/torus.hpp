#pragma once

#include <utility>

#include "feaslab/bignum.hpp"
#include "feaslab/mat2.hpp"

namespace feaslab {

/// Eigenvalues (larger first) of a symmetric matrix. Throws
/// std::invalid_argument on non-symmetric input.
std::pair<double, double> eigenvalues_sym2(const Mat2& m);

struct WindingGrowth {
  BigInt norm;   // ‖A^n v‖∞
  double ratio;  // ‖A^n v‖∞ / λ₊^n
};

/// Growth of an integer vector under A^n, A integer with det ±1.
/// Throws std::invalid_argument on a zero vector or an unsuitable matrix.
WindingGrowth winding_growth(const Mat2& a, const BigInt& v1, const BigInt& v2, unsigned n);

/// Spectral radius of a matrix with real eigenvalues.
double dominant_eigenvalue(const Mat2& m);

/// Natural logarithm of a positive integer of any size.
double big_log(const BigInt& v);

}  // namespace feaslab
