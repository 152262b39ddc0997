#pragma once

#include <boost/multiprecision/gmp.hpp>

namespace feaslab {

/// Arbitrary-precision integer (GMP backed).
using BigInt = boost::multiprecision::mpz_int;
/// Exact rational, always kept in lowest terms with a positive denominator.
using BigRational = boost::multiprecision::mpq_rational;

}  // namespace feaslab
