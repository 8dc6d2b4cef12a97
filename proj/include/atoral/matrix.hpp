#ifndef ATORAL_MATRIX_HPP
#define ATORAL_MATRIX_HPP

#include <boost/multiprecision/eigen.hpp>

#include "atoral/numtheory.hpp"
#include "atoral/types.hpp"

namespace atoral {

using BigMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

BigMatrix to_big(const IntMatrix& m);
/// Converts back, throwing InputError if an entry leaves the int64 range.
IntMatrix to_int(const BigMatrix& m);

/// Exact determinant of a square integer matrix (Bareiss).
BigInt determinant(const BigMatrix& m);
inline BigInt determinant(const IntMatrix& m) { return determinant(to_big(m)); }

/// Exact inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Exact product; avoids expression templates mixing with Eigen products.
BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
bool equal(const BigMatrix& a, const BigMatrix& b);

/// Gram matrix B B^T of the rows of B.
BigMatrix gram(const BigMatrix& rows);

}  // namespace atoral

#endif  // ATORAL_MATRIX_HPP
