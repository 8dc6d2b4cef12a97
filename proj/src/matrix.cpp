#include "atoral/matrix.hpp"

#include <limits>

namespace atoral {

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix to_int(const BigMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const BigInt& x = m(i, j);
      if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw InputError("matrix entry exceeds 64-bit range");
      out(i, j) = static_cast<std::int64_t>(x);
    }
  return out;
}

BigInt determinant(const BigMatrix& m_in) {
  if (m_in.rows() != m_in.cols()) throw InputError("determinant: matrix must be square");
  const Eigen::Index n = m_in.rows();
  if (n == 0) return 1;
  BigMatrix m = m_in;
  BigInt prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw InputError("inverse_unimodular: matrix must be square");
  const BigInt det = determinant(m);
  if (det != 1 && det != -1) throw InputError("inverse_unimodular: matrix is not unimodular");
  // Gauss-Jordan over Q on [m | I].
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> a(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = Rational(m(i, j));
      a(i, n + j) = Rational(i == j ? 1 : 0);
    }
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (a(p, c) == 0) ++p;
    if (p != c) a.row(c).swap(a.row(p));
    const Rational piv = a(c, c);
    for (Eigen::Index j = 0; j < 2 * n; ++j) a(c, j) /= piv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (Eigen::Index j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  BigMatrix inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = boost::multiprecision::numerator(a(i, n + j));
  return to_int(inv);
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("multiply: dimension mismatch");
  BigMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      BigInt s = 0;
      for (Eigen::Index l = 0; l < a.cols(); ++l)
        if (a(i, l) != 0 && b(l, j) != 0) s += a(i, l) * b(l, j);
      out(i, j) = s;
    }
  return out;
}

bool equal(const BigMatrix& a, const BigMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

BigMatrix gram(const BigMatrix& rows) {
  BigMatrix g(rows.rows(), rows.rows());
  for (Eigen::Index i = 0; i < rows.rows(); ++i)
    for (Eigen::Index j = 0; j <= i; ++j) {
      BigInt s = 0;
      for (Eigen::Index k = 0; k < rows.cols(); ++k) s += rows(i, k) * rows(j, k);
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

}  // namespace atoral
