#ifndef ATORAL_TYPES_HPP
#define ATORAL_TYPES_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace atoral {

/// Exponent of a Laurent monomial, one signed entry per variable.
using ExponentVector = std::vector<std::int64_t>;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline IntVector to_eigen(const ExponentVector& v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

/// An inequality lhs <= rhs checked numerically.
struct Audit {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = true;
  double margin() const { return rhs - lhs; }
};

template <class Derived>
ExponentVector to_exponent(const Eigen::MatrixBase<Derived>& v) {
  ExponentVector out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = v(i);
  return out;
}

}  // namespace atoral

#endif  // ATORAL_TYPES_HPP
