#ifndef ATORAL_TORSION_HPP
#define ATORAL_TORSION_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "atoral/types.hpp"

namespace atoral {

/// Torsion point e(b/N) of the d-dimensional torus.
///
/// Residues are kept in [0, N) and the fraction is always reduced so that
/// gcd(b_1, ..., b_d, N) = 1, i.e. N is the exact order.
class TorsionPoint {
 public:
  TorsionPoint(std::vector<std::int64_t> residues, std::int64_t denominator);

  static TorsionPoint identity(int dim);
  /// Parses "b1/N,b2/N,..." (common denominator required).
  static TorsionPoint parse(const std::string& text);

  int dim() const { return static_cast<int>(b_.size()); }
  std::int64_t order() const { return n_; }
  const std::vector<std::int64_t>& residues() const { return b_; }

  /// <b, a> mod N, so that zeta^a = e(pairing(a) / N).
  std::int64_t pairing(const ExponentVector& a) const;
  bool kills(const ExponentVector& a) const { return pairing(a) == 0; }

  /// zeta^sigma (Galois action).
  TorsionPoint galois(std::int64_t sigma) const;
  /// zeta^A = e(b A / N) for an integer matrix with d rows.
  TorsionPoint power(const IntMatrix& a) const;
  TorsionPoint inverse() const;
  /// Coordinates restricted to the index range [first, first + count).
  TorsionPoint slice(int first, int count) const;

  /// Coordinates b_i / N in [0, 1).
  std::vector<double> coordinates() const;
  std::vector<std::complex<double>> to_complex() const;
  std::string to_string() const;

  friend TorsionPoint operator*(const TorsionPoint& a, const TorsionPoint& b);
  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) {
    return a.n_ == b.n_ && a.b_ == b.b_;
  }

 private:
  std::vector<std::int64_t> b_;
  std::int64_t n_ = 1;
};

}  // namespace atoral

#endif  // ATORAL_TORSION_HPP
