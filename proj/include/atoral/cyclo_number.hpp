#ifndef ATORAL_CYCLO_NUMBER_HPP
#define ATORAL_CYCLO_NUMBER_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "atoral/numtheory.hpp"
#include "atoral/poly.hpp"

namespace atoral {

/// Element of the cyclotomic field Q(zeta_m), stored by its rational
/// coordinates in the power basis 1, zeta_m, ..., zeta_m^(phi(m)-1),
/// reduced modulo the m-th cyclotomic polynomial.
///
/// Binary operations between different conductors re-embed both operands
/// into Q(zeta_lcm). No attempt is made to shrink the conductor.
class CycloNumber {
 public:
  CycloNumber() : CycloNumber(Rational(0)) {}
  CycloNumber(const Rational& q);  // NOLINT: implicit on purpose, rationals embed
  CycloNumber(std::int64_t q) : CycloNumber(Rational(q)) {}  // NOLINT

  static CycloNumber zero(std::int64_t conductor);
  /// zeta_m^j with the principal choice zeta_m = e(1/m).
  static CycloNumber root_of_unity(std::int64_t conductor, std::int64_t j);
  /// Builds sum_i coeffs[i] zeta_m^i for arbitrary length, reducing mod Phi_m.
  static CycloNumber from_power_series(std::int64_t conductor, std::vector<Rational> coeffs);

  std::int64_t conductor() const { return m_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;
  /// True if every power-basis coordinate is an integer (element of Z[zeta_m]).
  bool is_integral() const;

  /// Same number viewed in Q(zeta_L); L must be a multiple of the conductor.
  CycloNumber embed(std::int64_t target_conductor) const;

  /// Image under zeta_m -> e(sigma/m), sigma coprime to m.
  std::complex<double> to_complex(std::int64_t sigma = 1) const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycloNumber conj() const;
  /// Field norm to Q, product over all conjugates (exact).
  Rational norm() const;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator-(CycloNumber a);
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  /// Power-basis text, e.g. "1 + 1*zeta(4)".
  std::string to_string() const;

 private:
  CycloNumber(std::int64_t m, std::vector<Rational> coords) : m_(m), coords_(std::move(coords)) {}
  std::int64_t m_ = 1;
  std::vector<Rational> coords_;
};

}  // namespace atoral

#endif  // ATORAL_CYCLO_NUMBER_HPP
