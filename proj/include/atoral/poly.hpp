#ifndef ATORAL_POLY_HPP
#define ATORAL_POLY_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atoral/numtheory.hpp"

namespace atoral {

/// Dense univariate polynomial, coefficients stored low degree first.
/// The zero polynomial has no coefficients and degree -1.
template <class Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Scalar& value) { return Poly(std::vector<Scalar>{value}); }
  static Poly monomial(const Scalar& value, int degree) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = value;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int i) const {
    return (i < 0 || i > degree()) ? Scalar(0) : c_[static_cast<std::size_t>(i)];
  }
  const Scalar& leading() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

template <class Scalar>
Poly<Scalar> derivative(const Poly<Scalar>& p) {
  std::vector<Scalar> c;
  for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coeff(i) * Scalar(i));
  return Poly<Scalar>(std::move(c));
}

/// Horner evaluation at a complex point, coefficients converted to double.
template <class Scalar>
std::complex<double> evaluate(const Poly<Scalar>& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + static_cast<double>(p.coeff(i));
  return acc;
}

RatPoly to_rational(const IntPoly& p);

/// Quotient and remainder over the rationals.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// a / b if b divides a in Z[X], otherwise nullopt.
std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b);

/// Remainder of a modulo a monic integer polynomial (stays integral).
IntPoly rem_monic(const IntPoly& a, const IntPoly& monic);

/// lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

BigInt content(const IntPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Primitive gcd over Z[X] with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Product of the distinct irreducible factors, primitive.
IntPoly squarefree_part(const IntPoly& p);

/// Pairs (S_i, i) with p = c * prod S_i^i, each S_i squarefree, primitive and
/// nonconstant.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

/// Res(a, b) via the sub-resultant algorithm; exact over Z.
BigInt resultant(const IntPoly& a, const IntPoly& b);

/// disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p), n = deg p >= 1.
BigInt discriminant(const IntPoly& p);

/// The N-th cyclotomic polynomial by exact division of X^N - 1. Cached.
const IntPoly& cyclotomic_polynomial(std::int64_t n);

std::string to_string(const IntPoly& p, const std::string& var = "X");

}  // namespace atoral

#endif  // ATORAL_POLY_HPP
