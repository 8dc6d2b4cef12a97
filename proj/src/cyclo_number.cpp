#include "atoral/cyclo_number.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace atoral {

namespace {

// Reduces sum_i c[i] X^i modulo the monic Phi_m, returning phi(m) coordinates.
std::vector<Rational> reduce_mod_cyclotomic(std::int64_t m, std::vector<Rational> c) {
  const IntPoly& phi = cyclotomic_polynomial(m);
  const int dm = phi.degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= dm; --i) {
    const Rational q = c[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    for (int j = 0; j <= dm; ++j)
      c[static_cast<std::size_t>(i - dm + j)] -= q * Rational(phi.coeff(j));
  }
  c.resize(static_cast<std::size_t>(dm), Rational(0));
  return c;
}

}  // namespace

CycloNumber::CycloNumber(const Rational& q) : m_(1), coords_{q} {}

CycloNumber CycloNumber::zero(std::int64_t conductor) {
  if (conductor < 1) throw InputError("CycloNumber: conductor must be positive");
  return CycloNumber(conductor,
                     std::vector<Rational>(static_cast<std::size_t>(euler_phi(conductor))));
}

CycloNumber CycloNumber::root_of_unity(std::int64_t conductor, std::int64_t j) {
  if (conductor < 1) throw InputError("CycloNumber: conductor must be positive");
  const std::int64_t e = mod(j, conductor);
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c.back() = 1;
  return CycloNumber(conductor, reduce_mod_cyclotomic(conductor, std::move(c)));
}

CycloNumber CycloNumber::from_power_series(std::int64_t conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw InputError("CycloNumber: conductor must be positive");
  // zeta^m = 1: fold exponents first so the division stays short.
  if (static_cast<std::int64_t>(coeffs.size()) > conductor) {
    std::vector<Rational> folded(static_cast<std::size_t>(conductor));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      folded[i % static_cast<std::size_t>(conductor)] += coeffs[i];
    coeffs = std::move(folded);
  }
  return CycloNumber(conductor, reduce_mod_cyclotomic(conductor, std::move(coeffs)));
}

bool CycloNumber::is_zero() const {
  for (const auto& q : coords_)
    if (q != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw InputError("CycloNumber: value is not rational");
  return coords_.empty() ? Rational(0) : coords_[0];
}

bool CycloNumber::is_integral() const {
  for (const auto& q : coords_)
    if (boost::multiprecision::denominator(q) != 1) return false;
  return true;
}

CycloNumber CycloNumber::embed(std::int64_t target) const {
  if (target == m_) return *this;
  if (target % m_ != 0) throw InputError("CycloNumber::embed: target is not a multiple");
  const std::int64_t step = target / m_;
  std::vector<Rational> c(static_cast<std::size_t>((static_cast<std::int64_t>(coords_.size()) - 1) * step + 1));
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i * static_cast<std::size_t>(step)] = coords_[i];
  return from_power_series(target, std::move(c));
}

std::complex<double> CycloNumber::to_complex(std::int64_t sigma) const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    const std::int64_t k = mod(static_cast<std::int64_t>(i) * sigma, m_);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m_);
    acc += static_cast<double>(coords_[i]) * std::polar(1.0, angle);
  }
  return acc;
}

CycloNumber CycloNumber::conj() const {
  std::vector<Rational> c(static_cast<std::size_t>(m_));
  for (std::size_t i = 0; i < coords_.size(); ++i)
    c[static_cast<std::size_t>(mod(-static_cast<std::int64_t>(i), m_))] += coords_[i];
  return from_power_series(m_, std::move(c));
}

Rational CycloNumber::norm() const {
  if (is_zero()) return 0;
  BigInt denom = 1;
  for (const auto& q : coords_)
    denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(q));
  std::vector<BigInt> ints;
  for (const auto& q : coords_) ints.push_back(boost::multiprecision::numerator(q * Rational(denom)));
  const BigInt res = resultant(cyclotomic_polynomial(m_), IntPoly(std::move(ints)));
  BigInt scale = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) scale *= denom;
  return Rational(res) / Rational(scale);
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  const std::int64_t l = lcm(m_, o.m_);
  if (l != m_) *this = embed(l);
  const CycloNumber other = o.embed(l);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  const std::int64_t l = lcm(m_, o.m_);
  if (l != m_) *this = embed(l);
  const CycloNumber other = o.embed(l);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  if (o.m_ == 1 || m_ == 1) {
    // Rational scaling keeps the other operand's conductor.
    const Rational s = (o.m_ == 1) ? o.coords_[0] : coords_[0];
    CycloNumber base = (o.m_ == 1) ? *this : o;
    for (auto& q : base.coords_) q *= s;
    *this = std::move(base);
    return *this;
  }
  const std::int64_t l = lcm(m_, o.m_);
  const CycloNumber a = embed(l), b = o.embed(l);
  std::vector<Rational> c(a.coords_.size() + b.coords_.size() - 1);
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coords_.size(); ++j) c[i + j] += a.coords_[i] * b.coords_[j];
  }
  *this = from_power_series(l, std::move(c));
  return *this;
}

CycloNumber operator-(CycloNumber a) {
  for (auto& q : a.coords_) q = -q;
  return a;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  const std::int64_t l = lcm(a.m_, b.m_);
  return a.embed(l).coords_ == b.embed(l).coords_;
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coords_[i];
    if (i > 0) os << "*zeta(" << m_ << ")" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) return "0";
  return os.str();
}

}  // namespace atoral
