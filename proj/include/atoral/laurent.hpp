#ifndef ATORAL_LAURENT_HPP
#define ATORAL_LAURENT_HPP

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "atoral/cyclo_number.hpp"
#include "atoral/numtheory.hpp"
#include "atoral/poly.hpp"
#include "atoral/torsion.hpp"
#include "atoral/types.hpp"

namespace atoral {

inline bool is_zero_scalar(const CycloNumber& c) { return c.is_zero(); }
template <class T>
bool is_zero_scalar(const std::complex<T>& c) {
  return c == std::complex<T>(0);
}

inline std::complex<double> to_complex_scalar(const CycloNumber& c) { return c.to_complex(); }
inline std::complex<double> to_complex_scalar(const std::complex<double>& c) { return c; }

/// Sparse Laurent polynomial in d variables with coefficients in Scalar.
///
/// Terms are kept in a map ordered lexicographically descending by exponent;
/// zero coefficients are never stored.
template <class Scalar>
class Laurent {
 public:
  using Terms = std::map<ExponentVector, Scalar, std::greater<ExponentVector>>;

  explicit Laurent(int dim) : dim_(dim) {
    if (dim < 1) throw InputError("Laurent: dimension must be at least 1");
  }

  static Laurent constant(int dim, const Scalar& c) {
    Laurent p(dim);
    p.add_term(ExponentVector(static_cast<std::size_t>(dim), 0), c);
    return p;
  }
  static Laurent monomial(const ExponentVector& e, const Scalar& c) {
    Laurent p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Adds c * X^e, merging with an existing term.
  void add_term(const ExponentVector& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != dim_) throw InputError("Laurent: exponent length mismatch");
    if (is_zero_scalar(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (is_zero_scalar(it->second)) terms_.erase(it);
  }

  Laurent& operator+=(const Laurent& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    check_dim(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(const Laurent& a) {
    Laurent r(a.dim_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_dim(b);
    Laurent r(a.dim_);
    ExponentVector e(static_cast<std::size_t>(a.dim_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend Laurent operator*(const Scalar& s, const Laurent& a) {
    Laurent r(a.dim_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void check_dim(const Laurent& o) const {
    if (o.dim_ != dim_) throw InputError("Laurent: dimension mismatch");
  }
  int dim_;
  Terms terms_;
};

using LaurentPoly = Laurent<CycloNumber>;
using ComplexLaurent = Laurent<std::complex<double>>;

/// z^e for integer e by repeated squaring.
template <class T>
std::complex<T> ipow(std::complex<T> z, std::int64_t e) {
  if (e < 0) {
    z = T(1) / z;
    e = -e;
  }
  std::complex<T> r(1);
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

/// Evaluates P at z, coefficients mapped through the principal embedding.
/// Precision is that of T (double or long double).
template <class T = double, class Scalar>
std::complex<T> evaluate(const Laurent<Scalar>& p, const std::vector<std::complex<T>>& z) {
  if (static_cast<int>(z.size()) != p.dim()) throw InputError("evaluate: point has wrong dimension");
  for (const auto& zi : z)
    if (zi == std::complex<T>(0)) throw InputError("evaluate: coordinates must be nonzero");
  std::complex<T> acc(0), comp(0);
  for (const auto& [e, c] : p.terms()) {
    const std::complex<double> cd = to_complex_scalar(c);
    std::complex<T> term(static_cast<T>(cd.real()), static_cast<T>(cd.imag()));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) term *= ipow(z[i], e[i]);
    // Kahan compensation, componentwise.
    const std::complex<T> y = term - comp;
    const std::complex<T> t = acc + y;
    comp = (t - acc) - y;
    acc = t;
  }
  return acc;
}

/// Parses the text grammar; see README for the syntax. A zero polynomial is
/// returned as such (callers check is_zero()).
LaurentPoly parse_poly(const std::string& text, int dim);
/// Canonical text: terms in descending lexicographic order, coefficients
/// expanded in the power basis of their cyclotomic field.
std::string to_string(const LaurentPoly& p);

/// Principal complex embedding of the coefficients (or zeta_m -> e(sigma/m)).
ComplexLaurent to_complex(const LaurentPoly& p, std::int64_t sigma = 1);

/// Least common conductor of all coefficients.
std::int64_t conductor(const LaurentPoly& p);
/// Re-embeds every coefficient into Q(zeta_L), L = conductor(p).
LaurentPoly unify_conductor(const LaurentPoly& p);

/// x_i -> X^(row i of A); term e becomes e^T A. A has d rows.
template <class Scalar>
Laurent<Scalar> substitute_monomial(const Laurent<Scalar>& p, const IntMatrix& a) {
  if (a.rows() != p.dim() || a.cols() < 1) throw InputError("substitute_monomial: dimension mismatch");
  Laurent<Scalar> r(static_cast<int>(a.cols()));
  for (const auto& [e, c] : p.terms()) {
    const IntVector image = to_eigen(e).transpose() * a;
    r.add_term(to_exponent(image), c);
  }
  return r;
}

/// Term e -> c * eta^e.
LaurentPoly twist(const LaurentPoly& p, const TorsionPoint& eta);

/// conj(P)(X^-1), conjugation acting as zeta_m -> zeta_m^-1.
LaurentPoly involution_reverse(const LaurentPoly& p);

struct AsymmetryReport {
  bool asymmetric = true;
  int sign = 0;          // s with involution_reverse(P) = s * X^shift * P
  ExponentVector shift;  // valid when !asymmetric
};
AsymmetryReport is_asymmetric(const LaurentPoly& p);

/// Maximum coefficient modulus at the principal embedding; |0| = 0.
double coeff_sup_norm(const LaurentPoly& p);
inline std::size_t num_terms(const LaurentPoly& p) { return p.num_terms(); }

struct DegreeInfo {
  std::int64_t laurent = 0;     // max sum |e_i|
  std::int64_t polynomial = 0;  // max sum e_i after minimal clearing
};
DegreeInfo total_degree(const LaurentPoly& p);

/// Multiplies by the least monomial turning P into a polynomial: every
/// negative minimum exponent is raised to 0. With coprime = true every
/// minimum becomes 0, so the result is coprime to X_1...X_d.
/// The applied shift is written to *shift.
template <class Scalar>
Laurent<Scalar> clear_monomial(const Laurent<Scalar>& p, ExponentVector* shift = nullptr,
                               bool coprime = false) {
  ExponentVector lo(static_cast<std::size_t>(p.dim()), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) lo[i] = first ? e[i] : std::min(lo[i], e[i]);
    first = false;
  }
  if (!coprime)
    for (auto& x : lo) x = std::min<std::int64_t>(x, 0);
  Laurent<Scalar> r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] -= lo[i];
    r.add_term(f, c);
  }
  if (shift) {
    *shift = lo;
    for (auto& x : *shift) x = -x;
  }
  return r;
}

bool has_rational_coefficients(const LaurentPoly& p);
bool has_integer_coefficients(const LaurentPoly& p);

/// h(P) for rational coefficients: log max |c| after clearing denominators
/// and content.
double height_rational(const LaurentPoly& p);

/// sum_i p_i(X_1..X_l) conj(p_i)(X_1^-1..X_l^-1) where P = sum_i p_i X'^(e_i)
/// in the trailing variables.
LaurentPoly auxiliary_hat(const LaurentPoly& p, int l);

/// P(X^(V^-1)) cleared to a polynomial by the least monomial, with the first
/// l variables then set to z. V must be unimodular.
LaurentPoly specialize_PVeta(const LaurentPoly& p, const IntMatrix& v, int l, const TorsionPoint& z);
ComplexLaurent specialize_PVeta(const LaurentPoly& p, const IntMatrix& v, int l,
                                const std::vector<std::complex<double>>& z);

/// Univariate integer polynomial of a one-variable P with integer
/// coefficients, cleared minimally. shift receives the clearing exponent.
IntPoly to_int_poly(const LaurentPoly& p, std::int64_t* shift = nullptr);
LaurentPoly from_int_poly(const IntPoly& q);

/// Coefficients (low degree first) of the fiber X_d -> P(z_1..z_{d-1}, X_d),
/// cleared in X_d; min_exponent receives the clearing exponent.
std::vector<std::complex<double>> fiber_coefficients(const ComplexLaurent& p,
                                                     const std::vector<std::complex<double>>& prefix,
                                                     std::int64_t* min_exponent = nullptr);

}  // namespace atoral

#endif  // ATORAL_LAURENT_HPP
