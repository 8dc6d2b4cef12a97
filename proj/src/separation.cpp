#include "atoral/separation.hpp"

#include <cmath>
#include <set>

#include "atoral/lattice.hpp"
#include "atoral/mahler.hpp"
#include "atoral/matrix.hpp"
#include "atoral/numtheory.hpp"
#include "atoral/orbit.hpp"
#include "atoral/summation.hpp"

namespace atoral {

namespace {

double log_plus_inverse(double x) { return x < 1.0 ? -std::log(x) : 0.0; }

// Scales rational coefficients to coprime integers.
IntPoly integer_multiple(const LaurentPoly& q) {
  const LaurentPoly cleared = clear_monomial(q);
  BigInt den = 1;
  for (const auto& [e, c] : cleared.terms()) den = boost::multiprecision::lcm(den, denominator(c.rational_value()));
  std::vector<BigInt> coeffs(static_cast<std::size_t>(cleared.terms().begin()->first[0]) + 1);
  for (const auto& [e, c] : cleared.terms())
    coeffs[static_cast<std::size_t>(e[0])] = numerator(c.rational_value() * Rational(den));
  return primitive_part(IntPoly(std::move(coeffs)));
}

void sum_off_circle(RepulsionAudit& out, const std::vector<std::complex<double>>& roots, const std::vector<int>& mult,
                    const std::vector<bool>& exact_unit, double tol) {
  CompensatedSum lhs;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const double dist = std::abs(std::abs(roots[i]) - 1.0);
    if (exact_unit[i] || dist < tol) {
      out.excluded += mult[i];
      continue;
    }
    lhs.add(mult[i] * log_plus_inverse(dist));
  }
  out.lhs = lhs.value();
}

}  // namespace

MignotteAudit mignotte_audit(const IntPoly& q, const std::vector<std::pair<int, int>>& pairs, MignotteForm form) {
  if (q.degree() < 1) throw InputError("mignotte_audit: polynomial must be nonconstant");
  const RootSet rs = roots(q);
  const int d = q.degree();
  std::set<int> used;
  for (const auto& [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= d || j >= d) throw InputError("mignotte_audit: root index out of range");
    if (!used.insert(i).second || !used.insert(j).second) throw InputError("mignotte_audit: coincident indices");
  }
  const BigInt disc = discriminant(q);
  if (form == MignotteForm::theorem && disc == 0) throw InputError("mignotte_audit: theorem form needs a squarefree polynomial");
  MignotteAudit out;
  out.degree = d;
  out.pairs = static_cast<int>(pairs.size());
  out.theorem_form = form == MignotteForm::theorem || (form == MignotteForm::automatic && disc != 0);
  CompensatedSum lhs;
  for (const auto& [i, j] : pairs)
    lhs.add(-std::log(std::abs(rs.roots[static_cast<std::size_t>(i)] - rs.roots[static_cast<std::size_t>(j)])));
  out.lhs = lhs.value();
  const double k = out.pairs, dd = d;
  out.rhs = (dd + 2 * k) / 2 * std::log(dd) - k / 2 * std::log(3.0) + (dd - 1) * mahler_univariate(q).value;
  if (out.theorem_form) out.rhs -= 0.5 * log_abs(disc);
  out.ok = out.pairs ? out.lhs < out.rhs : out.lhs <= out.rhs;
  return out;
}

RepulsionAudit repulsion_audit(const IntPoly& q, double circle_tol) {
  if (q.degree() < 1) throw InputError("repulsion_audit: polynomial must be nonconstant");
  const RootMultiset rm = root_multiset(q);
  RepulsionAudit out;
  out.degree = q.degree();
  sum_off_circle(out, rm.roots, rm.multiplicity, rm.root_of_unity, circle_tol);
  const double dd = out.degree, m = mahler_univariate(q).value;
  out.rhs = 4 * dd * (std::log(2 * dd) + m);
  out.rhs_sharp = dd * std::log((3 + std::sqrt(5.0)) / 2) + 2 * dd * std::log(2 * dd) + 4 * dd * m;
  out.ok = out.lhs <= out.rhs;
  return out;
}

double projective_height(const LaurentPoly& q_in) {
  if (q_in.is_zero()) throw InputError("projective_height: zero polynomial");
  const LaurentPoly q = unify_conductor(q_in);
  const std::int64_t l = conductor(q);
  const std::int64_t phi = euler_phi(l);
  std::vector<CycloNumber> c;
  BigInt den = 1;
  for (const auto& [e, v] : q.terms()) {
    c.push_back(v.embed(l));
    for (const auto& x : c.back().coords()) den = boost::multiprecision::lcm(den, denominator(x));
  }
  CompensatedSum arch;
  for (std::int64_t sigma : units_mod(l)) {
    double best = 0.0;
    for (const auto& v : c) best = std::max(best, std::abs(v.to_complex(sigma)));
    arch.add(std::log(best));
  }
  // Z[zeta_l] has the power basis, so the coefficient ideal is the Z-span of c_i zeta^j.
  BigMatrix rows(static_cast<Eigen::Index>(c.size()) * phi, phi);
  Eigen::Index r = 0;
  for (const auto& v : c)
    for (std::int64_t j = 0; j < phi; ++j, ++r) {
      const CycloNumber w = (v * CycloNumber::root_of_unity(l, j)).embed(l);
      for (std::int64_t t = 0; t < phi; ++t)
        rows(r, static_cast<Eigen::Index>(t)) = numerator(w.coords()[static_cast<std::size_t>(t)] * Rational(den));
    }
  const BigMatrix hnf = hermite_normal_form(rows);
  const BigInt index = abs(determinant(hnf));
  return (arch.value() + static_cast<double>(phi) * log_abs(den) - log_abs(index)) / static_cast<double>(phi);
}

NumberFieldRepulsion repulsion_audit_numberfield(const LaurentPoly& q, double circle_tol) {
  if (q.dim() != 1) throw InputError("repulsion_audit_numberfield: polynomial must be univariate");
  if (q.is_zero()) throw InputError("repulsion_audit_numberfield: zero polynomial");
  const LaurentPoly cleared = clear_monomial(q);
  const std::int64_t deg = cleared.terms().begin()->first[0];
  if (deg < 1) throw InputError("repulsion_audit_numberfield: polynomial must be nonconstant");
  NumberFieldRepulsion out;
  out.degree = static_cast<int>(deg);
  if (has_rational_coefficients(cleared)) {
    const RootMultiset rm = root_multiset(integer_multiple(cleared));
    sum_off_circle(out, rm.roots, rm.multiplicity, rm.root_of_unity, circle_tol);
  } else {
    const RootSet rs = roots(fiber_coefficients(to_complex(cleared), {}));
    sum_off_circle(out, rs.roots, std::vector<int>(rs.roots.size(), 1), std::vector<bool>(rs.roots.size(), false),
                   circle_tol);
  }
  out.field_degree = euler_phi(conductor(unify_conductor(cleared)));
  out.height = projective_height(cleared);
  const double dd = out.degree, f = static_cast<double>(out.field_degree);
  out.rhs = 10 * dd * f * f * (std::log(2 * dd) + out.height);
  out.ok = out.lhs <= out.rhs;
  return out;
}

OrbitExperiment univariate_orbit_experiment(const LaurentPoly& q, std::int64_t n, const GaloisSubgroup& g) {
  if (q.dim() != 1) throw InputError("univariate_orbit_experiment: polynomial must be univariate");
  if (q.is_zero()) throw InputError("univariate_orbit_experiment: zero polynomial");
  const OrbitAverage avg = orbit_average_log(q, TorsionPoint({1}, n), g);
  if (!avg.zeros.empty())
    throw InputError("univariate_orbit_experiment: Q vanishes at a conjugate (sigma = " +
                     std::to_string(avg.zeros.front()) + ")");
  OrbitExperiment out;
  out.N = n;
  out.average = avg.mean;
  out.m_Q = mahler_univariate(q).value;
  out.abs_err = std::abs(out.average - out.m_Q);
  const LaurentPoly cleared = clear_monomial(q);
  const double d = std::max<std::int64_t>(cleared.terms().begin()->first[0], 1);
  const double f = static_cast<double>(euler_phi(conductor(unify_conductor(q))));
  const double log2n = std::log(2.0 * static_cast<double>(n));
  out.error_shape = f * f * static_cast<double>(g.index()) * std::sqrt(static_cast<double>(g.conductor())) * d *
                    (std::log(2 * d) + projective_height(q)) * log2n * log2n * log2n *
                    static_cast<double>(num_divisors(n)) / static_cast<double>(n);
  if (has_integer_coefficients(q) && cleared.terms().begin()->first[0] >= 1)
    out.atoral = to_string(essentially_atoral_1d(to_int_poly(q)).verdict);
  return out;
}

}  // namespace atoral
