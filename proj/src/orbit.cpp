#include "atoral/orbit.hpp"

#include <cmath>

#include "atoral/poly.hpp"
#include "atoral/summation.hpp"

namespace atoral {

std::vector<std::vector<double>> orbit_points(const TorsionPoint& zeta, const GaloisSubgroup& g) {
  if (g.modulus() != zeta.order()) throw InputError("orbit_points: group modulus differs from the order of zeta");
  std::vector<std::vector<double>> out;
  out.reserve(g.size());
  for (std::int64_t sigma : g.elements()) out.push_back(zeta.galois(sigma).coordinates());
  return out;
}

CycloNumber exact_value(const LaurentPoly& p, const TorsionPoint& zeta) {
  if (p.dim() != zeta.dim()) throw InputError("exact_value: dimension mismatch");
  CycloNumber acc(0);
  for (const auto& [e, c] : p.terms()) acc += c * CycloNumber::root_of_unity(zeta.order(), zeta.pairing(e));
  return acc;
}

OrbitAverage orbit_average_log(const LaurentPoly& p, const TorsionPoint& zeta, const GaloisSubgroup& g) {
  if (p.dim() != zeta.dim()) throw InputError("orbit_average_log: dimension mismatch");
  if (g.modulus() != zeta.order())
    throw InputError("orbit_average_log: group modulus differs from the order of zeta");
  if (p.is_zero()) throw InputError("orbit_average_log: polynomial is zero");
  const double threshold = 1e-9 * static_cast<double>(p.num_terms()) * coeff_sup_norm(p);
  OrbitAverage out;
  CompensatedSum sum;
  for (std::int64_t sigma : g.elements()) {
    const TorsionPoint point = zeta.galois(sigma);
    const double value = std::abs(evaluate(p, point.to_complex()));
    if (value < threshold && exact_value(p, point).is_zero()) {
      out.zeros.push_back(sigma);
      continue;
    }
    sum.add(std::log(value));
    ++out.terms;
  }
  out.mean = out.terms ? sum.value() / static_cast<double>(out.terms) : 0.0;
  return out;
}

BigInt norm_at_torsion(const LaurentPoly& p, const TorsionPoint& zeta) {
  if (p.dim() != zeta.dim()) throw InputError("norm_at_torsion: dimension mismatch");
  if (!has_integer_coefficients(p)) throw InputError("norm_at_torsion: coefficients must be integers");
  const std::int64_t n = zeta.order();
  std::vector<BigInt> c(static_cast<std::size_t>(n), 0);
  for (const auto& [e, coeff] : p.terms())
    c[static_cast<std::size_t>(zeta.pairing(e))] += boost::multiprecision::numerator(coeff.rational_value());
  const IntPoly q(std::move(c));
  const BigInt res = q.is_zero() ? BigInt(0) : resultant(cyclotomic_polynomial(n), q);
  if (res == 0) throw InputError("norm_at_torsion: P vanishes at zeta");
  return res;
}

bool is_unit_at(const LaurentPoly& p, const TorsionPoint& zeta) {
  const BigInt n = norm_at_torsion(p, zeta);
  return n == 1 || n == -1;
}

}  // namespace atoral
