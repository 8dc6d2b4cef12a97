#ifndef ATORAL_ORBIT_HPP
#define ATORAL_ORBIT_HPP

#include <cstdint>
#include <vector>

#include "atoral/cyclo_number.hpp"
#include "atoral/galois.hpp"
#include "atoral/laurent.hpp"
#include "atoral/torsion.hpp"

namespace atoral {

/// The points sigma b / N mod 1 for sigma in G, one per sigma.
std::vector<std::vector<double>> orbit_points(const TorsionPoint& zeta, const GaloisSubgroup& g);

/// Exact value P(zeta) in a cyclotomic field.
CycloNumber exact_value(const LaurentPoly& p, const TorsionPoint& zeta);

struct OrbitAverage {
  double mean = 0.0;                 // over sigma with P(zeta^sigma) != 0
  std::size_t terms = 0;             // number of nonzero values averaged
  std::vector<std::int64_t> zeros;   // sigma with P(zeta^sigma) = 0 exactly
};

/// Mean of log|P(zeta^sigma)| over sigma in G.
OrbitAverage orbit_average_log(const LaurentPoly& p, const TorsionPoint& zeta, const GaloisSubgroup& g);

/// Norm from Q(zeta_N) to Q of P(zeta), as Res(Phi_N, P(X^b)).
BigInt norm_at_torsion(const LaurentPoly& p, const TorsionPoint& zeta);
bool is_unit_at(const LaurentPoly& p, const TorsionPoint& zeta);

}  // namespace atoral

#endif  // ATORAL_ORBIT_HPP
