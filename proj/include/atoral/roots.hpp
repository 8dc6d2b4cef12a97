#ifndef ATORAL_ROOTS_HPP
#define ATORAL_ROOTS_HPP

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "atoral/laurent.hpp"
#include "atoral/poly.hpp"

namespace atoral {

/// All complex roots of a univariate polynomial, with multiplicity.
struct RootSet {
  std::vector<std::complex<double>> roots;  // sorted by (real, imag)
  std::vector<double> residuals;            // |Q(z_i)|
  std::vector<double> radii;                // inclusion radius per root
  std::complex<double> leading = 0.0;
  int degree = 0;
  int iterations = 0;
  bool converged = true;
};

/// Coefficients low degree first. Companion-matrix eigenvalues seed an
/// Aberth iteration in extended precision.
RootSet roots(const std::vector<std::complex<double>>& coeffs);
RootSet roots(const IntPoly& q);

inline BigInt discriminant_int(const IntPoly& q) { return discriminant(q); }

struct CyclotomicSplit {
  IntPoly rest;
  std::vector<std::pair<std::int64_t, int>> factors;  // (k, multiplicity of Phi_k)
};
CyclotomicSplit strip_cyclotomic_factors(const IntPoly& q);

/// Roots of an integer polynomial with exact multiplicities. Cyclotomic
/// roots are exact e(j/k); the rest come from squarefree factors.
struct RootMultiset {
  std::vector<std::complex<double>> roots;
  std::vector<int> multiplicity;
  std::vector<double> radii;
  std::vector<bool> root_of_unity;
  double leading = 0.0;
  bool converged = true;
  int degree() const;
};
RootMultiset root_multiset(const IntPoly& q);

enum class AtoralVerdict { yes, no, boundary };

struct AtoralReport {
  AtoralVerdict verdict = AtoralVerdict::yes;
  double min_distance = 0.0;  // min ||z| - 1| over non-cyclotomic roots, infinity if none
  CyclotomicSplit split;
};

/// Decides whether Q vanishes at a point of S^1 of infinite order.
AtoralReport essentially_atoral_1d(const IntPoly& q, double tol = 1e-8);
const char* to_string(AtoralVerdict v);

}  // namespace atoral

#endif  // ATORAL_ROOTS_HPP
