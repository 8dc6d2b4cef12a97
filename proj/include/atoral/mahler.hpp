#ifndef ATORAL_MAHLER_HPP
#define ATORAL_MAHLER_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "atoral/laurent.hpp"
#include "atoral/poly.hpp"
#include "atoral/types.hpp"

namespace atoral {

enum class MahlerMethod { jensen, recursive, qmc };
const char* to_string(MahlerMethod m);

struct MeasureResult {
  double value = 0.0;
  MahlerMethod method = MahlerMethod::jensen;
  double est_error = 0.0;
  int near_circle = 0;         // roots with ||z| - 1| < 1e-6
  int depth = 0;               // quadrature refinement levels
  std::size_t nodes = 0;       // evaluation points of the final level
  std::size_t perturbed = 0;   // degenerate fibers moved off their node
  std::size_t skipped = 0;     // QMC points landing on zeros
};

/// Jensen's formula: log|a_0| + sum log+ |z_i|. Coefficients low degree first.
MeasureResult mahler_univariate(const std::vector<std::complex<double>>& coeffs);
MeasureResult mahler_univariate(const IntPoly& q);
MeasureResult mahler_univariate(const LaurentPoly& p);
MeasureResult mahler_univariate(const ComplexLaurent& p);

/// Jensen in the last variable, tensor midpoint rule in the others with
/// dyadic refinement until two levels agree within tol.
MeasureResult mahler_multivariate(const LaurentPoly& p, int nodes_per_dim = 64, double tol = 1e-9);
MeasureResult mahler_multivariate(const ComplexLaurent& p, int nodes_per_dim = 64, double tol = 1e-9);

enum class QmcGenerator { fibonacci, korobov };

/// Rank-1 lattice points i (1, g) / n. Fibonacci: n = F_k <= n_points, g = F_(k-1)
/// (d = 2 only). Korobov: g = (1, a, a^2, ...) with a the integer nearest n / golden ratio coprime to n.
std::vector<std::vector<double>> rank1_lattice(int dim, std::size_t n_points, QmcGenerator gen);

/// Mean of log|P(e(x))| over a rank-1 lattice, zeros skipped and counted.
MeasureResult mahler_qmc(const LaurentPoly& p, std::size_t n_points,
                         QmcGenerator gen = QmcGenerator::fibonacci);

/// Jensen for d = 1, recursive otherwise.
MeasureResult mahler(const LaurentPoly& p, double tol = 1e-9);

struct MahlerBounds {
  double lower_ds = 0.0;  // log|P| - (k - 2) log 2
  double upper = 0.0;     // log|P| + (1/2) log k
  std::size_t k = 0;
};
MahlerBounds mahler_bounds(const LaurentPoly& p);

struct LawtonRecord {
  ExponentVector a;
  double m_specialized = 0.0;
  double m_P = 0.0;
  double abs_error = 0.0;
  double rho = 0.0;
  std::int64_t deg_P = 0;
  std::size_t k = 0;
  bool flagged = false;      // rho(a) <= deg P
  double bound_shape = 0.0;  // deg^(16 d^2) / rho^(1 / (16 (k - 1)))
};
/// m(P(X^a)) against m(P).
LawtonRecord lawton_experiment(const LaurentPoly& p, const ExponentVector& a, double tol = 1e-10);

enum class Sampler { grid, qmc };

struct VolumeEstimate {
  double estimate = 0.0;
  double band = 0.0;   // two standard errors
  double shape = 0.0;  // r^(1/(k-1)) for univariate input, else 0
  std::size_t samples = 0;
};
/// vol{x : |P(e(x))| < r}.
VolumeEstimate volume_S(const LaurentPoly& p, double r, std::size_t n_samples, Sampler sampler = Sampler::qmc);

struct LogIntegral {
  double estimate = 0.0;
  double shape = 0.0;  // r^(1/(4(k-1)))
  std::size_t samples = 0;
};
/// Integral of |log|P(e(x))|| over S(P, r) with P scaled to |P| = 1.
LogIntegral log_integral_over_S(const LaurentPoly& p, double r, std::size_t n_samples);

struct HolderRecord {
  double delta = 0.0;  // |P - Q| / |Q|
  double m_P = 0.0;
  double m_Q = 0.0;
  double diff = 0.0;   // m(P) - m(Q)
  double shape = 0.0;  // delta^(1/(8(k-1)))
};
HolderRecord holder_probe(const LaurentPoly& p, const LaurentPoly& q, double tol = 1e-10);

}  // namespace atoral

#endif  // ATORAL_MAHLER_HPP
