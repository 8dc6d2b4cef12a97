#ifndef ATORAL_EQUIDIST_HPP
#define ATORAL_EQUIDIST_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "atoral/galois.hpp"
#include "atoral/laurent.hpp"
#include "atoral/torsion.hpp"
#include "atoral/types.hpp"

namespace atoral {

/// Points of [0,1)^d.
class PointSet {
 public:
  explicit PointSet(int dim, std::vector<std::vector<double>> points = {});

  /// One point per line, comma-separated decimal or p/q coordinates. Blank
  /// lines and lines starting with '#' are skipped.
  static PointSet parse(const std::string& text);
  static PointSet read(std::istream& in);
  /// The Galois orbit of zeta under G as points sigma b / N mod 1.
  static PointSet orbit(const TorsionPoint& zeta, const GaloisSubgroup& g);

  int dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::vector<double>>& points() const { return points_; }
  const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }

 private:
  int dim_;
  std::vector<std::vector<double>> points_;
};

struct Discrepancy {
  double value = 0.0;
  bool exact = true;  // false: lower bound from random boxes
  std::size_t boxes = 0;
};

/// Extreme discrepancy over all axis-parallel boxes. Exact for d = 1 and for
/// d in {2, 3} with n <= 64; otherwise a random-box lower bound when
/// allow_lower_bound is set, else InputError.
Discrepancy discrepancy(const PointSet& ps, bool allow_lower_bound = false, std::size_t random_boxes = 200000,
                        std::uint64_t seed = 1);

struct KoksmaAudit : Audit {
  double discrepancy = 0.0;
  double variation = 0.0;
};
/// |mean F(x_i) - integral| against Var(F) D, d = 1.
KoksmaAudit koksma_audit(const std::function<double(double)>& f, double variation, const PointSet& ps,
                         double integral);

/// log max(r, |e(x) - alpha|).
class FAlphaR {
 public:
  FAlphaR(std::complex<double> alpha, double r);
  double operator()(double x) const;
  /// Exact total variation on [0, 1]: twice the range, F being unimodal on the circle.
  double var_bound() const;
  /// Integral over [0, 1] by Gauss-Legendre on the smooth pieces.
  double integral() const;

 private:
  std::complex<double> alpha_;
  double r_;
};

struct TruncatedLogAverage {
  double average = 0.0;         // (1/#G) sum over |zeta^sigma - alpha| > r
  double log_plus_alpha = 0.0;
  double residual = 0.0;        // average - log+ |alpha|
  std::size_t excluded = 0;
  double error_shape = 0.0;     // [Gamma_N:G] f^(1/2) log(2N) d0(N) / phi(N) |log r| + r |log r|
};
TruncatedLogAverage truncated_log_average(const TorsionPoint& zeta, const GaloisSubgroup& g,
                                          std::complex<double> alpha, double r);

struct NearIdentity {
  ExponentVector a;
  std::int64_t sigma = 1;
  double ratio = 0.0;  // |a| / N
  double shape = 0.0;  // [Gamma_N:G]^(1/d) f_G^(1/(2d)) / delta^(1/(3d))
};

/// sigma in G and a with zeta = e(a sigma / N), |a| minimal in max-norm.
/// Ties go to the smallest sigma.
NearIdentity near_identity_conjugate(const TorsionPoint& zeta, const GaloisSubgroup& g);

struct IntegrationAudit : Audit {
  double discrepancy = 0.0;
  bool discrepancy_exact = true;
  double t = 0.0;            // D^(1/(d+1))
  double omega = 0.0;        // omega(psi, t)
  bool omega_estimated = true;
};
using PointFunction = std::function<double(const std::vector<double>&)>;
/// |mean psi(x_i) - integral| against (1 + 2^(d+1)) omega(psi, D^(1/(d+1))).
/// Without a modulus of continuity, omega is estimated from omega_samples
/// stratified pairs at max-norm distance t.
IntegrationAudit numerical_integration_audit(const PointFunction& psi, const PointSet& ps, double integral,
                                             const std::function<double(double)>& modulus = {},
                                             std::size_t omega_samples = 10000, std::uint64_t seed = 1);

struct FiberAverage {
  double mean_fiber_measure = 0.0;
  double m_P = 0.0;
  double diff = 0.0;          // mean - m(P)
  double hat_residual = 0.0;  // |m(P^) - mean log P^(e(x_i))|
  double m_hat = 0.0;
};
/// Mean of m(P_e(x_i)) over the points, P_e(x) = P(e(x), Y) with x in [0,1)^l.
FiberAverage fiber_mahler_average(const LaurentPoly& p, int l, const PointSet& ps, double tol = 1e-8);

}  // namespace atoral

#endif  // ATORAL_EQUIDIST_HPP
