#ifndef ATORAL_FACTORIZATION_HPP
#define ATORAL_FACTORIZATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "atoral/galois.hpp"
#include "atoral/torsion.hpp"
#include "atoral/types.hpp"

namespace atoral {

/// zeta = eta * xi with eta of small order and xi' = e(a sigma / M) near 1.
struct FactorizationResult {
  TorsionPoint eta = TorsionPoint::identity(1);
  TorsionPoint xi = TorsionPoint::identity(1);
  TorsionPoint xi_prime = TorsionPoint::identity(1);  // last i coordinates of xi^V
  std::int64_t E = 1;
  std::int64_t M = 1;
  IntMatrix V;
  int i = 0;                 // rank of Lambda / Lambda(nu)
  bool identity_branch = false;
  ExponentVector a;
  std::int64_t sigma = 1;
  std::int64_t index = 1;    // [saturation : Lambda(nu)]
  double order_bound = 0.0;  // N^(2 nu^(1+i))
  std::int64_t v_norm = 0;
  double a_ratio = 0.0;      // |a| / M
  double a_shape = 0.0;      // [Gamma_M:H] f_H^(1/2) / N^(nu^i / (6d))
  double delta_xi = 0.0;
  double delta_bound = 0.0;  // d^(-1/2) min{lambda_1(saturation), N^(nu^d / 2)}
};

/// Splits zeta along the saturation of Lambda_zeta(nu). H is a subgroup of
/// Gamma_M or Gamma_N (reduced to Gamma_M); Gamma_M when absent. Every
/// explicit inequality is checked and AuditFailure thrown on violation.
FactorizationResult factor_torsion(const TorsionPoint& zeta, double nu,
                                   const std::optional<GaloisSubgroup>& h = std::nullopt);

struct MonomialChange {
  int l = 0;
  IntMatrix V;
  std::optional<TorsionPoint> eta;  // first l coordinates of zeta^V
  TorsionPoint xi = TorsionPoint::identity(1);
  std::vector<double> lambdas;      // lambda_1 of the saturation at each step tried
  std::int64_t v_norm = 0;
  double v_bound = 1.0;             // delta^(eps^(d-1) + ... + eps^(d-l))
  double eta_order_bound = 1.0;     // N^(nu_1 + ... + nu_l)
};

/// Splits off one coordinate at a time while the saturation of
/// Lambda_{xi_l}(nu_l) has a vector of max-norm <= delta^(eps^(d-l)).
/// nu_list holds one value per step (a single value is reused).
MonomialChange monomial_change(const TorsionPoint& zeta, double delta, double eps, const std::vector<double>& nu_list);

}  // namespace atoral

#endif  // ATORAL_FACTORIZATION_HPP
