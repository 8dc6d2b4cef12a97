#ifndef ATORAL_SEPARATION_HPP
#define ATORAL_SEPARATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "atoral/galois.hpp"
#include "atoral/laurent.hpp"
#include "atoral/poly.hpp"
#include "atoral/roots.hpp"

namespace atoral {

enum class MignotteForm { automatic, theorem, corollary };

struct MignotteAudit : Audit {
  int degree = 0;
  int pairs = 0;
  bool theorem_form = true;  // discriminant term included
};

/// Sum of -log|z_j - z'_j| over disjoint root pairs against the separation
/// bound. Indices refer to roots(q).roots.
MignotteAudit mignotte_audit(const IntPoly& q, const std::vector<std::pair<int, int>>& pairs,
                             MignotteForm form = MignotteForm::automatic);

struct RepulsionAudit : Audit {
  double rhs_sharp = 0.0;  // D log((3 + sqrt 5) / 2) + 2D log(2D) + 4D m(Q)
  int excluded = 0;        // roots counted as lying on the circle
  int degree = 0;
};

/// Sum over roots off the circle of log+ 1 / ||z| - 1|, against 4D(log(2D) + m(Q)).
RepulsionAudit repulsion_audit(const IntPoly& q, double circle_tol = 1e-10);

/// Absolute logarithmic projective height of a polynomial with cyclotomic
/// coefficients: archimedean conjugates plus the norm of the coefficient ideal.
double projective_height(const LaurentPoly& q);

struct NumberFieldRepulsion : RepulsionAudit {
  std::int64_t field_degree = 1;
  double height = 0.0;
};
/// Same sum for cyclotomic coefficients, against 10 D [F:Q]^2 (log(2D) + h(Q)).
NumberFieldRepulsion repulsion_audit_numberfield(const LaurentPoly& q, double circle_tol = 1e-10);

struct OrbitExperiment {
  std::int64_t N = 1;
  double average = 0.0;
  double m_Q = 0.0;
  double abs_err = 0.0;
  double error_shape = 0.0;
  std::string atoral = "unchecked";  // verdict of essentially_atoral_1d for integer input
};
/// Mean of log|Q(zeta^sigma)| over sigma in G for zeta = e(1/N), against m(Q).
OrbitExperiment univariate_orbit_experiment(const LaurentPoly& q, std::int64_t n, const GaloisSubgroup& g);

}  // namespace atoral

#endif  // ATORAL_SEPARATION_HPP
