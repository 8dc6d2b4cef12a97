#ifndef ATORAL_TORUS_HPP
#define ATORAL_TORUS_HPP

#include <cstdint>
#include <vector>

#include "atoral/torsion.hpp"
#include "atoral/types.hpp"

namespace atoral {

/// Smallest max-norm of a != 0 with zeta^a = 1.
std::int64_t delta_point(const TorsionPoint& zeta);

/// Finite subgroup of the torus generated by torsion points.
class FiniteTorusSubgroup {
 public:
  /// Enumerates the group; more than 10^6 elements is rejected.
  explicit FiniteTorusSubgroup(std::vector<TorsionPoint> generators);

  /// mu_N^d, all N-torsion.
  static FiniteTorusSubgroup full_torsion(int dim, std::int64_t n);
  /// Parses generators separated by ';', each in torsion point format.
  static FiniteTorusSubgroup parse(const std::string& text);

  int dim() const { return dim_; }
  const std::vector<TorsionPoint>& generators() const { return gens_; }
  const std::vector<TorsionPoint>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  /// Least common multiple of the element orders.
  std::int64_t exponent() const { return exponent_; }

 private:
  int dim_;
  std::vector<TorsionPoint> gens_;
  std::vector<TorsionPoint> elems_;
  std::int64_t exponent_ = 1;
};

/// Smallest max-norm of a != 0 annihilating every element of G.
std::int64_t delta_group(const FiniteTorusSubgroup& g);

struct CountAudit {
  std::int64_t count = 0;
  std::int64_t total = 0;
  double ratio = 0.0;  // count / #G
  double bound = 0.0;
  bool holds = false;  // ratio <= bound
};

/// #{zeta in G : zeta^a = 1} against |a| / delta(G).
CountAudit count_kernel(const FiniteTorusSubgroup& g, const ExponentVector& a);
/// #{zeta in G : delta(zeta) <= T} against 3^d T^(d+1) / delta(G).
CountAudit count_small_delta(const FiniteTorusSubgroup& g, double t);
/// Mean of delta(zeta)^(-kappa) over G against 4^d delta(G)^(-kappa/(d+1+kappa)).
CountAudit mean_delta_power(const FiniteTorusSubgroup& g, double kappa);

}  // namespace atoral

#endif  // ATORAL_TORUS_HPP
