#ifndef ATORAL_EXPERIMENTS_HPP
#define ATORAL_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "atoral/equidist.hpp"
#include "atoral/galois.hpp"
#include "atoral/laurent.hpp"
#include "atoral/torsion.hpp"
#include "atoral/torus.hpp"

namespace atoral {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// One experiment's output: named columns, rows, and comment lines.
///
/// Doubles must be finite. ok() is false once any row reports a failed
/// inequality (fail() was called).
class Table {
 public:
  Table(std::string experiment, std::vector<std::string> columns, std::uint64_t seed = 0);

  void add_row(std::vector<Cell> row);
  void note(std::string line) { notes_.push_back(std::move(line)); }
  void fail() { ok_ = false; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }

  const std::string& experiment() const { return experiment_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::vector<std::string>& notes() const { return notes_; }
  bool ok() const { return ok_; }

  /// Column index by name; InputError if absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;

  /// "# atoral-lab v1, experiment=<id>, seed=<s>", notes as '#' lines, then
  /// the column header and rows.
  std::string csv() const;

 private:
  std::string experiment_;
  std::vector<std::string> columns_;
  std::uint64_t seed_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::string> notes_;
  bool ok_ = true;
};

std::string format_cell(const Cell& c);

enum class MeasureMethod { automatic, jensen, recursive, qmc };

/// Value, est_error and the sandwich bounds. ok checks lower <= value <= upper
/// up to est_error.
Table mahler_report(const LaurentPoly& p, MeasureMethod method = MeasureMethod::automatic, double tol = 1e-9,
                    std::size_t qmc_points = 1000000);

/// e(b / N) with b = (1, round(phi N), round(phi^2 N), ...) mod N.
TorsionPoint golden_point(int dim, std::int64_t n);

/// Smallest prime N whose golden point has delta >= target.
std::int64_t golden_prime_for_delta(int dim, std::int64_t target);

/// Rows N, zeta, delta, size, average, m_P, abs_err, zeros, one per torsion point.
/// Rows with exact zeros are flagged in the zeros column and average the
/// remaining conjugates.
Table orbit_average_table(const LaurentPoly& p, const std::vector<TorsionPoint>& points,
                          const std::optional<std::vector<std::int64_t>>& galois_generators = std::nullopt);

/// (1/#G) sum over zeta in G with P(zeta) != 0 of log|P(zeta)|.
struct SubgroupAverage {
  double mean = 0.0;
  std::size_t zero_hits = 0;
};
SubgroupAverage subgroup_average(const LaurentPoly& p, const FiniteTorusSubgroup& g);

/// Rows size, exponent, delta, mean, m_P, abs_err, zero_hits.
Table lsv_average_table(const LaurentPoly& p, const std::vector<FiniteTorusSubgroup>& groups);

struct PipelineOptions {
  double nu = 0.0;     // 0: 1 / (128 d^2)
  double eps = 0.0;    // 0: nu^d
  double delta = 0.0;  // 0: delta(zeta)
  std::int64_t max_degree = 4000;
};

/// Monomial change, factorization zeta = eta xi, the univariate pieces
/// Q_tau(X) = P(eta^tau X^u) with xi = e(u sigma / M), their orbit averages
/// and the final average against m(P). Rows are stage, name, value, ok.
Table reduction_pipeline(const LaurentPoly& p, const TorsionPoint& zeta, const GaloisSubgroup& g,
                         const PipelineOptions& options = {});

/// Torsion points of order N <= max_order, one per Galois orbit, at which P
/// is an algebraic unit. Rows N, zeta, delta, norm.
Table ih_search(const LaurentPoly& p, std::int64_t max_order, std::int64_t min_order = 1);

struct SeparationOptions {
  std::size_t count = 200;
  int mignotte_degree = 20;
  int repulsion_degree = 30;
  int coeff_bound = 20;
  bool reciprocal = false;  // repulsion inputs of the form X^n Q(1/X) Q(X)
  std::uint64_t seed = 1;
};
/// Rows audit, deg, k, lhs, rhs, margin, ok.
Table separation_audit(const SeparationOptions& options);

/// Character sum bounds for every character and k mod N <= max_n, and the
/// subgroup sum bound for every subgroup with N <= max_subgroup_n.
/// Rows kind, N, label, k, abs, bound, ok.
Table gauss_audit(std::int64_t max_n, std::int64_t max_subgroup_n = 40, double tol = 1e-9);

/// Rows n, dim, discrepancy, exact, boxes.
Table discrepancy_table(const PointSet& ps, bool allow_lower_bound = false, std::uint64_t seed = 1);

/// Rows n, a, rho, deg, k, m_spec, m_P, abs_err, bound_shape, flagged.
Table lawton_table(const LaurentPoly& p, const std::vector<ExponentVector>& as);

/// d = 1: exact decision. d >= 2: asymmetry, a sufficient condition only.
Table atoral_table(const LaurentPoly& p);

}  // namespace atoral

#endif  // ATORAL_EXPERIMENTS_HPP
