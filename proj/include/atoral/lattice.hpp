#ifndef ATORAL_LATTICE_HPP
#define ATORAL_LATTICE_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "atoral/matrix.hpp"
#include "atoral/numtheory.hpp"
#include "atoral/torsion.hpp"
#include "atoral/types.hpp"

namespace atoral {

/// Sublattice of Z^d spanned by the rows of an integer matrix.
class IntLattice {
 public:
  /// The zero lattice {0} in Z^d.
  explicit IntLattice(int ambient_dim);
  /// Rows must be linearly independent.
  explicit IntLattice(IntMatrix rows);

  static IntLattice standard(int ambient_dim);
  /// Lattice generated by arbitrary (possibly dependent) rows.
  static IntLattice from_generators(const IntMatrix& rows);
  /// Rows separated by ';', entries by ',' or whitespace.
  static IntLattice parse(const std::string& text);

  int ambient_dim() const { return static_cast<int>(basis_.cols()); }
  int rank() const { return static_cast<int>(basis_.rows()); }
  const IntMatrix& basis() const { return basis_; }
  bool contains(const IntVector& v) const;
  std::string to_string() const;

 private:
  IntMatrix basis_;
};

enum class Norm { euclidean, max };

/// Gram determinant det(B B^T) = det(Lambda)^2 (1 for rank 0).
BigInt gram_determinant(const IntLattice& lattice);
double log_det(const IntLattice& lattice);
double det_lattice(const IntLattice& lattice);

/// Row-style Hermite normal form, zero rows removed.
BigMatrix hermite_normal_form(const BigMatrix& rows);
/// Canonical basis (HNF) of a lattice; equal lattices give equal bases.
IntMatrix canonical_basis(const IntLattice& lattice);
bool same_lattice(const IntLattice& a, const IntLattice& b);

/// Basis (rows) of {x in Z^n : m x = 0}, LLL-reduced.
IntMatrix integer_kernel(const BigMatrix& m);

/// {u in Z^d : <rows_g, u> = 0 mod moduli_g for every g}.
IntLattice congruence_lattice(const IntMatrix& rows, const std::vector<std::int64_t>& moduli);
/// Lambda_zeta = {u : zeta^u = 1}; full rank with det = ord(zeta).
IntLattice lattice_of_torsion(const TorsionPoint& zeta);

/// Exact integral LLL with parameter 99/100.
IntLattice lll_reduce(const IntLattice& lattice);

/// All lattice vectors v != 0 with |v|_2^2 <= radius2 (both signs).
std::vector<IntVector> short_vectors(const IntLattice& lattice, const BigInt& radius2);

/// Shortest nonzero vector; ties go to the lexicographically smallest
/// representative with positive first nonzero entry. nullopt for rank 0.
std::optional<IntVector> shortest_vector(const IntLattice& lattice, Norm norm);
/// lambda_1 in the given norm; +infinity for the zero lattice.
double lambda1(const IntLattice& lattice, Norm norm);

struct MinDetResult {
  BigInt gram_det;  // squared determinant of the witness
  double log_det = 0.0;
  IntLattice witness{1};
};
/// Minimal determinant among rank-r sublattices. Exact for rank <= 4.
MinDetResult min_det_sublattice(const IntLattice& lattice, int r);

struct HNProfile {
  std::vector<double> slopes;          // mu_1 <= ... <= mu_rank
  std::vector<double> min_log_dets;    // f(0..rank) before convexification
  std::vector<BigInt> min_gram_dets;   // exact squared minima
  std::vector<IntLattice> witnesses;   // minimizers per rank 0..rank
  std::vector<int> jump_ranks;         // 0 < j < rank with mu_j < mu_{j+1}
  std::vector<bool> on_hull;           // rank j is a vertex of the lower hull
  double hull_value(int j) const;      // convexified f(j)
};
HNProfile hn_profile(const IntLattice& lattice);

struct LambdaNu {
  int j = 0;             // rank of Lambda(nu)
  IntLattice lattice{1};
};
/// Lambda(nu): the filtration member before the first slope jump that is
/// large relative to log det.
LambdaNu lambda_nu(const IntLattice& lattice, double nu);
LambdaNu lambda_nu(const HNProfile& profile, double log_det, double nu);

/// {u in Z^d : n u in lattice for some n != 0}.
IntLattice saturate(const IntLattice& lattice);

/// min{lambda_1(saturate(Lambda_zeta(nu))) in max-norm, N^(nu^d / 2)}.
double tilde_lambda(const TorsionPoint& zeta, double nu);

/// Smallest max-norm of v != 0 orthogonal to a; infinity for d = 1.
double rho(const ExponentVector& a);

/// Unimodular V whose first k columns are the given d x k columns, which
/// must span a saturated lattice. Remaining columns are size-reduced.
IntMatrix complete_to_unimodular(const IntMatrix& columns);

/// Max-norm of a matrix or vector.
std::int64_t max_norm(const IntMatrix& m);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace atoral

#endif  // ATORAL_LATTICE_HPP
