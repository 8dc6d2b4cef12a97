#ifndef ATORAL_GALOIS_HPP
#define ATORAL_GALOIS_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace atoral {

/// Subgroup of the unit group Gamma_N = (Z/NZ)^x.
class GaloisSubgroup {
 public:
  /// Subgroup generated by the given residues, which must be units mod N.
  GaloisSubgroup(std::int64_t modulus, std::vector<std::int64_t> generators);

  static GaloisSubgroup full(std::int64_t modulus);
  static GaloisSubgroup trivial(std::int64_t modulus);
  /// Parses "N:g1,g2,..." or "N:*" for the full group.
  static GaloisSubgroup parse(const std::string& text);

  std::int64_t modulus() const { return n_; }
  const std::vector<std::int64_t>& generators() const { return gens_; }
  /// Sorted element list.
  const std::vector<std::int64_t>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  std::int64_t index() const;
  bool contains(std::int64_t sigma) const;
  /// Least f | N with ker(Gamma_N -> Gamma_f) contained in the subgroup.
  std::int64_t conductor() const;
  /// Image under reduction Gamma_N -> Gamma_M for M | N.
  GaloisSubgroup reduce(std::int64_t m) const;
  std::string to_string() const;

  friend bool operator==(const GaloisSubgroup& a, const GaloisSubgroup& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> elems_;
};

/// Every subgroup of Gamma_N, ordered by size then elements. N <= 40.
std::vector<GaloisSubgroup> all_subgroups(std::int64_t modulus);

/// Generator of one cyclic factor of Gamma_N.
struct CyclicFactor {
  std::int64_t generator;
  std::int64_t order;
};
/// Cyclic decomposition: one factor per odd prime power (smallest primitive
/// root lifted by CRT), and {+-1} x <3> for the 2-part.
std::vector<CyclicFactor> cyclic_decomposition(std::int64_t modulus);

class DirichletCharacter {
 public:
  /// chi(g_i) = e(exponents_i / order_i) on the cyclic decomposition.
  DirichletCharacter(std::int64_t modulus, std::vector<std::int64_t> exponents);

  std::int64_t modulus() const { return n_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  bool is_trivial() const;
  /// chi(sigma) = e(value_exponent(sigma) / order()); sigma must be a unit.
  std::int64_t value_exponent(std::int64_t sigma) const;
  std::int64_t order() const { return order_; }
  std::complex<double> operator()(std::int64_t sigma) const;
  GaloisSubgroup kernel() const;
  std::int64_t conductor() const { return kernel().conductor(); }
  std::string to_string() const;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> exps_;
  std::vector<CyclicFactor> factors_;
  std::int64_t order_ = 1;
  std::vector<std::int64_t> table_;  // value exponent per residue, -1 off units
};

/// All phi(N) characters mod N.
std::vector<DirichletCharacter> enumerate_characters(std::int64_t modulus);

/// Sum over sigma in Gamma_N of chi(sigma) e(k sigma / N).
std::complex<double> gauss_sum(const DirichletCharacter& chi, std::int64_t k);
/// Sum over sigma in G of e(k sigma / N).
std::complex<double> subgroup_exponential_sum(const GaloisSubgroup& g, std::int64_t k);

/// Right-hand side phi(N)/phi(N') f_chi^(1/2) with N' = N / gcd(k, N).
double gauss_sum_bound(const DirichletCharacter& chi, std::int64_t k);
/// Right-hand side [Gamma_N : G] / phi(N') f_G^(1/2).
double subgroup_sum_bound(const GaloisSubgroup& g, std::int64_t k);

}  // namespace atoral

#endif  // ATORAL_GALOIS_HPP
