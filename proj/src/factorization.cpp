#include "atoral/factorization.hpp"

#include <cmath>

#include "atoral/equidist.hpp"
#include "atoral/lattice.hpp"
#include "atoral/matrix.hpp"
#include "atoral/numtheory.hpp"
#include "atoral/torus.hpp"

namespace atoral {

namespace {

constexpr double kSlack = 1e-12;

bool log_le(double lhs_log, double rhs_log) { return lhs_log <= rhs_log + kSlack * (1.0 + std::abs(rhs_log)); }

// e(b / N) with b placed at [first, first + residues.size()) and zeros elsewhere.
TorsionPoint embed(const std::vector<std::int64_t>& residues, std::int64_t n, int dim, int first) {
  std::vector<std::int64_t> b(static_cast<std::size_t>(dim), 0);
  for (std::size_t k = 0; k < residues.size(); ++k) b[static_cast<std::size_t>(first) + k] = residues[k];
  return TorsionPoint(std::move(b), n);
}

std::vector<std::int64_t> take(const TorsionPoint& z, int first, int count, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (int k = first; k < first + count; ++k) out.push_back(z.residues()[static_cast<std::size_t>(k)] * (n / z.order()));
  return out;
}

std::int64_t sublattice_index(const IntLattice& sub, const IntLattice& sup) {
  const BigInt num = gram_determinant(sub), den = gram_determinant(sup);
  if (num % den != 0) throw AuditFailure("factor_torsion: Gram determinants are not nested");
  const BigInt sq = num / den;
  const BigInt root = boost::multiprecision::sqrt(sq);
  if (root * root != sq) throw AuditFailure("factor_torsion: index is not an integer");
  return root.convert_to<std::int64_t>();
}

GaloisSubgroup group_mod(const std::optional<GaloisSubgroup>& h, std::int64_t m, std::int64_t n) {
  if (!h) return GaloisSubgroup::full(m);
  if (h->modulus() == m) return *h;
  if (h->modulus() == n) return h->reduce(m);
  throw InputError("factor_torsion: subgroup modulus must be M or N");
}

}  // namespace

FactorizationResult factor_torsion(const TorsionPoint& zeta, double nu, const std::optional<GaloisSubgroup>& h) {
  if (!(nu > 0.0 && nu <= 0.25)) throw InputError("factor_torsion: nu must lie in (0, 1/4]");
  const int d = zeta.dim();
  const std::int64_t n = zeta.order();
  const double log_n = std::log(static_cast<double>(n));
  const IntLattice lattice = lattice_of_torsion(zeta);
  const LambdaNu ln = lambda_nu(lattice, nu);
  const IntLattice sat = saturate(ln.lattice);
  const int k = ln.j;

  FactorizationResult out;
  out.i = d - k;
  out.identity_branch = k == 0;
  if (out.identity_branch) {
    out.V = IntMatrix::Identity(d, d);
    out.eta = TorsionPoint::identity(d);
    out.xi = zeta;
  } else {
    out.V = complete_to_unimodular(sat.basis().transpose());
    const IntMatrix v_inv = inverse_unimodular(out.V);
    const TorsionPoint zv = zeta.power(out.V);
    out.eta = embed(take(zv, 0, k, n), n, d, 0).power(v_inv);
    out.xi = embed(take(zv, k, d - k, n), n, d, k).power(v_inv);
    out.index = sublattice_index(ln.lattice, sat);
  }
  if (!(out.eta * out.xi == zeta)) throw AuditFailure("factor_torsion: eta * xi differs from zeta");
  out.E = out.eta.order();
  out.M = out.xi.order();
  out.v_norm = max_norm(out.V);

  // (i)
  out.order_bound = std::pow(static_cast<double>(n), 2.0 * std::pow(nu, 1 + out.i));
  if (n % out.E != 0 || n % out.M != 0) throw AuditFailure("factor_torsion: E or M does not divide N");
  if (!log_le(std::log(static_cast<double>(out.E)), 2.0 * std::pow(nu, 1 + out.i) * log_n))
    throw AuditFailure("factor_torsion: E exceeds N^(2 nu^(1+i))");
  if (out.index % out.E != 0) throw AuditFailure("factor_torsion: E does not divide the saturation index");

  // (ii)
  const TorsionPoint xv = out.xi.power(out.V);
  for (int c = 0; c < k; ++c)
    if (xv.residues()[static_cast<std::size_t>(c)] != 0) throw AuditFailure("factor_torsion: xi^V is not (1,...,1,xi')");
  out.xi_prime = xv.slice(k, out.i);
  if (out.xi_prime.order() != out.M) throw AuditFailure("factor_torsion: xi' and xi differ in order");

  // (iii)
  const GaloisSubgroup hm = group_mod(h, out.M, n);
  const NearIdentity near = near_identity_conjugate(out.xi_prime, hm);
  out.a = near.a;
  out.sigma = near.sigma;
  out.a_ratio = near.ratio;
  out.a_shape = static_cast<double>(hm.index()) * std::sqrt(static_cast<double>(hm.conductor())) /
                std::pow(static_cast<double>(n), std::pow(nu, out.i) / (6.0 * d));
  for (std::int64_t x : out.a)
    if (std::abs(x) >= out.M) throw AuditFailure("factor_torsion: |a| >= M");

  // (iv)
  out.delta_xi = static_cast<double>(delta_point(out.xi));
  const double cap = std::pow(static_cast<double>(n), std::pow(nu, d) / 2.0);
  out.delta_bound = std::min(lambda1(sat, Norm::max), cap) / std::sqrt(static_cast<double>(d));
  if (!log_le(std::log(out.delta_bound), std::log(out.delta_xi)))
    throw AuditFailure("factor_torsion: delta(xi) is below d^(-1/2) min{lambda_1, N^(nu^d/2)}");
  return out;
}

MonomialChange monomial_change(const TorsionPoint& zeta, double delta, double eps, const std::vector<double>& nu_list) {
  const int d = zeta.dim();
  if (delta < 1.0) throw InputError("monomial_change: delta must be at least 1");
  if (!(eps > 0.0 && eps <= 0.5)) throw InputError("monomial_change: eps must lie in (0, 1/2]");
  std::vector<double> nus(static_cast<std::size_t>(std::max(d - 1, 0)));
  if (d > 1) {
    if (nu_list.size() == 1)
      std::fill(nus.begin(), nus.end(), nu_list.front());
    else if (nu_list.size() >= nus.size())
      std::copy_n(nu_list.begin(), nus.size(), nus.begin());
    else
      throw InputError("monomial_change: need one nu per step");
  }
  double nu_sum = 0.0;
  for (double v : nus) {
    if (!(v > 0.0 && v <= 0.5)) throw InputError("monomial_change: each nu must lie in (0, 1/2]");
    nu_sum += v;
  }
  if (nu_sum > 0.5 + kSlack) throw InputError("monomial_change: the nu must sum to at most 1/2");

  const std::int64_t n = zeta.order();
  MonomialChange out;
  out.V = IntMatrix::Identity(d, d);
  out.xi = zeta;
  double exponent_sum = 0.0, nu_used = 0.0;
  for (int l = 1; l <= d - 1; ++l) {
    const double nu = nus[static_cast<std::size_t>(l - 1)];
    const double threshold = std::pow(delta, std::pow(eps, d - l));
    const IntLattice sat = saturate(lambda_nu(lattice_of_torsion(out.xi), nu).lattice);
    const double lam = lambda1(sat, Norm::max);
    out.lambdas.push_back(lam);
    if (!(lam <= threshold)) break;
    const IntVector v = *shortest_vector(sat, Norm::max);
    const IntMatrix vl = complete_to_unimodular(v);
    IntMatrix block = IntMatrix::Identity(d, d);
    block.bottomRightCorner(d + 1 - l, d + 1 - l) = vl;
    out.V = to_int(multiply(to_big(out.V), to_big(block)));
    const TorsionPoint eta_l = out.xi.power(v);
    if (!log_le(std::log(static_cast<double>(eta_l.order())), nu * std::log(static_cast<double>(n))))
      throw AuditFailure("monomial_change: ord(eta_l) exceeds N^nu_l");
    out.xi = out.xi.power(vl).slice(1, d - l);
    out.l = l;
    exponent_sum += std::pow(eps, d - l);
    nu_used += nu;
  }
  const TorsionPoint zv = zeta.power(out.V);
  if (!(zv.slice(out.l, d - out.l) == out.xi)) throw AuditFailure("monomial_change: zeta^V does not end in xi");
  if (out.l > 0) out.eta = zv.slice(0, out.l);
  out.v_norm = max_norm(out.V);
  out.v_bound = std::pow(delta, exponent_sum);
  out.eta_order_bound = std::pow(static_cast<double>(n), nu_used);
  if (out.eta && !log_le(std::log(static_cast<double>(out.eta->order())), nu_used * std::log(static_cast<double>(n))))
    throw AuditFailure("monomial_change: ord(eta) exceeds N^(nu_1 + ... + nu_l)");
  return out;
}

}  // namespace atoral
