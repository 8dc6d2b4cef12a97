#include "atoral/factorization.hpp"

#include <cmath>
#include <random>

#include "atoral/equidist.hpp"
#include "atoral/lattice.hpp"
#include "atoral/matrix.hpp"
#include "atoral/numtheory.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace atoral {

namespace {

std::int64_t brute_delta(const std::vector<std::int64_t>& b, std::int64_t n) {
  for (std::int64_t r = 1;; ++r)
    if (!oracle::torsion_relations(b, n, r).empty()) return r;
}

// Residues of x over the common denominator n.
std::vector<std::int64_t> lift(const TorsionPoint& x, std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto r : x.residues()) out.push_back(r * (n / x.order()));
  return out;
}

// Smallest max-norm of a with a * sigma = b mod n over sigma in g, by search.
std::int64_t brute_near_identity(const std::vector<std::int64_t>& b, std::int64_t n, const GaloisSubgroup& g) {
  std::int64_t best = n;
  for (auto sigma : g.elements())
    for (std::int64_t r = 0; r < best; ++r) {
      bool found = false;
      oracle::for_each_in_box(static_cast<int>(b.size()), r, [&](const std::vector<std::int64_t>& a) {
        bool ok = true;
        for (std::size_t i = 0; i < b.size(); ++i) ok = ok && ((a[i] * sigma - b[i]) % n + n) % n == 0;
        found = found || ok;
      });
      if (found) {
        best = r;
        break;
      }
    }
  return best;
}

TorsionPoint random_point(std::mt19937_64& rng, int d, std::int64_t n_max) {
  std::uniform_int_distribution<std::int64_t> nd(2, n_max);
  const std::int64_t n = nd(rng);
  std::uniform_int_distribution<std::int64_t> bd(0, n - 1);
  std::vector<std::int64_t> b(static_cast<std::size_t>(d));
  for (auto& x : b) x = bd(rng);
  return TorsionPoint(b, n);
}

}  // namespace

TEST(NearIdentityTest, Examples) {
  const auto one = near_identity_conjugate(TorsionPoint({1}, 11), GaloisSubgroup::full(11));
  EXPECT_EQ(one.a, ExponentVector{1});
  EXPECT_EQ(one.sigma, 1);
  EXPECT_DOUBLE_EQ(one.ratio, 1.0 / 11.0);
  const auto three = near_identity_conjugate(TorsionPoint({3}, 7), GaloisSubgroup::full(7));
  EXPECT_EQ(three.a, ExponentVector{1});
  EXPECT_EQ(three.sigma, 3);
  const auto mixed = near_identity_conjugate(TorsionPoint::parse("4/8,1/8"), GaloisSubgroup::full(8));
  EXPECT_EQ(oracle::max_norm(mixed.a), 4);
  EXPECT_EQ(mixed.sigma, 1);
  EXPECT_THROW(near_identity_conjugate(TorsionPoint({1}, 8), GaloisSubgroup::full(7)), InputError);
}

TEST(NearIdentityTest, ModularIdentityAndMinimality) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 120; ++t) {
    const int d = 1 + t % 2;
    const TorsionPoint z = random_point(rng, d, 60);
    const auto subs = all_subgroups(z.order() <= 40 ? z.order() : 1);
    const GaloisSubgroup g = z.order() <= 40 ? subs[static_cast<std::size_t>(t) % subs.size()]
                                             : GaloisSubgroup::full(z.order());
    const auto r = near_identity_conjugate(z, g);
    EXPECT_TRUE(g.contains(r.sigma));
    for (int i = 0; i < d; ++i)
      EXPECT_EQ(((r.a[static_cast<std::size_t>(i)] * r.sigma - z.residues()[static_cast<std::size_t>(i)]) % z.order() +
                 z.order()) % z.order(), 0);
    EXPECT_EQ(oracle::max_norm(r.a), brute_near_identity(z.residues(), z.order(), g)) << z.to_string();
    EXPECT_LT(oracle::max_norm(r.a), z.order());
  }
}

TEST(FactorTorsionTest, PrimeOrderKeepsEtaTrivial) {
  for (std::int64_t p : {2, 3, 5, 7, 101, 1009}) {
    const auto r = factor_torsion(TorsionPoint({1}, p), 0.25);
    EXPECT_EQ(r.E, 1);
    EXPECT_EQ(r.eta, TorsionPoint::identity(1));
    EXPECT_EQ(r.xi, TorsionPoint({1}, p));
  }
  std::mt19937_64 rng(59);
  const std::vector<std::int64_t> primes{101, 211, 307, 401, 499};
  for (int t = 0; t < 40; ++t) {
    const std::int64_t p = primes[static_cast<std::size_t>(t) % primes.size()];
    std::uniform_int_distribution<std::int64_t> bd(0, p - 1);
    std::vector<std::int64_t> b(static_cast<std::size_t>(1 + t % 3));
    for (auto& x : b) x = bd(rng);
    b[0] = 1;
    const auto r = factor_torsion(TorsionPoint(b, p), t % 2 ? 0.25 : 0.125);
    EXPECT_EQ(r.E, 1);
    EXPECT_EQ(r.M, p);
  }
}

TEST(FactorTorsionTest, IdentityBranch) {
  const TorsionPoint z = TorsionPoint::parse("4/8,1/8");
  const auto r = factor_torsion(z, 0.01);
  EXPECT_TRUE(r.identity_branch);
  EXPECT_EQ(r.xi, z);
  EXPECT_EQ(r.E, 1);
  EXPECT_EQ(r.M, 8);
  EXPECT_EQ(r.i, 2);
  EXPECT_TRUE(r.V == IntMatrix::Identity(2, 2));
}

TEST(FactorTorsionTest, DyadicExample) {
  const std::int64_t n = std::int64_t{1} << 20;
  const TorsionPoint z({n / 2, 1}, n);
  const auto r = factor_torsion(z, 0.25, GaloisSubgroup::full(n));
  EXPECT_FALSE(r.identity_branch);
  EXPECT_EQ(r.i, 1);
  EXPECT_EQ(r.E, 2);
  EXPECT_EQ(n % r.E, 0);
  EXPECT_LE(static_cast<double>(r.E), std::pow(static_cast<double>(n), 2.0 / 16.0));
  EXPECT_EQ(r.eta * r.xi, z);
  EXPECT_EQ(r.index, 2);
  EXPECT_EQ(r.V.col(0), (IntVector(2) << 1, 0).finished());
}

TEST(FactorTorsionTest, RandomInputsSatisfyAllParts) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    const int d = 1 + t % 3;
    const TorsionPoint z = random_point(rng, d, d == 3 ? 300 : 2000);
    const double nu = t % 2 ? 0.25 : 0.125;
    const auto r = factor_torsion(z, nu);
    const std::int64_t n = z.order();
    // Recomposition over the common denominator.
    const auto eta = lift(r.eta, n), xi = lift(r.xi, n);
    for (int k = 0; k < d; ++k)
      EXPECT_EQ((eta[static_cast<std::size_t>(k)] + xi[static_cast<std::size_t>(k)]) % n,
                z.residues()[static_cast<std::size_t>(k)]);
    EXPECT_EQ(n % r.E, 0);
    EXPECT_EQ(n % r.M, 0);
    EXPECT_LE(std::log(static_cast<double>(r.E)),
              2.0 * std::pow(nu, 1 + r.i) * std::log(static_cast<double>(n)) + 1e-12);
    EXPECT_EQ(abs(determinant(r.V)), 1);
    const TorsionPoint xv = r.xi.power(r.V);
    for (int k = 0; k < d - r.i; ++k) EXPECT_EQ(xv.residues()[static_cast<std::size_t>(k)], 0);
    EXPECT_LT(oracle::max_norm(r.a), r.M);
    if (d <= 2 || n <= 300) {
      const double delta = static_cast<double>(brute_delta(r.xi.residues(), r.xi.order()));
      EXPECT_EQ(delta, r.delta_xi);
      EXPECT_GE(delta, r.delta_bound * (1 - 1e-12));
    }
    if (is_prime(n)) EXPECT_EQ(r.E, 1);
  }
}

TEST(FactorTorsionTest, SubgroupIsReducedToModulusM) {
  const std::int64_t n = std::int64_t{1} << 20;
  const TorsionPoint z({n / 2, 1}, n);
  const auto r = factor_torsion(z, 0.25, GaloisSubgroup(n, {5}));
  EXPECT_EQ(r.xi_prime.order(), r.M);
  EXPECT_TRUE(GaloisSubgroup(n, {5}).reduce(r.M).contains(r.sigma));
  EXPECT_THROW(factor_torsion(z, 0.25, GaloisSubgroup::full(7)), InputError);
  EXPECT_THROW(factor_torsion(z, 0.3), InputError);
}

TEST(MonomialChangeTest, Examples) {
  const std::int64_t n = std::int64_t{1} << 20;
  const TorsionPoint z({n / 2, 1}, n);
  const auto split = monomial_change(z, 1024.0, 0.25, {0.25});
  EXPECT_EQ(split.l, 1);
  ASSERT_TRUE(split.eta.has_value());
  EXPECT_EQ(split.eta->order(), 2);
  EXPECT_LE(static_cast<double>(split.eta->order()), split.eta_order_bound);
  EXPECT_EQ(split.xi.order(), n);
  // The smaller nu makes Lambda(nu) trivial, so nothing splits.
  const auto none = monomial_change(z, 1024.0, 0.25, {0.125, 0.125});
  EXPECT_EQ(none.l, 0);
  EXPECT_TRUE(none.V == IntMatrix::Identity(2, 2));
  EXPECT_FALSE(none.eta.has_value());
  const auto flat = monomial_change(TorsionPoint({3}, 7), 100.0, 0.5, {});
  EXPECT_EQ(flat.l, 0);
  EXPECT_EQ(flat.xi, TorsionPoint({3}, 7));
  EXPECT_THROW(monomial_change(z, 0.5, 0.25, {0.25}), InputError);
  EXPECT_THROW(monomial_change(z, 2.0, 0.25, {0.6}), InputError);
}

TEST(MonomialChangeTest, RandomInvariants) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 2;
    const TorsionPoint z = random_point(rng, d, d == 3 ? 400 : 4000);
    const double delta = std::pow(static_cast<double>(z.order()), 0.5);
    const auto r = monomial_change(z, delta, 0.5, {0.25});
    EXPECT_EQ(abs(determinant(r.V)), 1);
    const TorsionPoint zv = z.power(r.V);
    EXPECT_EQ(zv.slice(r.l, d - r.l), r.xi);
    if (r.l == 0) {
      EXPECT_TRUE(r.V == IntMatrix::Identity(d, d));
    } else {
      EXPECT_EQ(*r.eta, zv.slice(0, r.l));
      EXPECT_LE(static_cast<double>(r.eta->order()), r.eta_order_bound * (1 + 1e-12));
    }
    if (r.l < d - 1) EXPECT_GT(r.lambdas.back(), std::pow(delta, std::pow(0.5, d - r.l - 1)));
  }
}

}  // namespace atoral
