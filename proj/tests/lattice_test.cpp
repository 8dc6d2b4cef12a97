#include "atoral/lattice.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace atoral {

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<std::int64_t>> r) {
  IntMatrix m(static_cast<Eigen::Index>(r.size()), static_cast<Eigen::Index>(r.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : r) {
    Eigen::Index j = 0;
    for (auto x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntVector vec(std::initializer_list<std::int64_t> v) { return to_eigen(ExponentVector(v)); }

TorsionPoint random_torsion(std::mt19937_64& rng, int d, std::int64_t max_n) {
  std::uniform_int_distribution<std::int64_t> n_dist(2, max_n);
  const std::int64_t n = n_dist(rng);
  std::uniform_int_distribution<std::int64_t> b_dist(0, n - 1);
  std::vector<std::int64_t> b(static_cast<std::size_t>(d));
  for (auto& x : b) x = b_dist(rng);
  return TorsionPoint(b, n);
}

}  // namespace

TEST(LatticeTest, LatticeOfTorsionExamples) {
  EXPECT_TRUE(same_lattice(lattice_of_torsion(TorsionPoint::parse("4/8,1/8")),
                           IntLattice(rows({{1, -4}, {0, 8}}))));
  EXPECT_EQ(gram_determinant(lattice_of_torsion(TorsionPoint::parse("4/8,1/8"))), 64);
  EXPECT_TRUE(same_lattice(lattice_of_torsion(TorsionPoint({1}, 7)), IntLattice(rows({{7}}))));
  const IntLattice third = lattice_of_torsion(TorsionPoint::parse("1/3,1/3"));
  EXPECT_NEAR(det_lattice(third), 3.0, 1e-12);
  EXPECT_TRUE(third.contains(vec({1, 2})));
  EXPECT_TRUE(third.contains(vec({3, 0})));
  EXPECT_FALSE(third.contains(vec({1, 0})));
}

TEST(LatticeTest, MembershipMatchesCongruence) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const TorsionPoint z = random_torsion(rng, 3, 60);
    const IntLattice l = lattice_of_torsion(z);
    EXPECT_EQ(gram_determinant(l), BigInt(z.order()) * z.order());
    oracle::for_each_in_box(3, 2, [&](const std::vector<std::int64_t>& u) {
      EXPECT_EQ(l.contains(to_eigen(u)), z.kills(u));
    });
  }
}

TEST(LatticeTest, ShortestVectors) {
  const IntLattice five(rows({{5}}));
  EXPECT_EQ(*shortest_vector(five, Norm::euclidean), vec({5}));
  EXPECT_DOUBLE_EQ(lambda1(five, Norm::max), 5.0);
  const IntLattice l = lattice_of_torsion(TorsionPoint::parse("4/8,1/8"));
  EXPECT_EQ(*shortest_vector(l, Norm::euclidean), vec({2, 0}));
  EXPECT_DOUBLE_EQ(lambda1(l, Norm::euclidean), 2.0);
  EXPECT_DOUBLE_EQ(lambda1(l, Norm::max), 2.0);
  EXPECT_DOUBLE_EQ(lambda1(IntLattice::standard(2), Norm::max), 1.0);
  EXPECT_EQ(*shortest_vector(IntLattice::standard(2), Norm::euclidean), vec({0, 1}));
  EXPECT_FALSE(shortest_vector(IntLattice(3), Norm::max).has_value());
  EXPECT_EQ(lambda1(IntLattice(3), Norm::euclidean), kInfinity);
}

TEST(LatticeTest, ShortestVectorsMatchBruteForce) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const int d = 2 + t % 2;
    const TorsionPoint z = random_torsion(rng, d, 400);
    const auto box = static_cast<std::int64_t>(std::ceil(std::sqrt(d) * std::pow(z.order(), 1.0 / d)));
    std::int64_t best2 = -1, best_inf = -1;
    for (const auto& u : oracle::torsion_relations(z.residues(), z.order(), box)) {
      if (best2 < 0 || oracle::sq_norm(u) < best2) best2 = oracle::sq_norm(u);
      if (best_inf < 0 || oracle::max_norm(u) < best_inf) best_inf = oracle::max_norm(u);
    }
    const IntLattice l = lattice_of_torsion(z);
    EXPECT_DOUBLE_EQ(lambda1(l, Norm::euclidean), std::sqrt(static_cast<double>(best2))) << z.to_string();
    EXPECT_DOUBLE_EQ(lambda1(l, Norm::max), static_cast<double>(best_inf)) << z.to_string();
  }
}

TEST(LatticeTest, LllPreservesLattice) {
  const IntLattice skew(rows({{1, 0, 0}, {1000, 1, 0}, {-3517, 91, 1}}));
  const IntLattice red = lll_reduce(skew);
  EXPECT_TRUE(same_lattice(skew, red));
  EXPECT_LE(max_norm(red.basis()), 1);
  const IntLattice partial(rows({{3, 5, 7, 11}, {6, 10, 14, 23}}));
  EXPECT_TRUE(same_lattice(partial, lll_reduce(partial)));
  EXPECT_EQ(gram_determinant(partial), gram_determinant(lll_reduce(partial)));
}

TEST(LatticeTest, IntegerKernel) {
  BigMatrix m(2, 4);
  m << 1, 2, 3, 4, 2, 0, -1, 5;
  const IntMatrix k = integer_kernel(m);
  EXPECT_EQ(k.rows(), 2);
  const BigMatrix mt = m.transpose();
  EXPECT_TRUE(equal(multiply(to_big(k), mt), BigMatrix::Zero(2, 2)));
  EXPECT_EQ(saturate(IntLattice(k)).rank(), 2);
  EXPECT_TRUE(same_lattice(saturate(IntLattice(k)), IntLattice(k)));
}

TEST(LatticeTest, MinDetSublattice) {
  const IntLattice l = lattice_of_torsion(TorsionPoint::parse("4/8,1/8"));
  const MinDetResult one = min_det_sublattice(l, 1);
  EXPECT_NEAR(one.log_det, std::log(2.0), 1e-12);
  EXPECT_EQ(one.witness.basis(), rows({{2, 0}}));
  EXPECT_EQ(min_det_sublattice(l, 0).log_det, 0.0);
  EXPECT_EQ(min_det_sublattice(IntLattice::standard(2), 2).log_det, 0.0);
  EXPECT_THROW(min_det_sublattice(l, 3), InputError);
}

TEST(LatticeTest, MinDetMatchesBruteForceOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const int d = 2 + t % 2;
    const TorsionPoint z = random_torsion(rng, d, 500);
    const std::int64_t n = z.order();
    const IntLattice l = lattice_of_torsion(z);
    const HNProfile p = hn_profile(l);
    // Minkowski: lambda_1 <= N^(1/d) in max-norm, so the euclidean minimum
    // lies in the box of radius sqrt(d) N^(1/d).
    const auto box1 = static_cast<std::int64_t>(std::ceil(std::sqrt(d) * std::pow(n, 1.0 / d)));
    const auto rel1 = oracle::torsion_relations(z.residues(), n, box1);
    std::int64_t l1sq = -1, l1inf = -1;
    std::vector<std::int64_t> v1;
    for (const auto& u : rel1) {
      if (l1sq < 0 || oracle::sq_norm(u) < l1sq) {
        l1sq = oracle::sq_norm(u);
        v1 = u;
      }
      if (l1inf < 0 || oracle::max_norm(u) < l1inf) l1inf = oracle::max_norm(u);
    }
    ASSERT_EQ(p.min_gram_dets[1], l1sq) << z.to_string();
    ASSERT_EQ(p.min_gram_dets[static_cast<std::size_t>(d)], BigInt(n) * n);
    if (d == 3) {
      // lambda_2^2 <= lambda_2 lambda_3 <= N / lambda_1 in max-norm.
      const auto box2 = std::max(box1, static_cast<std::int64_t>(std::ceil(std::sqrt(double(n) / l1inf))));
      std::int64_t upper = -1;
      for (const auto& w : oracle::torsion_relations(z.residues(), n, box2)) {
        const std::int64_t c = oracle::cross_sq(v1, w);
        if (c > 0 && (upper < 0 || c < upper)) upper = c;
      }
      ASSERT_GT(upper, 0);
      // Both minima of a rank-2 minimizer are at most (2/sqrt 3) U / lambda_1.
      const auto box3 = static_cast<std::int64_t>(
          std::ceil(2.0 / std::sqrt(3.0) * std::sqrt(double(upper)) / std::sqrt(double(l1sq))) + 1);
      const auto rel3 = oracle::torsion_relations(z.residues(), n, box3);
      std::int64_t best = upper;
      for (std::size_t i = 0; i < rel3.size(); ++i)
        for (std::size_t j = i + 1; j < rel3.size(); ++j) {
          const std::int64_t c = oracle::cross_sq(rel3[i], rel3[j]);
          if (c > 0 && c < best) best = c;
        }
      ASSERT_EQ(p.min_gram_dets[2], best) << z.to_string();
    }
  }
}

TEST(LatticeTest, HNProfileExamples) {
  const IntLattice big = lattice_of_torsion(TorsionPoint({1 << 19, 1}, 1 << 20));
  const HNProfile p = hn_profile(big);
  ASSERT_EQ(p.slopes.size(), 2u);
  EXPECT_NEAR(p.slopes[0], std::log(2.0), 1e-9);
  EXPECT_NEAR(p.slopes[1], 19 * std::log(2.0), 1e-9);
  EXPECT_EQ(p.jump_ranks, std::vector<int>{1});

  const IntLattice scaled(rows({{5, 0, 0}, {0, 5, 0}, {0, 0, 5}}));
  const HNProfile s = hn_profile(scaled);
  for (double mu : s.slopes) EXPECT_NEAR(mu, std::log(5.0), 1e-12);
  EXPECT_TRUE(s.jump_ranks.empty());

  const HNProfile z2 = hn_profile(IntLattice::standard(2));
  EXPECT_EQ(z2.slopes, (std::vector<double>{0.0, 0.0}));
}

TEST(LatticeTest, HNProfileInvariants) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 80; ++t) {
    const int d = 2 + t % 3;
    const TorsionPoint z = random_torsion(rng, d, d == 4 ? 90 : 400);
    const IntLattice l = lattice_of_torsion(z);
    const HNProfile p = hn_profile(l);
    double sum = 0.0;
    for (std::size_t j = 0; j < p.slopes.size(); ++j) {
      sum += p.slopes[j];
      if (j > 0) EXPECT_LE(p.slopes[j - 1], p.slopes[j] + 1e-12);
      EXPECT_LE(p.hull_value(static_cast<int>(j) + 1), p.min_log_dets[j + 1] + 1e-9);
    }
    EXPECT_NEAR(sum, std::log(static_cast<double>(z.order())), 1e-9);
    EXPECT_EQ(p.min_log_dets.front(), 0.0);
    for (int j : p.jump_ranks)
      EXPECT_NEAR(p.hull_value(j), log_det(p.witnesses[static_cast<std::size_t>(j)]), 1e-9);
  }
}

TEST(LatticeTest, LambdaNuExamples) {
  const IntLattice big = lattice_of_torsion(TorsionPoint({1 << 19, 1}, 1 << 20));
  const LambdaNu a = lambda_nu(big, 0.25);
  EXPECT_EQ(a.j, 1);
  EXPECT_EQ(a.lattice.basis(), rows({{2, 0}}));
  for (std::int64_t p : {2, 3, 7, 101}) {
    const LambdaNu b = lambda_nu(lattice_of_torsion(TorsionPoint({1}, p)), 0.3);
    EXPECT_EQ(b.j, 0);
    EXPECT_EQ(b.lattice.rank(), 0);
  }
  EXPECT_EQ(lambda_nu(lattice_of_torsion(TorsionPoint::parse("4/8,1/8")), 0.01).j, 0);
  EXPECT_THROW(lambda_nu(big, 0.75), InputError);
}

TEST(LatticeTest, LambdaNuAudits) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 80; ++t) {
    const int d = 2 + t % 2;
    const TorsionPoint z = random_torsion(rng, d, 2000);
    const IntLattice l = lattice_of_torsion(z);
    const double ld = log_det(l);
    for (double nu : {0.5, 0.25, 0.1}) {
      const LambdaNu ln = lambda_nu(l, nu);
      const int corank = d - ln.j;
      EXPECT_LE(log_det(ln.lattice), 2.0 * std::pow(nu, 1 + corank) * ld + 1e-9);
      // Every short vector outside Lambda(nu) is long relative to det.
      const BigInt radius2 = BigInt(std::ceil(std::exp(2.0 * std::pow(nu, corank) * ld))) + 4;
      for (const IntVector& v : short_vectors(l, radius2)) {
        if (ln.lattice.contains(v)) continue;
        EXPECT_GE(std::log(std::sqrt(static_cast<double>(v.cast<double>().squaredNorm()))),
                  std::pow(nu, corank) * ld - 1e-9)
            << z.to_string();
      }
    }
  }
}

TEST(LatticeTest, Saturation) {
  EXPECT_EQ(saturate(IntLattice(rows({{2, 0}}))).basis(), rows({{1, 0}}));
  EXPECT_EQ(canonical_basis(saturate(IntLattice(rows({{2, 4}})))), rows({{1, 2}}));
  EXPECT_TRUE(same_lattice(saturate(IntLattice::standard(2)), IntLattice::standard(2)));
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m(2, 4);
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = entry(rng);
    if (determinant(gram(to_big(m))) == 0) continue;
    const IntLattice l(m);
    const IntLattice s = saturate(l);
    EXPECT_TRUE(same_lattice(saturate(s), s));
    EXPECT_EQ(gram_determinant(l) % gram_determinant(s), 0);
    for (Eigen::Index i = 0; i < m.rows(); ++i) EXPECT_TRUE(s.contains(m.row(i).transpose()));
  }
}

TEST(LatticeTest, TildeLambda) {
  EXPECT_DOUBLE_EQ(tilde_lambda(TorsionPoint({1 << 19, 1}, 1 << 20), 0.25), 1.0);
  EXPECT_NEAR(tilde_lambda(TorsionPoint({1}, 11), 0.2), std::pow(11.0, 0.1), 1e-12);
  // mu_1 = log 3 / 2 and mu_2 = log 3 / 2 for e(1/3,1/3); small nu gives {0}.
  EXPECT_NEAR(tilde_lambda(TorsionPoint::parse("1/3,1/3"), 0.1), std::pow(3.0, 0.01 / 2), 1e-12);
}

TEST(LatticeTest, Rho) {
  EXPECT_DOUBLE_EQ(rho({1, 0}), 1.0);
  for (std::int64_t n : {2, 5, 13}) EXPECT_DOUBLE_EQ(rho({1, n}), static_cast<double>(n));
  EXPECT_EQ(rho({5}), kInfinity);
  EXPECT_THROW(rho({0, 0}), InputError);
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<std::int64_t> entry(-12, 12);
  for (int t = 0; t < 40; ++t) {
    ExponentVector a{entry(rng), entry(rng), entry(rng)};
    if (a == ExponentVector{0, 0, 0}) continue;
    const double r = rho(a);
    std::int64_t best = -1;
    oracle::for_each_in_box(3, static_cast<std::int64_t>(r), [&](const std::vector<std::int64_t>& v) {
      if (oracle::max_norm(v) == 0 || v[0] * a[0] + v[1] * a[1] + v[2] * a[2] != 0) return;
      if (best < 0 || oracle::max_norm(v) < best) best = oracle::max_norm(v);
    });
    EXPECT_DOUBLE_EQ(r, static_cast<double>(best));
  }
}

TEST(LatticeTest, CompleteToUnimodular) {
  EXPECT_EQ(complete_to_unimodular(rows({{1}, {0}})), rows({{1, 0}, {0, 1}}));
  EXPECT_EQ(complete_to_unimodular(rows({{1}, {2}})), rows({{1, 0}, {2, 1}}));
  EXPECT_THROW(complete_to_unimodular(rows({{2}, {0}})), InputError);
  const IntMatrix cols = rows({{1, 0}, {3, 5}, {-4, 7}});
  const IntLattice sat = saturate(IntLattice(IntMatrix(cols.transpose())));
  const IntMatrix basis = sat.basis().transpose();
  const IntMatrix v = complete_to_unimodular(basis);
  EXPECT_EQ(v.leftCols(2), basis);
  EXPECT_EQ(abs(determinant(v)), 1);
}

}  // namespace atoral
