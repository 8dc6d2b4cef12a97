#include "atoral/galois.hpp"

#include <cmath>
#include <set>

#include "atoral/numtheory.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace atoral {

TEST(GaloisTest, SubgroupBasics) {
  const GaloisSubgroup g = GaloisSubgroup::parse("8:3");
  EXPECT_EQ(g.elements(), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(g.index(), 2);
  EXPECT_TRUE(g.contains(11));
  EXPECT_EQ(GaloisSubgroup::parse("12:*").size(), 4u);
  EXPECT_THROW(GaloisSubgroup::parse("8:2"), InputError);
  EXPECT_THROW(GaloisSubgroup::parse("8"), InputError);
  EXPECT_EQ(GaloisSubgroup::parse("15:2").reduce(5), GaloisSubgroup::full(5));
}

TEST(GaloisTest, Conductor) {
  for (std::int64_t n : {1, 2, 7, 12, 30, 64}) EXPECT_EQ(GaloisSubgroup::full(n).conductor(), 1);
  EXPECT_EQ(GaloisSubgroup::trivial(10).conductor(), 5);
  EXPECT_EQ(GaloisSubgroup::parse("8:3").conductor(), 8);
  EXPECT_EQ(GaloisSubgroup::trivial(7).conductor(), 7);
}

TEST(GaloisTest, ConductorInvariantsOverAllSubgroups) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    const auto subs = all_subgroups(n);
    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& g : subs) {
      distinct.insert(g.elements());
      EXPECT_EQ(n % g.conductor(), 0);
      EXPECT_LE(g.index(), euler_phi(g.conductor()));
      EXPECT_EQ(euler_phi(n) % static_cast<std::int64_t>(g.size()), 0);
      // Closed under multiplication.
      for (auto a : g.elements())
        for (auto b : g.elements()) EXPECT_TRUE(g.contains(a * b));
    }
    EXPECT_EQ(distinct.size(), subs.size());
    // Every cyclic subgroup appears.
    for (std::int64_t s : units_mod(n)) {
      const GaloisSubgroup c(n, {s});
      EXPECT_TRUE(std::any_of(subs.begin(), subs.end(), [&](const GaloisSubgroup& g) { return g == c; }));
    }
  }
  EXPECT_EQ(all_subgroups(8).size(), 5u);
  EXPECT_EQ(all_subgroups(7).size(), 4u);
}

TEST(GaloisTest, CharacterCountsAndConductors) {
  const auto chars5 = enumerate_characters(5);
  ASSERT_EQ(chars5.size(), 4u);
  std::multiset<std::int64_t> conductors;
  for (const auto& chi : chars5) conductors.insert(chi.conductor());
  EXPECT_EQ(conductors, (std::multiset<std::int64_t>{1, 5, 5, 5}));
  EXPECT_EQ(enumerate_characters(8).size(), 4u);
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto chars = enumerate_characters(n);
    EXPECT_EQ(static_cast<std::int64_t>(chars.size()), euler_phi(n));
    EXPECT_EQ(chars.front().conductor(), 1);
    // Multiplicativity and pairwise distinct value tables.
    std::set<std::vector<std::int64_t>> tables;
    const auto units = units_mod(n);
    for (const auto& chi : chars) {
      std::vector<std::int64_t> t;
      for (auto s : units) {
        const std::int64_t v = chi.value_exponent(s), g = oracle::gcd(v, chi.order());
        t.push_back(v / g);
        t.push_back(chi.order() / g);
      }
      tables.insert(t);
      for (auto a : units)
        for (auto b : units) {
          const auto lhs = chi(a * b);
          const auto rhs = chi(a) * chi(b);
          EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-9);
        }
    }
    EXPECT_EQ(tables.size(), chars.size());
  }
}

TEST(GaloisTest, GaussSums) {
  for (const auto& chi : enumerate_characters(5)) {
    if (chi.order() == 4) EXPECT_NEAR(std::abs(gauss_sum(chi, 1)), std::sqrt(5.0), 1e-9);
    if (chi.is_trivial()) {
      EXPECT_NEAR(gauss_sum(chi, 1).real(), -1.0, 1e-12);
      EXPECT_NEAR(gauss_sum(chi, 0).real(), 4.0, 1e-12);
    } else {
      EXPECT_NEAR(std::abs(gauss_sum(chi, 0)), 0.0, 1e-12);
    }
  }
}

TEST(GaloisTest, GaussSumAudit) {
  for (std::int64_t n = 1; n <= 60; ++n)
    for (const auto& chi : enumerate_characters(n))
      for (std::int64_t k = 0; k < n; ++k)
        EXPECT_LE(std::abs(gauss_sum(chi, k)), gauss_sum_bound(chi, k) + 1e-9) << chi.to_string() << " k=" << k;
}

TEST(GaloisTest, SubgroupSumAudit) {
  for (std::int64_t n = 1; n <= 40; ++n)
    for (const auto& g : all_subgroups(n))
      for (std::int64_t k = 0; k < n; ++k) {
        const double lhs = std::abs(subgroup_exponential_sum(g, k)) / static_cast<double>(g.size());
        EXPECT_LE(lhs, subgroup_sum_bound(g, k) + 1e-9) << g.to_string() << " k=" << k;
      }
}

TEST(GaloisTest, GaussSumMatchesDirectSummation) {
  for (const auto& chi : enumerate_characters(21))
    for (std::int64_t k : {1, 2, 7, 9}) {
      std::complex<double> direct = 0.0;
      for (std::int64_t s = 1; s < 21; ++s)
        if (oracle::gcd(s, 21) == 1) direct += chi(s) * oracle::e(static_cast<double>(k * s) / 21.0);
      EXPECT_NEAR(std::abs(direct - gauss_sum(chi, k)), 0.0, 1e-10);
    }
}

}  // namespace atoral
