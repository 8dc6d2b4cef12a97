#include "atoral/cyclo_number.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace atoral {

TEST(CycloNumberTest, RootsOfUnityMultiply) {
  const CycloNumber i = CycloNumber::root_of_unity(4, 1);
  EXPECT_EQ(i * i, CycloNumber(-1));
  EXPECT_EQ(CycloNumber::root_of_unity(3, 1) * CycloNumber::root_of_unity(3, 2), CycloNumber(1));
  EXPECT_EQ(CycloNumber::root_of_unity(6, 3), CycloNumber(-1));
  const CycloNumber mixed = i * CycloNumber::root_of_unity(3, 1);
  EXPECT_EQ(mixed.conductor(), 12);
  EXPECT_NEAR(std::abs(mixed.to_complex() - oracle::e(0.25 + 1.0 / 3.0)), 0.0, 1e-12);
}

TEST(CycloNumberTest, CrossConductorEquality) {
  EXPECT_EQ(CycloNumber::root_of_unity(8, 2), CycloNumber::root_of_unity(4, 1));
  EXPECT_TRUE((CycloNumber::root_of_unity(5, 1) - CycloNumber::root_of_unity(10, 2)).is_zero());
  EXPECT_NE(CycloNumber::root_of_unity(5, 1), CycloNumber::root_of_unity(5, 2));
}

TEST(CycloNumberTest, ConjugateAndNorm) {
  const CycloNumber one_plus_i = CycloNumber(1) + CycloNumber::root_of_unity(4, 1);
  EXPECT_EQ(one_plus_i.conj(), CycloNumber(1) - CycloNumber::root_of_unity(4, 1));
  EXPECT_EQ(one_plus_i.norm(), 2);
  EXPECT_EQ((CycloNumber(1) - CycloNumber::root_of_unity(6, 1)).norm(), 1);
  EXPECT_EQ(CycloNumber(Rational(3, 2)).norm(), Rational(3, 2));
  EXPECT_EQ((CycloNumber(Rational(1, 2)) * one_plus_i).norm(), Rational(1, 2));
}

TEST(CycloNumberTest, NormMatchesProductOfConjugates) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::int64_t m : {5, 7, 8, 9, 12, 15}) {
    std::vector<Rational> c(static_cast<std::size_t>(m));
    for (auto& x : c) x = coeff(rng);
    const CycloNumber a = CycloNumber::from_power_series(m, c);
    std::complex<double> prod = 1.0;
    for (std::int64_t s = 1; s < m; ++s)
      if (oracle::gcd(s, m) == 1) prod *= a.to_complex(s);
    EXPECT_NEAR(prod.real(), static_cast<double>(a.norm()), 1e-6 * (1.0 + std::abs(prod)));
  }
}

TEST(CycloNumberTest, RationalQueries) {
  EXPECT_TRUE(CycloNumber(Rational(2, 3)).is_rational());
  EXPECT_FALSE(CycloNumber(Rational(2, 3)).is_integral());
  EXPECT_FALSE(CycloNumber::root_of_unity(3, 1).is_rational());
  EXPECT_EQ((CycloNumber::root_of_unity(3, 1) + CycloNumber::root_of_unity(3, 2)).rational_value(), -1);
}

}  // namespace atoral
