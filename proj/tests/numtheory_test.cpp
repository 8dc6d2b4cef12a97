#include "atoral/numtheory.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace atoral {

TEST(NumTheoryTest, EulerPhiMatchesCountOfUnits) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::int64_t count = 0;
    for (std::int64_t a = 1; a <= n; ++a) count += (oracle::gcd(a, n) == 1);
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(NumTheoryTest, DivisorsAreSortedAndComplete) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(num_divisors(360), 24);
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
}

TEST(NumTheoryTest, ModularArithmetic) {
  EXPECT_EQ(mod(-7, 5), 3);
  EXPECT_EQ(centered_mod(3, 5), -2);
  EXPECT_EQ(centered_mod(2, 4), 2);
  EXPECT_EQ(mod_inverse(3, 7), 5);
  EXPECT_THROW(mod_inverse(2, 4), InputError);
  EXPECT_EQ(mod_pow(2, 10, 1000), 24);
  auto [g, x, y] = extended_gcd(240, 46);
  EXPECT_EQ(g, 2);
  EXPECT_EQ(240 * x + 46 * y, 2);
}

TEST(NumTheoryTest, OrdersAndPrimitiveRoots) {
  EXPECT_EQ(multiplicative_order(2, 7), 3);
  EXPECT_EQ(smallest_primitive_root(7), 3);
  EXPECT_EQ(smallest_primitive_root(8), 0);
  EXPECT_EQ(smallest_primitive_root(25), 2);
  EXPECT_TRUE(is_prime_power(27));
  EXPECT_FALSE(is_prime_power(12));
  EXPECT_TRUE(is_prime(101));
  EXPECT_EQ(units_mod(8), (std::vector<std::int64_t>{1, 3, 5, 7}));
}

}  // namespace atoral
