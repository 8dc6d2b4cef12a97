#ifndef ATORAL_NUMTHEORY_HPP
#define ATORAL_NUMTHEORY_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace atoral {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised for malformed user input (parse errors, violated preconditions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an explicit inequality that must hold is found violated.
class AuditFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log|x| for a big integer, -infinity at 0.
double log_abs(const BigInt& x);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Floor modulus, result in [0, m).
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Representative of a mod m in (-m/2, m/2].
inline std::int64_t centered_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = mod(a, m);
  return 2 * r > m ? r - m : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);
/// Inverse of a modulo m; throws InputError if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
struct ExtendedGcd {
  std::int64_t g, x, y;
};
ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t num_divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
bool is_prime(std::int64_t n);
bool is_prime_power(std::int64_t n);
/// Multiplicative order of a modulo n (requires gcd(a, n) = 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t n);
/// Smallest primitive root modulo n, or 0 if (Z/n)^x is not cyclic.
std::int64_t smallest_primitive_root(std::int64_t n);
/// Sorted residues in [1, n) coprime to n (for n = 1 returns {0}).
std::vector<std::int64_t> units_mod(std::int64_t n);

}  // namespace atoral

#endif  // ATORAL_NUMTHEORY_HPP
