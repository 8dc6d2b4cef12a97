#include "atoral/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

namespace atoral {

double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  const BigInt a = boost::multiprecision::abs(x);
  const std::size_t bits = boost::multiprecision::msb(a);
  if (bits < 1000) return std::log(a.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = a >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::abs(a / gcd(a, b) * b);
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, m);
    base = mod_mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  auto [g, x, y] = extended_gcd(mod(a, m), m);
  (void)y;
  if (g != 1)
    throw InputError("mod_inverse: " + std::to_string(a) + " is not invertible modulo " +
                     std::to_string(m));
  return mod(x, m);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InputError("factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t num_divisors(std::int64_t n) {
  std::int64_t count = 1;
  for (auto [p, e] : factorize(n)) count *= (e + 1);
  return count;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

bool is_prime_power(std::int64_t n) { return n > 1 && factorize(n).size() == 1; }

std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
  if (n == 1) return 1;
  if (gcd(a, n) != 1) throw InputError("multiplicative_order: argument not a unit");
  std::int64_t order = euler_phi(n);
  for (auto [p, e] : factorize(order)) {
    (void)e;
    while (order % p == 0 && mod_pow(a, order / p, n) == 1) order /= p;
  }
  return order;
}

std::int64_t smallest_primitive_root(std::int64_t n) {
  if (n <= 2) return n == 2 ? 1 : 0;
  const std::int64_t phi = euler_phi(n);
  for (std::int64_t g = 2; g < n; ++g) {
    if (gcd(g, n) != 1) continue;
    if (multiplicative_order(g, n) == phi) return g;
  }
  return 0;
}

std::vector<std::int64_t> units_mod(std::int64_t n) {
  if (n == 1) return {0};
  std::vector<std::int64_t> out;
  for (std::int64_t a = 1; a < n; ++a)
    if (gcd(a, n) == 1) out.push_back(a);
  return out;
}

}  // namespace atoral
