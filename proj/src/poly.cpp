#include "atoral/poly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace atoral {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InputError("divmod: division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[i] / b.leading();
    quo[static_cast<std::size_t>(i - db)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InputError("exact_quotient: division by the zero polynomial");
  if (a.is_zero()) return IntPoly();
  const int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int i = a.degree(); i >= db; --i) {
    const BigInt& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % b.leading() != 0) return std::nullopt;
    const BigInt q = top / b.leading();
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& monic) {
  if (monic.is_zero() || monic.leading() != 1)
    throw InputError("rem_monic: divisor must be monic");
  const int dm = monic.degree();
  if (a.degree() < dm) return a;
  std::vector<BigInt> rem = a.coeffs();
  for (int i = a.degree(); i >= dm; --i) {
    const BigInt q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    for (int j = 0; j <= dm; ++j) rem[static_cast<std::size_t>(i - dm + j)] -= q * monic.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dm));
  return IntPoly(std::move(rem));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw InputError("pseudo_remainder: zero divisor");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<BigInt> rem = a.coeffs();
  int e = a.degree() - db + 1;
  const BigInt& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const BigInt top = rem[static_cast<std::size_t>(i)];
    for (auto& x : rem) x *= lb;
    --e;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= top * b.coeff(j);
  }
  BigInt scale = 1;
  for (int k = 0; k < e; ++k) scale *= lb;
  rem.resize(static_cast<std::size_t>(db));
  IntPoly r(std::move(rem));
  return r * scale;
}

BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& x : p.coeffs()) g = boost::multiprecision::gcd(g, x);
  return boost::multiprecision::abs(g);
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> c = p.coeffs();
  for (auto& x : c) x /= g;
  return IntPoly(std::move(c));
}

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
  IntPoly a = primitive_part(a_in), b = primitive_part(b_in);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return primitive_part(p);
  const IntPoly g = gcd(p, derivative(p));
  return primitive_part(*exact_quotient(primitive_part(p), g));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
  // P_k = squarefree part of p / (P_1 ... P_(k-1)) holds the roots of multiplicity >= k.
  std::vector<IntPoly> layers;
  IntPoly f = primitive_part(p);
  while (f.degree() > 0) {
    layers.push_back(squarefree_part(f));
    f = *exact_quotient(f, layers.back());
  }
  std::vector<std::pair<IntPoly, int>> out;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const IntPoly s = k + 1 < layers.size() ? *exact_quotient(layers[k], layers[k + 1]) : layers[k];
    if (s.degree() > 0) out.emplace_back(primitive_part(s), static_cast<int>(k) + 1);
  }
  return out;
}

namespace {

BigInt power(const BigInt& base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

IntPoly divide_exact_scalar(const IntPoly& p, const BigInt& s) {
  std::vector<BigInt> c = p.coeffs();
  for (auto& x : c) x /= s;
  return IntPoly(std::move(c));
}

}  // namespace

BigInt resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  if (a_in.degree() == 0) return power(a_in.leading(), b_in.degree());
  if (b_in.degree() == 0) return power(b_in.leading(), a_in.degree());

  const BigInt ca = content(a_in), cb = content(b_in);
  IntPoly A = divide_exact_scalar(a_in, ca);
  IntPoly B = divide_exact_scalar(b_in, cb);
  BigInt g = 1, h = 1, s = 1;
  const BigInt t = power(ca, B.degree()) * power(cb, A.degree());
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
  }
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    IntPoly R = pseudo_remainder(A, B);
    A = B;
    if (R.is_zero()) return 0;
    B = divide_exact_scalar(R, g * power(h, delta));
    g = A.leading();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = power(g, delta) / power(h, delta - 1);
    }
    if (B.degree() > 0) continue;
    const int da = A.degree();
    const BigInt hh = power(B.leading(), da) / power(h, da - 1);
    return s * t * hh;
  }
}

BigInt discriminant(const IntPoly& p) {
  const int n = p.degree();
  if (n < 1) throw InputError("discriminant: degree must be at least 1");
  BigInt r = resultant(p, derivative(p)) / p.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

const IntPoly& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw InputError("cyclotomic_polynomial: order must be positive");
  static std::mutex mutex;
  static std::map<std::int64_t, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly value = IntPoly::monomial(1, static_cast<int>(n)) - IntPoly::constant(1);
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    auto q = exact_quotient(value, cyclotomic_polynomial(d));
    value = std::move(*q);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(value)).first->second;
}

std::string to_string(const IntPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p.coeff(i);
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0) {
      if (c != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace atoral
