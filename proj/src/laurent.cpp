#include "atoral/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "atoral/matrix.hpp"

namespace atoral {

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, int dim) : s_(text), dim_(dim) {}

  LaurentPoly run() {
    LaurentPoly result(dim_);
    skip();
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = (s_[pos_++] == '-') ? -1 : 1;
    while (true) {
      parse_term(sign, result);
      skip();
      if (pos_ == s_.size()) break;
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      sign = (c == '-') ? -1 : 1;
      ++pos_;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("parse_poly: " + what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_with(const char* word) {
    skip();
    return s_.compare(pos_, std::char_traits<char>::length(word), word) == 0;
  }

  std::int64_t read_uint() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 17) fail("integer too large");
    return std::stoll(s_.substr(start, pos_ - start));
  }
  std::int64_t read_signed() {
    skip();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    int sign = 1;
    if (peek() == '-' || peek() == '+') sign = (s_[pos_++] == '-') ? -1 : 1;
    const std::int64_t v = sign * read_uint();
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return v;
  }
  std::int64_t read_optional_power() {
    if (peek() != '^') return 1;
    ++pos_;
    return read_signed();
  }

  Rational read_rational() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    BigInt num(s_.substr(start, pos_ - start).empty() ? std::string("0") : s_.substr(start, pos_ - start));
    BigInt den = 1;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      const std::size_t fs = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      for (std::size_t i = fs; i < pos_; ++i) {
        num = num * 10 + (s_[i] - '0');
        den *= 10;
      }
      if (fs == pos_ && start + 1 == fs) fail("malformed number");
    } else if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      const std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) fail("expected a denominator");
      den = BigInt(s_.substr(ds, pos_ - ds));
      if (den == 0) fail("zero denominator");
    }
    if (start == pos_) fail("expected a number");
    return Rational(num, den);
  }

  void parse_factor(CycloNumber& coeff, ExponentVector& e) {
    const char c = peek();
    if (starts_with("zeta(")) {
      pos_ += 5;
      const std::int64_t m = read_uint();
      if (m < 1) fail("zeta conductor must be positive");
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      coeff *= CycloNumber::root_of_unity(m, read_optional_power());
    } else if (c == 'x') {
      ++pos_;
      std::int64_t index = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        index = read_uint();
      } else if (dim_ != 1) {
        fail("variable needs an index");
      }
      if (index < 1 || index > dim_) fail("variable x" + std::to_string(index) + " exceeds dimension");
      e[static_cast<std::size_t>(index - 1)] += read_optional_power();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const Rational q = read_rational();
      const std::int64_t p = read_optional_power();
      if (p < 0 && q == 0) fail("zero to a negative power");
      Rational v = 1;
      for (std::int64_t i = 0; i < std::abs(p); ++i) v *= q;
      coeff *= (p < 0 ? Rational(1) / v : v);
    } else {
      fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
    }
  }

  void parse_term(int sign, LaurentPoly& out) {
    CycloNumber coeff(static_cast<std::int64_t>(sign));
    ExponentVector e(static_cast<std::size_t>(dim_), 0);
    parse_factor(coeff, e);
    while (peek() == '*') {
      ++pos_;
      parse_factor(coeff, e);
    }
    out.add_term(e, coeff);
  }

  const std::string& s_;
  int dim_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const ExponentVector& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i + 1);
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

LaurentPoly parse_poly(const std::string& text, int dim) {
  if (dim < 1) throw InputError("parse_poly: dimension must be positive");
  return unify_conductor(PolyParser(text, dim).run());
}

std::string to_string(const LaurentPoly& p_in) {
  if (p_in.is_zero()) return "0";
  const LaurentPoly p = unify_conductor(p_in);
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = monomial_text(e);
    const auto& coords = c.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      Rational q = coords[i];
      if (q == 0) continue;
      const bool neg = q < 0;
      if (neg) q = -q;
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      if (q != 1 || (i == 0 && mono.empty())) factors.push_back(q.str());
      if (i > 0)
        factors.push_back("zeta(" + std::to_string(c.conductor()) + ")" +
                          (i > 1 ? "^" + std::to_string(i) : ""));
      if (!mono.empty()) factors.push_back(mono);
      for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
    }
  }
  return os.str();
}

ComplexLaurent to_complex(const LaurentPoly& p, std::int64_t sigma) {
  ComplexLaurent r(p.dim());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.to_complex(sigma));
  return r;
}

std::int64_t conductor(const LaurentPoly& p) {
  std::int64_t l = 1;
  for (const auto& [e, c] : p.terms()) l = lcm(l, c.conductor());
  return l;
}

LaurentPoly unify_conductor(const LaurentPoly& p) {
  const std::int64_t l = conductor(p);
  LaurentPoly r(p.dim());
  for (const auto& [e, c] : p.terms()) r.add_term(e, c.embed(l));
  return r;
}

LaurentPoly twist(const LaurentPoly& p, const TorsionPoint& eta) {
  if (eta.dim() != p.dim()) throw InputError("twist: dimension mismatch");
  LaurentPoly r(p.dim());
  for (const auto& [e, c] : p.terms())
    r.add_term(e, c * CycloNumber::root_of_unity(eta.order(), eta.pairing(e)));
  return unify_conductor(r);
}

LaurentPoly involution_reverse(const LaurentPoly& p) {
  LaurentPoly r(p.dim());
  for (const auto& [e, c] : p.terms()) {
    ExponentVector f = e;
    for (auto& x : f) x = -x;
    r.add_term(f, c.conj());
  }
  return r;
}

AsymmetryReport is_asymmetric(const LaurentPoly& p) {
  if (p.is_zero()) throw InputError("is_asymmetric: zero polynomial");
  const LaurentPoly r = involution_reverse(p);
  // A monomial shift preserves the lexicographic order, so leading terms match.
  const ExponentVector& lp = p.terms().begin()->first;
  const ExponentVector& lr = r.terms().begin()->first;
  ExponentVector shift(lp.size());
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lr[i] - lp[i];
  for (int s : {1, -1}) {
    const LaurentPoly candidate = LaurentPoly::monomial(shift, CycloNumber(static_cast<std::int64_t>(s))) * p;
    if (candidate == r) return {false, s, shift};
  }
  return {true, 0, {}};
}

double coeff_sup_norm(const LaurentPoly& p) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c.to_complex()));
  return m;
}

DegreeInfo total_degree(const LaurentPoly& p) {
  DegreeInfo info;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t s = 0;
    for (auto x : e) s += std::abs(x);
    info.laurent = std::max(info.laurent, s);
  }
  const LaurentPoly cleared = clear_monomial(p);
  for (const auto& [e, c] : cleared.terms()) {
    std::int64_t s = 0;
    for (auto x : e) s += x;
    info.polynomial = std::max(info.polynomial, s);
  }
  return info;
}

bool has_rational_coefficients(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second.is_rational(); });
}

bool has_integer_coefficients(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) {
    return t.second.is_rational() && boost::multiprecision::denominator(t.second.rational_value()) == 1;
  });
}

double height_rational(const LaurentPoly& p) {
  if (!has_rational_coefficients(p)) throw InputError("height_rational: non-rational coefficient present");
  if (p.is_zero()) throw InputError("height_rational: zero polynomial");
  BigInt den = 1;
  for (const auto& [e, c] : p.terms())
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c.rational_value()));
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& [e, c] : p.terms()) {
    ints.push_back(boost::multiprecision::abs(boost::multiprecision::numerator(c.rational_value() * Rational(den))));
    g = boost::multiprecision::gcd(g, ints.back());
  }
  BigInt best = 0;
  for (const auto& x : ints) best = std::max(best, BigInt(x / g));
  return std::log(static_cast<double>(best));
}

LaurentPoly auxiliary_hat(const LaurentPoly& p, int l) {
  if (l < 1 || l > p.dim() - 1) throw InputError("auxiliary_hat: l must lie in 1..d-1");
  std::map<ExponentVector, LaurentPoly> groups;
  for (const auto& [e, c] : p.terms()) {
    ExponentVector tail(e.begin() + l, e.end());
    ExponentVector head(e.begin(), e.begin() + l);
    groups.try_emplace(tail, LaurentPoly(l)).first->second.add_term(head, c);
  }
  LaurentPoly hat(l);
  for (const auto& [tail, q] : groups) hat += q * involution_reverse(q);
  return unify_conductor(hat);
}

namespace {

LaurentPoly cleared_change(const LaurentPoly& p, const IntMatrix& v) {
  if (v.rows() != p.dim() || v.cols() != p.dim()) throw InputError("specialize_PVeta: V must be d x d");
  const IntMatrix w = inverse_unimodular(v);
  return clear_monomial(substitute_monomial(p, IntMatrix(w.transpose())));
}

}  // namespace

LaurentPoly specialize_PVeta(const LaurentPoly& p, const IntMatrix& v, int l, const TorsionPoint& z) {
  const int d = p.dim();
  if (l < 0 || l > d - 1) throw InputError("specialize_PVeta: l must lie in 0..d-1");
  const LaurentPoly q = cleared_change(p, v);
  if (l == 0) return q;
  if (z.dim() != l) throw InputError("specialize_PVeta: z must have l coordinates");
  LaurentPoly r(d - l);
  for (const auto& [e, c] : q.terms()) {
    ExponentVector head(e.begin(), e.begin() + l);
    ExponentVector tail(e.begin() + l, e.end());
    r.add_term(tail, c * CycloNumber::root_of_unity(z.order(), z.pairing(head)));
  }
  return unify_conductor(r);
}

ComplexLaurent specialize_PVeta(const LaurentPoly& p, const IntMatrix& v, int l,
                                const std::vector<std::complex<double>>& z) {
  const int d = p.dim();
  if (l < 0 || l > d - 1) throw InputError("specialize_PVeta: l must lie in 0..d-1");
  if (static_cast<int>(z.size()) != l) throw InputError("specialize_PVeta: z must have l coordinates");
  const LaurentPoly q = cleared_change(p, v);
  ComplexLaurent r(d - l);
  for (const auto& [e, c] : q.terms()) {
    std::complex<double> value = c.to_complex();
    for (int i = 0; i < l; ++i) value *= ipow(z[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    r.add_term(ExponentVector(e.begin() + l, e.end()), value);
  }
  return r;
}

IntPoly to_int_poly(const LaurentPoly& p, std::int64_t* shift) {
  if (p.dim() != 1) throw InputError("to_int_poly: polynomial must be univariate");
  if (!has_integer_coefficients(p)) throw InputError("to_int_poly: coefficients must be integers");
  if (p.is_zero()) {
    if (shift) *shift = 0;
    return IntPoly();
  }
  ExponentVector s;
  const LaurentPoly q = clear_monomial(p, &s);
  if (shift) *shift = s[0];
  std::vector<BigInt> c(static_cast<std::size_t>(q.terms().begin()->first[0]) + 1);
  for (const auto& [e, v] : q.terms())
    c[static_cast<std::size_t>(e[0])] = boost::multiprecision::numerator(v.rational_value());
  return IntPoly(std::move(c));
}

LaurentPoly from_int_poly(const IntPoly& q) {
  LaurentPoly p(1);
  for (int i = 0; i <= q.degree(); ++i) p.add_term({i}, CycloNumber(Rational(q.coeff(i))));
  return p;
}

std::vector<std::complex<double>> fiber_coefficients(const ComplexLaurent& p,
                                                     const std::vector<std::complex<double>>& prefix,
                                                     std::int64_t* min_exponent) {
  const int d = p.dim();
  if (static_cast<int>(prefix.size()) != d - 1) throw InputError("fiber_coefficients: prefix size must be d-1");
  if (p.is_zero()) {
    if (min_exponent) *min_exponent = 0;
    return {};
  }
  std::int64_t lo = p.terms().begin()->first[static_cast<std::size_t>(d - 1)], hi = lo;
  for (const auto& [e, c] : p.terms()) {
    lo = std::min(lo, e.back());
    hi = std::max(hi, e.back());
  }
  std::vector<std::complex<double>> out(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> v = c;
    for (int i = 0; i < d - 1; ++i)
      if (e[static_cast<std::size_t>(i)] != 0) v *= ipow(prefix[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    out[static_cast<std::size_t>(e.back() - lo)] += v;
  }
  if (min_exponent) *min_exponent = lo;
  return out;
}

}  // namespace atoral
