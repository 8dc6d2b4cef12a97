#include "atoral/torsion.hpp"

#include <numbers>
#include <sstream>

#include "atoral/numtheory.hpp"

namespace atoral {

TorsionPoint::TorsionPoint(std::vector<std::int64_t> residues, std::int64_t denominator)
    : b_(std::move(residues)), n_(denominator) {
  if (b_.empty()) throw InputError("TorsionPoint: dimension must be at least 1");
  if (n_ < 1) throw InputError("TorsionPoint: denominator must be positive");
  std::int64_t g = n_;
  for (auto& x : b_) {
    x = mod(x, n_);
    g = gcd(g, x);
  }
  n_ /= g;
  for (auto& x : b_) x /= g;
}

TorsionPoint TorsionPoint::identity(int dim) {
  return TorsionPoint(std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0), 1);
}

TorsionPoint TorsionPoint::parse(const std::string& text) {
  std::vector<std::int64_t> nums;
  std::int64_t denom = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto slash = item.find('/');
    try {
      std::size_t used = 0;
      const std::int64_t num = std::stoll(item.substr(0, slash), &used);
      std::int64_t den = 1;
      if (slash != std::string::npos) den = std::stoll(item.substr(slash + 1));
      if (den < 1) throw InputError("non-positive denominator");
      if (denom != 0 && den != denom)
        throw InputError("torsion point '" + text + "' needs a common denominator");
      denom = den;
      nums.push_back(num);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const InputError*>(&e)) throw;
      throw InputError("torsion point: cannot parse '" + item + "'");
    }
  }
  if (nums.empty()) throw InputError("torsion point: empty input");
  return TorsionPoint(std::move(nums), denom);
}

std::int64_t TorsionPoint::pairing(const ExponentVector& a) const {
  if (a.size() != b_.size()) throw InputError("TorsionPoint::pairing: dimension mismatch");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < b_.size(); ++i) acc = mod(acc + mod_mul(b_[i], a[i], n_), n_);
  return acc;
}

TorsionPoint TorsionPoint::galois(std::int64_t sigma) const {
  std::vector<std::int64_t> c(b_.size());
  for (std::size_t i = 0; i < b_.size(); ++i) c[i] = mod_mul(b_[i], sigma, n_);
  return TorsionPoint(std::move(c), n_);
}

TorsionPoint TorsionPoint::power(const IntMatrix& a) const {
  if (a.rows() != dim()) throw InputError("TorsionPoint::power: matrix row count must equal d");
  std::vector<std::int64_t> c(static_cast<std::size_t>(a.cols()), 0);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      c[static_cast<std::size_t>(j)] =
          mod(c[static_cast<std::size_t>(j)] + mod_mul(b_[static_cast<std::size_t>(i)], a(i, j), n_), n_);
  return TorsionPoint(std::move(c), n_);
}

TorsionPoint TorsionPoint::inverse() const { return galois(-1); }

TorsionPoint TorsionPoint::slice(int first, int count) const {
  if (first < 0 || count < 1 || first + count > dim()) throw InputError("TorsionPoint::slice: bad range");
  return TorsionPoint(std::vector<std::int64_t>(b_.begin() + first, b_.begin() + first + count), n_);
}

std::vector<double> TorsionPoint::coordinates() const {
  std::vector<double> x;
  for (auto v : b_) x.push_back(static_cast<double>(v) / static_cast<double>(n_));
  return x;
}

std::vector<std::complex<double>> TorsionPoint::to_complex() const {
  std::vector<std::complex<double>> z;
  for (double x : coordinates()) z.push_back(std::polar(1.0, 2.0 * std::numbers::pi * x));
  return z;
}

std::string TorsionPoint::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < b_.size(); ++i) os << (i ? "," : "") << b_[i] << "/" << n_;
  return os.str();
}

TorsionPoint operator*(const TorsionPoint& a, const TorsionPoint& b) {
  if (a.dim() != b.dim()) throw InputError("TorsionPoint product: dimension mismatch");
  const std::int64_t n = lcm(a.n_, b.n_);
  std::vector<std::int64_t> c(a.b_.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = mod(a.b_[i] * (n / a.n_) + b.b_[i] * (n / b.n_), n);
  return TorsionPoint(std::move(c), n);
}

}  // namespace atoral
