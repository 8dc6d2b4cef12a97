#ifndef ATORAL_SUMMATION_HPP
#define ATORAL_SUMMATION_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace atoral {

/// Neumaier-compensated running sum; terms are added in call order.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class CompensatedComplexSum {
 public:
  void add(std::complex<double> z) {
    re_.add(z.real());
    im_.add(z.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

/// e(j / n) = exp(2 pi i j / n) with j reduced mod n first.
inline std::complex<double> unit_root(std::int64_t j, std::int64_t n) {
  std::int64_t r = j % n;
  if (r < 0) r += n;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

}  // namespace atoral

#endif  // ATORAL_SUMMATION_HPP
