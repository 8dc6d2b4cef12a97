#include "atoral/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "atoral/lattice.hpp"

namespace atoral {

namespace {

using Ld = long double;
using CLd = std::complex<Ld>;

constexpr int kMaxIterations = 400;

struct Horner {
  CLd value, derivative;
  Ld magnitude;  // sum |a_k| |z|^k, for the rounding bound
};

Horner horner(const std::vector<CLd>& a, CLd z) {
  CLd p = a.back(), dp = 0;
  Ld mag = std::abs(a.back());
  const Ld r = std::abs(z);
  for (std::size_t k = a.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    mag = mag * r + std::abs(a[k]);
  }
  return {p, dp, mag};
}

std::vector<CLd> companion_seeds(const std::vector<CLd>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) {
    const CLd v = -a[static_cast<std::size_t>(i)] / a.back();
    c(i, n - 1) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  std::vector<CLd> out;
  if (solver.info() == Eigen::Success)
    for (int i = 0; i < n; ++i) out.emplace_back(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
  return out;
}

// Points on a circle with the Cauchy root radius, slightly rotated.
std::vector<CLd> circle_seeds(const std::vector<CLd>& a) {
  const int n = static_cast<int>(a.size()) - 1;
  Ld radius = 0;
  for (int k = 0; k < n; ++k)
    radius = std::max(radius, std::pow(std::abs(a[static_cast<std::size_t>(k)] / a.back()), Ld(1) / Ld(n - k)));
  radius = std::max(radius, Ld(1e-3));
  std::vector<CLd> out;
  for (int k = 0; k < n; ++k) out.push_back(std::polar(radius, Ld(2) * std::acos(Ld(-1)) * (Ld(k) + Ld(0.4)) / Ld(n)));
  return out;
}

// Returns the number of sweeps, or -1 if the corrections never settled.
int aberth(const std::vector<CLd>& a, std::vector<CLd>& z) {
  const std::size_t n = z.size();
  const Ld eps = std::numeric_limits<Ld>::epsilon();
  Ld best = std::numeric_limits<Ld>::infinity();
  int stalled = 0;
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    Ld worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Horner h = horner(a, z[i]);
      if (h.value == CLd(0)) continue;
      const CLd ratio = h.value / h.derivative;
      CLd s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) s += CLd(1) / (z[i] - z[j]);
      CLd w = ratio / (CLd(1) - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[i] -= w;
      worst = std::max(worst, std::abs(w) / std::max(Ld(1), std::abs(z[i])));
    }
    if (worst <= 4 * eps) return iter;
    if (worst < best / 2) {
      best = worst;
      stalled = 0;
    } else if (++stalled > 12 && best < Ld(1e-6)) {
      return iter;
    }
  }
  return -1;
}

}  // namespace

RootSet roots(const std::vector<std::complex<double>>& coeffs) {
  std::vector<CLd> a;
  for (const auto& c : coeffs) a.emplace_back(c.real(), c.imag());
  while (!a.empty() && a.back() == CLd(0)) a.pop_back();
  if (a.empty()) throw InputError("roots: zero polynomial");
  RootSet out;
  out.degree = static_cast<int>(a.size()) - 1;
  out.leading = std::complex<double>(static_cast<double>(a.back().real()), static_cast<double>(a.back().imag()));
  std::size_t zeros = 0;
  while (a[zeros] == CLd(0)) ++zeros;
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
  std::vector<CLd> z;
  if (a.size() == 2) {
    z.push_back(-a[0] / a[1]);
  } else if (a.size() > 2) {
    z = companion_seeds(a);
    int iters = static_cast<int>(z.size()) == static_cast<int>(a.size()) - 1 ? aberth(a, z) : -1;
    if (iters < 0) {
      z = circle_seeds(a);
      iters = aberth(a, z);
    }
    out.converged = iters >= 0;
    out.iterations = std::abs(iters);
  }
  const Ld gamma = 2 * static_cast<Ld>(a.size()) * std::numeric_limits<Ld>::epsilon();
  const std::size_t n = z.size();
  std::vector<std::pair<std::complex<double>, std::pair<double, double>>> all;
  for (std::size_t k = 0; k < zeros; ++k) all.push_back({0.0, {0.0, 0.0}});
  for (std::size_t i = 0; i < n; ++i) {
    const Horner h = horner(a, z[i]);
    CLd prod = a.back();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) prod *= z[i] - z[j];
    const Ld bound = std::abs(h.value) + gamma * h.magnitude;
    const Ld radius = prod == CLd(0) ? std::numeric_limits<Ld>::infinity() : Ld(n) * bound / std::abs(prod);
    all.push_back({std::complex<double>(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag())),
                   {static_cast<double>(std::abs(h.value)), static_cast<double>(radius)}});
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return x.first.real() != y.first.real() ? x.first.real() < y.first.real() : x.first.imag() < y.first.imag();
  });
  for (const auto& [r, e] : all) {
    out.roots.push_back(r);
    out.residuals.push_back(e.first);
    out.radii.push_back(e.second);
  }
  return out;
}

RootSet roots(const IntPoly& q) {
  std::vector<std::complex<double>> c;
  for (const auto& x : q.coeffs()) c.emplace_back(x.convert_to<double>(), 0.0);
  return roots(c);
}

CyclotomicSplit strip_cyclotomic_factors(const IntPoly& q) {
  if (q.is_zero()) throw InputError("strip_cyclotomic_factors: zero polynomial");
  CyclotomicSplit out{q, {}};
  const std::int64_t deg = q.degree();
  if (deg < 1) return out;
  // phi(k) >= sqrt(k / 2), so phi(k) <= deg forces k <= 2 deg^2.
  const std::int64_t limit = 2 * deg * deg;
  std::vector<std::int64_t> phi(static_cast<std::size_t>(limit) + 1);
  for (std::int64_t k = 0; k <= limit; ++k) phi[static_cast<std::size_t>(k)] = k;
  for (std::int64_t p = 2; p <= limit; ++p)
    if (phi[static_cast<std::size_t>(p)] == p)
      for (std::int64_t m = p; m <= limit; m += p) phi[static_cast<std::size_t>(m)] -= phi[static_cast<std::size_t>(m)] / p;
  double norm1 = 0.0;
  for (const auto& c : q.coeffs()) norm1 += abs(c).convert_to<double>();
  for (std::int64_t k = 1; k <= limit && out.rest.degree() > 0; ++k) {
    if (phi[static_cast<std::size_t>(k)] > out.rest.degree()) continue;
    const double x = 1.0 / static_cast<double>(k);
    if (std::abs(evaluate(out.rest, std::polar(1.0, 2.0 * std::acos(-1.0) * x))) > 1e-6 * norm1) continue;
    int mult = 0;
    while (out.rest.degree() > 0) {
      auto quotient = exact_quotient(out.rest, cyclotomic_polynomial(k));
      if (!quotient) break;
      out.rest = std::move(*quotient);
      ++mult;
    }
    if (mult) out.factors.emplace_back(k, mult);
  }
  return out;
}

int RootMultiset::degree() const {
  int d = 0;
  for (int m : multiplicity) d += m;
  return d;
}

RootMultiset root_multiset(const IntPoly& q) {
  if (q.is_zero()) throw InputError("root_multiset: zero polynomial");
  RootMultiset out;
  out.leading = q.leading().convert_to<double>();
  const CyclotomicSplit split = strip_cyclotomic_factors(q);
  for (const auto& [k, mult] : split.factors)
    for (std::int64_t j = 0; j < k; ++j)
      if (gcd(j, k) == 1) {
        out.roots.push_back(std::polar(1.0, 2.0 * std::acos(-1.0) * static_cast<double>(j) / static_cast<double>(k)));
        out.multiplicity.push_back(mult);
        out.radii.push_back(0.0);
        out.root_of_unity.push_back(true);
      }
  for (const auto& [factor, mult] : squarefree_decomposition(split.rest)) {
    const RootSet rs = roots(factor);
    out.converged = out.converged && rs.converged;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      out.roots.push_back(rs.roots[i]);
      out.multiplicity.push_back(mult);
      out.radii.push_back(rs.radii[i]);
      out.root_of_unity.push_back(false);
    }
  }
  return out;
}

AtoralReport essentially_atoral_1d(const IntPoly& q, double tol) {
  AtoralReport out;
  out.split = strip_cyclotomic_factors(q);
  out.min_distance = kInfinity;
  const IntPoly rest = squarefree_part(out.split.rest);
  if (rest.degree() < 1) return out;
  const RootSet rs = roots(rest);
  bool confirmed_on = false, all_off = true;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const double dist = std::abs(std::abs(rs.roots[i]) - 1.0);
    out.min_distance = std::min(out.min_distance, dist);
    if (dist < tol && dist + rs.radii[i] < tol) confirmed_on = true;
    if (dist - rs.radii[i] < 2 * tol) all_off = false;
  }
  out.verdict = confirmed_on ? AtoralVerdict::no : all_off ? AtoralVerdict::yes : AtoralVerdict::boundary;
  return out;
}

const char* to_string(AtoralVerdict v) {
  switch (v) {
    case AtoralVerdict::yes:
      return "yes";
    case AtoralVerdict::no:
      return "no";
    case AtoralVerdict::boundary:
      return "boundary";
  }
  return "boundary";
}

}  // namespace atoral
