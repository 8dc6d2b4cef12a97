#include "atoral/mahler.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "atoral/lattice.hpp"
#include "atoral/numtheory.hpp"
#include "atoral/roots.hpp"
#include "atoral/summation.hpp"

namespace atoral {

namespace {

constexpr std::size_t kMaxNodes = std::size_t{1} << 22;
constexpr double kNearCircle = 1e-6;
constexpr double kDegenerate = 1e-13;

double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

struct FiberValue {
  double value = 0.0;
  double err = 0.0;
  int near = 0;
  bool degenerate = false;
};

// With roots_only the log of the leading coefficient is dropped, leaving sum log+ |z_i|.
FiberValue fiber_value(const ComplexLaurent& p, const std::vector<std::complex<double>>& prefix, bool roots_only) {
  const auto c = fiber_coefficients(p, prefix);
  double scale = 0.0;
  for (const auto& x : c) scale = std::max(scale, std::abs(x));
  if (scale == 0.0 || std::abs(c.back()) <= kDegenerate * scale) return {0.0, 0.0, 0, true};
  const MeasureResult r = mahler_univariate(c);
  const double value = roots_only ? r.value - std::log(std::abs(c.back())) : r.value;
  return {value, r.est_error, r.near_circle, false};
}

// Coefficient of the top power of the last variable, in the other variables.
ComplexLaurent leading_part(const ComplexLaurent& p) {
  const std::size_t last = static_cast<std::size_t>(p.dim() - 1);
  std::int64_t top = std::numeric_limits<std::int64_t>::min();
  for (const auto& [e, c] : p.terms()) top = std::max(top, e[last]);
  ComplexLaurent out(p.dim() - 1);
  for (const auto& [e, c] : p.terms())
    if (e[last] == top) out.add_term(ExponentVector(e.begin(), e.end() - 1), c);
  return out;
}

std::complex<double> unit(double x) { return std::polar(1.0, 2.0 * std::numbers::pi * x); }

struct Level {
  double value = 0.0;
  double fiber_err = 0.0;
  int near = 0;
  std::size_t perturbed = 0;
};

// Tensor midpoint rule with n nodes per outer coordinate.
Level midpoint_level(const ComplexLaurent& p, std::int64_t n, bool roots_only) {
  const int outer = p.dim() - 1;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(outer), 0);
  std::vector<std::complex<double>> prefix(static_cast<std::size_t>(outer));
  CompensatedSum sum, err;
  Level out;
  std::size_t count = 0;
  while (true) {
    FiberValue fv;
    for (const double offset : {0.5, 0.75, 0.25, 0.625}) {
      for (int j = 0; j < outer; ++j)
        prefix[static_cast<std::size_t>(j)] =
            unit((static_cast<double>(idx[static_cast<std::size_t>(j)]) + offset) / static_cast<double>(n));
      fv = fiber_value(p, prefix, roots_only);
      if (!fv.degenerate) break;
      ++out.perturbed;
    }
    sum.add(fv.value);
    err.add(fv.err);
    out.near = std::max(out.near, fv.near);
    ++count;
    int j = 0;
    while (j < outer && ++idx[static_cast<std::size_t>(j)] == n) idx[static_cast<std::size_t>(j++)] = 0;
    if (j == outer) break;
  }
  out.value = sum.value() / static_cast<double>(count);
  out.fiber_err = err.value() / static_cast<double>(count);
  return out;
}

std::size_t ipow_size(std::int64_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

std::int64_t korobov_multiplier(std::int64_t n) {
  auto a = static_cast<std::int64_t>(std::llround(static_cast<double>(n) / std::numbers::phi));
  for (std::int64_t step = 0;; ++step)
    for (std::int64_t c : {a - step, a + step})
      if (c >= 1 && gcd(c, n) == 1) return c;
}

std::size_t num_samples_per_dim(std::size_t n, int dim) {
  auto m = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), 1.0 / dim) + 1e-9));
  return std::max<std::size_t>(m, 1);
}

// Grid midpoints or rank-1 lattice points.
std::vector<std::vector<double>> sample_points(int dim, std::size_t n, Sampler sampler) {
  if (sampler == Sampler::qmc) return rank1_lattice(dim, n, dim == 2 ? QmcGenerator::fibonacci : QmcGenerator::korobov);
  const std::size_t m = num_samples_per_dim(n, dim);
  std::vector<std::vector<double>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
  while (true) {
    std::vector<double> x;
    for (auto k : idx) x.push_back((static_cast<double>(k) + 0.5) / static_cast<double>(m));
    out.push_back(std::move(x));
    int j = 0;
    while (j < dim && ++idx[static_cast<std::size_t>(j)] == m) idx[static_cast<std::size_t>(j++)] = 0;
    if (j == dim) break;
  }
  return out;
}

std::vector<std::complex<double>> to_torus(const std::vector<double>& x) {
  std::vector<std::complex<double>> z;
  for (double t : x) z.push_back(unit(t));
  return z;
}

}  // namespace

const char* to_string(MahlerMethod m) {
  switch (m) {
    case MahlerMethod::jensen:
      return "jensen";
    case MahlerMethod::recursive:
      return "recursive";
    case MahlerMethod::qmc:
      return "qmc";
  }
  return "jensen";
}

MeasureResult mahler_univariate(const std::vector<std::complex<double>>& coeffs) {
  const RootSet rs = roots(coeffs);
  MeasureResult out;
  CompensatedSum sum;
  sum.add(std::log(std::abs(rs.leading)));
  double err = 0.0;
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    const double r = std::abs(rs.roots[i]), rad = rs.radii[i];
    sum.add(log_plus(r));
    err += log_plus(r + rad) - log_plus(std::max(r - rad, 0.0));
    if (std::abs(r - 1.0) < kNearCircle) ++out.near_circle;
  }
  out.value = sum.value();
  out.est_error = rs.converged ? err + 1e-15 * std::abs(out.value) : kInfinity;
  return out;
}

MeasureResult mahler_univariate(const IntPoly& q) {
  const RootMultiset rm = root_multiset(q);
  MeasureResult out;
  CompensatedSum sum;
  sum.add(std::log(std::abs(rm.leading)));
  double err = 0.0;
  for (std::size_t i = 0; i < rm.roots.size(); ++i) {
    const double r = std::abs(rm.roots[i]), rad = rm.radii[i], mult = rm.multiplicity[i];
    if (rm.root_of_unity[i]) {
      out.near_circle += rm.multiplicity[i];
      continue;
    }
    sum.add(mult * log_plus(r));
    err += mult * (log_plus(r + rad) - log_plus(std::max(r - rad, 0.0)));
    if (std::abs(r - 1.0) < kNearCircle) out.near_circle += rm.multiplicity[i];
  }
  out.value = sum.value();
  out.est_error = rm.converged ? err + 1e-15 * std::abs(out.value) : kInfinity;
  return out;
}

MeasureResult mahler_univariate(const ComplexLaurent& p) {
  if (p.dim() != 1) throw InputError("mahler_univariate: polynomial must be univariate");
  if (p.is_zero()) throw InputError("mahler_univariate: zero polynomial");
  return mahler_univariate(fiber_coefficients(p, {}));
}

MeasureResult mahler_univariate(const LaurentPoly& p) {
  if (p.dim() == 1 && !p.is_zero() && has_integer_coefficients(p)) return mahler_univariate(to_int_poly(p));
  return mahler_univariate(to_complex(p));
}

MeasureResult mahler_multivariate(const ComplexLaurent& p, int nodes_per_dim, double tol) {
  if (p.is_zero()) throw InputError("mahler_multivariate: zero polynomial");
  if (nodes_per_dim < 1) throw InputError("mahler_multivariate: nodes_per_dim must be positive");
  if (p.dim() == 1) {
    MeasureResult r = mahler_univariate(p);
    r.method = MahlerMethod::recursive;
    return r;
  }
  MeasureResult out;
  out.method = MahlerMethod::recursive;
  const int outer = p.dim() - 1;
  // m(P) = m(lead) + integral of sum log+ |z_i| when the leading coefficient is not a monomial.
  const ComplexLaurent lead = leading_part(p);
  const bool split = lead.num_terms() > 1;
  MeasureResult lead_measure;
  if (split) lead_measure = mahler_multivariate(lead, nodes_per_dim, tol);
  std::int64_t n = nodes_per_dim;
  double previous = 0.0;
  for (int depth = 1;; ++depth) {
    Level lv = midpoint_level(p, n, split);
    if (split) {
      lv.value += lead_measure.value;
      lv.fiber_err += lead_measure.est_error;
    }
    out.value = lv.value;
    out.depth = depth;
    out.nodes = ipow_size(n, outer);
    out.near_circle = lv.near;
    out.perturbed = lv.perturbed;
    const double delta = std::abs(lv.value - previous);
    previous = lv.value;
    if (depth > 1 && (delta < tol || ipow_size(2 * n, outer) > kMaxNodes)) {
      out.est_error = delta + lv.fiber_err;
      break;
    }
    if (depth == 1 && ipow_size(2 * n, outer) > kMaxNodes) {
      out.est_error = kInfinity;
      break;
    }
    n *= 2;
  }
  return out;
}

MeasureResult mahler_multivariate(const LaurentPoly& p, int nodes_per_dim, double tol) {
  return mahler_multivariate(to_complex(p), nodes_per_dim, tol);
}

std::vector<std::vector<double>> rank1_lattice(int dim, std::size_t n_points, QmcGenerator gen) {
  if (dim < 1 || n_points < 1) throw InputError("rank1_lattice: bad size");
  std::int64_t n = static_cast<std::int64_t>(n_points);
  std::vector<std::int64_t> g(static_cast<std::size_t>(dim), 1);
  if (gen == QmcGenerator::fibonacci) {
    if (dim > 2) throw InputError("rank1_lattice: the Fibonacci lattice is two-dimensional");
    std::int64_t a = 1, b = 1;
    while (a + b <= n) {
      const std::int64_t c = a + b;
      a = b;
      b = c;
    }
    n = b;
    if (dim == 2) g[1] = a;
  } else {
    const std::int64_t a = korobov_multiplier(n);
    for (int j = 1; j < dim; ++j) g[static_cast<std::size_t>(j)] = mod_mul(g[static_cast<std::size_t>(j - 1)], a, n);
  }
  std::vector<std::vector<double>> pts(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    auto& x = pts[static_cast<std::size_t>(i)];
    for (int j = 0; j < dim; ++j)
      x.push_back(static_cast<double>(mod_mul(i, g[static_cast<std::size_t>(j)], n)) / static_cast<double>(n));
  }
  return pts;
}

MeasureResult mahler_qmc(const LaurentPoly& p, std::size_t n_points, QmcGenerator gen) {
  if (p.is_zero()) throw InputError("mahler_qmc: zero polynomial");
  const ComplexLaurent cp = to_complex(p);
  MeasureResult out;
  out.method = MahlerMethod::qmc;
  if (gen == QmcGenerator::fibonacci && p.dim() > 2) gen = QmcGenerator::korobov;
  auto run = [&](std::size_t n, std::size_t* skipped) {
    const auto pts = rank1_lattice(p.dim(), n, gen);
    CompensatedSum sum;
    std::size_t used = 0;
    for (const auto& x : pts) {
      const double v = std::abs(evaluate(cp, to_torus(x)));
      if (v == 0.0) {
        ++*skipped;
        continue;
      }
      sum.add(std::log(v));
      ++used;
    }
    return std::make_pair(used ? sum.value() / static_cast<double>(used) : 0.0, pts.size());
  };
  const auto [value, size] = run(n_points, &out.skipped);
  std::size_t ignored = 0;
  const auto coarse = run(std::max<std::size_t>(size * 5 / 8, 1), &ignored);
  out.value = value;
  out.nodes = size;
  out.est_error = std::abs(value - coarse.first);
  return out;
}

MeasureResult mahler(const LaurentPoly& p, double tol) {
  return p.dim() == 1 ? mahler_univariate(p) : mahler_multivariate(p, 64, tol);
}

MahlerBounds mahler_bounds(const LaurentPoly& p) {
  if (p.is_zero()) throw InputError("mahler_bounds: zero polynomial");
  MahlerBounds b;
  b.k = p.num_terms();
  const double log_norm = std::log(coeff_sup_norm(p));
  const double k = static_cast<double>(std::max<std::size_t>(b.k, 2));
  b.upper = log_norm + 0.5 * std::log(static_cast<double>(b.k));
  b.lower_ds = log_norm - (k - 2.0) * std::numbers::ln2;
  return b;
}

LawtonRecord lawton_experiment(const LaurentPoly& p, const ExponentVector& a, double tol) {
  if (static_cast<int>(a.size()) != p.dim()) throw InputError("lawton_experiment: exponent length mismatch");
  if (p.is_zero()) throw InputError("lawton_experiment: zero polynomial");
  LawtonRecord rec;
  rec.a = a;
  IntMatrix column(p.dim(), 1);
  for (int i = 0; i < p.dim(); ++i) column(i, 0) = a[static_cast<std::size_t>(i)];
  rec.m_specialized = mahler_univariate(substitute_monomial(p, column)).value;
  rec.m_P = mahler(p, tol).value;
  rec.abs_error = std::abs(rec.m_specialized - rec.m_P);
  rec.rho = std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; }) ? 0.0 : rho(a);
  rec.deg_P = total_degree(p).polynomial;
  rec.k = p.num_terms();
  rec.flagged = !(rec.rho > static_cast<double>(rec.deg_P));
  const double d = p.dim();
  rec.bound_shape = rec.k < 2 || rec.rho == 0.0
                        ? 0.0
                        : std::pow(static_cast<double>(std::max<std::int64_t>(rec.deg_P, 1)), 16.0 * d * d) /
                              std::pow(rec.rho, 1.0 / (16.0 * static_cast<double>(rec.k - 1)));
  return rec;
}

VolumeEstimate volume_S(const LaurentPoly& p, double r, std::size_t n_samples, Sampler sampler) {
  if (!(r > 0.0)) throw InputError("volume_S: r must be positive");
  const ComplexLaurent cp = to_complex(p);
  const auto pts = sample_points(p.dim(), n_samples, sampler);
  std::size_t hits = 0;
  for (const auto& x : pts)
    if (std::abs(evaluate(cp, to_torus(x))) < r) ++hits;
  VolumeEstimate out;
  out.samples = pts.size();
  out.estimate = static_cast<double>(hits) / static_cast<double>(pts.size());
  out.band = 2.0 * std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(pts.size()));
  if (p.dim() == 1 && p.num_terms() >= 2)
    out.shape = std::pow(r, 1.0 / static_cast<double>(p.num_terms() - 1));
  return out;
}

LogIntegral log_integral_over_S(const LaurentPoly& p, double r, std::size_t n_samples) {
  if (!(r > 0.0 && r <= 1.0)) throw InputError("log_integral_over_S: r must lie in (0, 1]");
  if (p.is_zero()) throw InputError("log_integral_over_S: zero polynomial");
  const double scale = coeff_sup_norm(p);
  const ComplexLaurent cp = to_complex(p);
  const auto pts = rank1_lattice(p.dim(), n_samples, p.dim() == 2 ? QmcGenerator::fibonacci : QmcGenerator::korobov);
  CompensatedSum sum;
  for (const auto& x : pts) {
    const double v = std::abs(evaluate(cp, to_torus(x))) / scale;
    if (v > 0.0 && v < r) sum.add(std::abs(std::log(v)));
  }
  LogIntegral out;
  out.samples = pts.size();
  out.estimate = sum.value() / static_cast<double>(pts.size());
  if (p.num_terms() >= 2) out.shape = std::pow(r, 1.0 / (4.0 * static_cast<double>(p.num_terms() - 1)));
  return out;
}

HolderRecord holder_probe(const LaurentPoly& p, const LaurentPoly& q, double tol) {
  if (q.is_zero()) throw InputError("holder_probe: Q must be nonzero");
  if (p.dim() != q.dim()) throw InputError("holder_probe: dimension mismatch");
  HolderRecord out;
  out.delta = coeff_sup_norm(p - q) / coeff_sup_norm(q);
  if (out.delta > 0.5) throw InputError("holder_probe: |P - Q| / |Q| exceeds 1/2");
  out.m_Q = mahler(q, tol).value;
  out.m_P = p.is_zero() ? -kInfinity : mahler(p, tol).value;
  out.diff = out.m_P - out.m_Q;
  const std::size_t k = std::max<std::size_t>(q.num_terms(), 2);
  out.shape = std::pow(out.delta, 1.0 / (8.0 * static_cast<double>(k - 1)));
  return out;
}

}  // namespace atoral
