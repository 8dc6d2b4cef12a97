#include "atoral/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "atoral/mahler.hpp"
#include "atoral/numtheory.hpp"
#include "atoral/orbit.hpp"
#include "atoral/summation.hpp"
#include "atoral/torus.hpp"

namespace atoral {

namespace {

constexpr std::size_t kMaxConjugates = 1'000'000;
constexpr std::size_t kExactCap = 64;
constexpr double kVanishingFiber = 1e-13;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_coordinate(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) throw InputError("PointSet: empty coordinate");
  const auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const double v = std::stod(t, &used);
      if (used != t.size()) throw InputError("PointSet: bad coordinate '" + t + "'");
      return v;
    }
    const BigInt p(trim(t.substr(0, slash))), q(trim(t.substr(slash + 1)));
    if (q == 0) throw InputError("PointSet: zero denominator in '" + t + "'");
    return Rational(p, q).convert_to<double>();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("PointSet: bad coordinate '" + t + "'");
  }
}

// Sorted distinct values of one coordinate over the selected points.
std::vector<double> distinct_coords(const PointSet& ps, const std::vector<std::size_t>& sel, int j) {
  std::vector<double> v;
  v.reserve(sel.size());
  for (auto i : sel) v.push_back(ps[i][static_cast<std::size_t>(j)]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct Scan {
  const PointSet& ps;
  double n;
  int last;
  double best = 0.0;
  std::size_t boxes = 0;

  // Largest count/n - volume over closed boxes; faces through points.
  void excess(const std::vector<std::size_t>& sel, int j, double vol) {
    if (sel.empty()) return;
    if (j == last) {
      // sel is sorted by the last coordinate.
      double best_left = -std::numeric_limits<double>::infinity();
      std::size_t k = 0, before = 0;
      while (k < sel.size()) {
        const double z = ps[sel[k]][static_cast<std::size_t>(last)];
        std::size_t end = k;
        while (end < sel.size() && ps[sel[end]][static_cast<std::size_t>(last)] == z) ++end;
        best_left = std::max(best_left, -static_cast<double>(before) / n + vol * z);
        const double through = static_cast<double>(end) / n - vol * z;
        best = std::max(best, through + best_left);
        boxes += k + 1;
        before = end;
        k = end;
      }
      return;
    }
    const auto c = distinct_coords(ps, sel, j);
    std::vector<std::size_t> inner;
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a; b < c.size(); ++b) {
        inner.clear();
        for (auto i : sel) {
          const double x = ps[i][static_cast<std::size_t>(j)];
          if (x >= c[a] && x <= c[b]) inner.push_back(i);
        }
        excess(inner, j + 1, vol * (c[b] - c[a]));
      }
  }

  // Largest volume - count/n over open boxes; faces through points or the boundary.
  void deficit(const std::vector<std::size_t>& sel, int j, double vol) {
    if (j == last) {
      std::vector<double> u{0.0};
      std::vector<std::size_t> at_or_below{0};  // points with z <= u
      std::size_t k = 0;
      while (k < sel.size()) {
        const double z = ps[sel[k]][static_cast<std::size_t>(last)];
        std::size_t end = k;
        while (end < sel.size() && ps[sel[end]][static_cast<std::size_t>(last)] == z) ++end;
        if (z == 0.0) {
          at_or_below[0] = end;
        } else {
          u.push_back(z);
          at_or_below.push_back(end);
        }
        k = end;
      }
      u.push_back(1.0);
      at_or_below.push_back(sel.size());
      // Open (u_i, u_j) holds at_or_below[j - 1] - at_or_below[i] points for j > i.
      double best_left = -std::numeric_limits<double>::infinity();
      for (std::size_t jj = 1; jj < u.size(); ++jj) {
        const std::size_t ii = jj - 1;
        best_left = std::max(best_left, -vol * u[ii] + static_cast<double>(at_or_below[ii]) / n);
        const double right = vol * u[jj] - static_cast<double>(at_or_below[jj - 1]) / n;
        best = std::max(best, right + best_left);
        boxes += jj;
      }
      return;
    }
    auto c = distinct_coords(ps, sel, j);
    c.insert(c.begin(), 0.0);
    c.push_back(1.0);
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::vector<std::size_t> inner;
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        inner.clear();
        for (auto i : sel) {
          const double x = ps[i][static_cast<std::size_t>(j)];
          if (x > c[a] && x < c[b]) inner.push_back(i);
        }
        deficit(inner, j + 1, vol * (c[b] - c[a]));
      }
  }
};

Discrepancy random_box_bound(const PointSet& ps, std::size_t boxes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
  const auto d = static_cast<std::size_t>(ps.dim());
  const double n = static_cast<double>(ps.size());
  std::vector<double> lo(d), hi(d);
  double best = 0.0;
  for (std::size_t t = 0; t < boxes; ++t) {
    const bool snap = t % 2 == 0;
    double vol = 1.0;
    for (std::size_t j = 0; j < d; ++j) {
      double a = snap ? ps[pick(rng)][j] : unit(rng);
      double b = snap ? ps[pick(rng)][j] : unit(rng);
      if (a > b) std::swap(a, b);
      lo[j] = a;
      hi[j] = b;
      vol *= b - a;
    }
    std::size_t closed = 0, open = 0;
    for (const auto& x : ps.points()) {
      bool in_closed = true, in_open = true;
      for (std::size_t j = 0; j < d; ++j) {
        in_closed = in_closed && x[j] >= lo[j] && x[j] <= hi[j];
        in_open = in_open && x[j] > lo[j] && x[j] < hi[j];
      }
      closed += in_closed;
      open += in_open;
    }
    best = std::max({best, static_cast<double>(closed) / n - vol, vol - static_cast<double>(open) / n});
  }
  return {best, false, boxes};
}

}  // namespace

PointSet::PointSet(int dim, std::vector<std::vector<double>> points) : dim_(dim), points_(std::move(points)) {
  if (dim < 1) throw InputError("PointSet: dimension must be at least 1");
  for (const auto& x : points_) {
    if (static_cast<int>(x.size()) != dim) throw InputError("PointSet: point has wrong dimension");
    for (double t : x)
      if (!(t >= 0.0 && t < 1.0)) throw InputError("PointSet: coordinates must lie in [0,1)");
  }
}

PointSet PointSet::parse(const std::string& text) {
  std::istringstream in(text);
  return read(in);
}

PointSet PointSet::read(std::istream& in) {
  std::vector<std::vector<double>> pts;
  std::string line;
  int dim = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> x;
    std::istringstream fields(line);
    std::string token;
    while (std::getline(fields, token, ',')) x.push_back(parse_coordinate(token));
    if (dim == 0) dim = static_cast<int>(x.size());
    if (static_cast<int>(x.size()) != dim) throw InputError("PointSet: inconsistent dimension");
    pts.push_back(std::move(x));
  }
  if (pts.empty()) throw InputError("PointSet: no points");
  return PointSet(dim, std::move(pts));
}

PointSet PointSet::orbit(const TorsionPoint& zeta, const GaloisSubgroup& g) {
  return PointSet(zeta.dim(), orbit_points(zeta, g));
}

Discrepancy discrepancy(const PointSet& ps, bool allow_lower_bound, std::size_t random_boxes, std::uint64_t seed) {
  if (ps.size() == 0) throw InputError("discrepancy: empty point set");
  const int d = ps.dim();
  if (d > 1 && (d > 3 || ps.size() > kExactCap)) {
    if (!allow_lower_bound) throw InputError("discrepancy: exact mode needs d <= 3 and n <= 64 for d >= 2");
    return random_box_bound(ps, random_boxes, seed);
  }
  std::vector<std::size_t> all(ps.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::stable_sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
    return ps[a][static_cast<std::size_t>(d - 1)] < ps[b][static_cast<std::size_t>(d - 1)];
  });
  Scan scan{ps, static_cast<double>(ps.size()), d - 1};
  scan.excess(all, 0, 1.0);
  scan.deficit(all, 0, 1.0);
  return {std::min(1.0, scan.best), true, scan.boxes};
}

KoksmaAudit koksma_audit(const std::function<double(double)>& f, double variation, const PointSet& ps,
                         double integral) {
  if (ps.dim() != 1) throw InputError("koksma_audit: point set must be one-dimensional");
  if (!(variation >= 0.0) || !std::isfinite(variation)) throw InputError("koksma_audit: variation unavailable");
  CompensatedSum sum;
  for (const auto& x : ps.points()) sum.add(f(x[0]));
  KoksmaAudit out;
  out.discrepancy = discrepancy(ps).value;
  out.variation = variation;
  out.lhs = std::abs(sum.value() / static_cast<double>(ps.size()) - integral);
  out.rhs = variation * out.discrepancy;
  out.ok = out.lhs <= out.rhs + 1e-12;
  return out;
}

FAlphaR::FAlphaR(std::complex<double> alpha, double r) : alpha_(alpha), r_(r) {
  if (!(r > 0.0 && r <= 1.0)) throw InputError("F_alpha_r: r must lie in (0,1]");
}

double FAlphaR::operator()(double x) const {
  return std::log(std::max(r_, std::abs(std::polar(1.0, 2.0 * std::numbers::pi * x) - alpha_)));
}

double FAlphaR::var_bound() const {
  const double a = std::abs(alpha_);
  const double lo = std::log(std::max(r_, std::abs(a - 1.0)));
  const double hi = std::log(std::max(r_, a + 1.0));
  return 2.0 * (hi - lo);
}

double FAlphaR::integral() const {
  std::vector<double> cuts{0.0, 1.0};
  const double a = std::abs(alpha_);
  if (a > 0.0) {
    const double theta = std::arg(alpha_) / (2.0 * std::numbers::pi);
    const auto wrap = [](double t) { return t - std::floor(t); };
    cuts.push_back(wrap(theta));
    cuts.push_back(wrap(theta + 0.5));
    const double c = (1.0 + a * a - r_ * r_) / (2.0 * a);
    if (std::abs(c) < 1.0) {
      const double w = std::acos(c) / (2.0 * std::numbers::pi);
      cuts.push_back(wrap(theta + w));
      cuts.push_back(wrap(theta - w));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  CompensatedSum sum;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    sum.add(boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [this](double x) { return (*this)(x); }, cuts[i], cuts[i + 1], 12, 1e-11));
  }
  return sum.value();
}

TruncatedLogAverage truncated_log_average(const TorsionPoint& zeta, const GaloisSubgroup& g,
                                          std::complex<double> alpha, double r) {
  if (zeta.dim() != 1) throw InputError("truncated_log_average: zeta must be a root of unity");
  if (!(r > 0.0 && r <= 1.0)) throw InputError("truncated_log_average: r must lie in (0,1]");
  const std::int64_t n = zeta.order();
  if (g.modulus() != n) throw InputError("truncated_log_average: group modulus differs from the order of zeta");
  TruncatedLogAverage out;
  CompensatedSum sum;
  for (std::int64_t sigma : g.elements()) {
    const double dist = std::abs(zeta.galois(sigma).to_complex()[0] - alpha);
    if (dist <= r) {
      ++out.excluded;
      continue;
    }
    sum.add(std::log(dist));
  }
  out.average = sum.value() / static_cast<double>(g.size());
  out.log_plus_alpha = std::max(0.0, std::log(std::abs(alpha)));
  out.residual = out.average - out.log_plus_alpha;
  const double lr = std::abs(std::log(r));
  out.error_shape = static_cast<double>(g.index()) * std::sqrt(static_cast<double>(g.conductor())) *
                        std::log(2.0 * static_cast<double>(n)) * static_cast<double>(num_divisors(n)) /
                        static_cast<double>(euler_phi(n)) * lr +
                    r * lr;
  return out;
}

NearIdentity near_identity_conjugate(const TorsionPoint& zeta, const GaloisSubgroup& g) {
  const std::int64_t n = zeta.order();
  if (g.modulus() != n) throw InputError("near_identity_conjugate: group modulus differs from the order of zeta");
  if (g.size() > kMaxConjugates) throw InputError("near_identity_conjugate: group too large");
  NearIdentity best;
  std::int64_t best_norm = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t sigma : g.elements()) {
    const std::int64_t inv = mod_inverse(sigma, n);
    ExponentVector a;
    std::int64_t norm = 0;
    for (std::int64_t b : zeta.residues()) {
      a.push_back(centered_mod(mod_mul(b, inv, n), n));
      norm = std::max(norm, std::abs(a.back()));
    }
    if (norm < best_norm) {
      best_norm = norm;
      best.a = std::move(a);
      best.sigma = sigma;
    }
  }
  for (std::size_t i = 0; i < best.a.size(); ++i)
    if (mod(mod_mul(mod(best.a[i], n), best.sigma, n), n) != zeta.residues()[i])
      throw AuditFailure("near_identity_conjugate: e(a sigma / N) differs from zeta");
  if (best_norm >= n && n > 1) throw AuditFailure("near_identity_conjugate: |a| >= N");
  const double d = zeta.dim();
  best.ratio = static_cast<double>(best_norm) / static_cast<double>(n);
  best.shape = std::pow(static_cast<double>(g.index()), 1.0 / d) *
               std::pow(static_cast<double>(g.conductor()), 1.0 / (2.0 * d)) /
               std::pow(static_cast<double>(delta_point(zeta)), 1.0 / (3.0 * d));
  return best;
}

IntegrationAudit numerical_integration_audit(const PointFunction& psi, const PointSet& ps, double integral,
                                             const std::function<double(double)>& modulus,
                                             std::size_t omega_samples, std::uint64_t seed) {
  const auto d = static_cast<std::size_t>(ps.dim());
  IntegrationAudit out;
  const Discrepancy disc = discrepancy(ps, true);
  out.discrepancy = disc.value;
  out.discrepancy_exact = disc.exact;
  out.t = std::pow(disc.value, 1.0 / static_cast<double>(d + 1));
  if (modulus) {
    out.omega = modulus(out.t);
    out.omega_estimated = false;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0), sym(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> axis(0, d - 1);
    std::vector<double> x(d), y(d);
    for (std::size_t s = 0; s < omega_samples; ++s) {
      for (std::size_t j = 0; j < d; ++j) x[j] = unit(rng);
      x[0] = (static_cast<double>(s) + x[0]) / static_cast<double>(omega_samples);
      const std::size_t k = axis(rng);
      for (std::size_t j = 0; j < d; ++j) {
        const double u = j == k ? (unit(rng) < 0.5 ? -1.0 : 1.0) : sym(rng);
        y[j] = std::clamp(x[j] + out.t * u, 0.0, 1.0);
      }
      out.omega = std::max(out.omega, std::abs(psi(x) - psi(y)));
    }
  }
  CompensatedSum sum;
  for (const auto& p : ps.points()) sum.add(psi(p));
  out.lhs = std::abs(sum.value() / static_cast<double>(ps.size()) - integral);
  out.rhs = (1.0 + std::ldexp(1.0, static_cast<int>(d) + 1)) * out.omega;
  out.ok = out.lhs <= out.rhs + 1e-12;
  return out;
}

FiberAverage fiber_mahler_average(const LaurentPoly& p, int l, const PointSet& ps, double tol) {
  const int d = p.dim();
  if (l < 1 || l > d - 1) throw InputError("fiber_mahler_average: l must lie in 1..d-1");
  if (ps.dim() != l) throw InputError("fiber_mahler_average: point set dimension differs from l");
  if (p.is_zero()) throw InputError("fiber_mahler_average: zero polynomial");
  const IntMatrix identity = IntMatrix::Identity(d, d);
  const double scale = coeff_sup_norm(p);
  const LaurentPoly hat = auxiliary_hat(p, l);
  CompensatedSum fibers, hat_logs;
  std::vector<std::size_t> vanishing;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<std::complex<double>> z;
    for (double x : ps[i]) z.push_back(std::polar(1.0, 2.0 * std::numbers::pi * x));
    const ComplexLaurent fiber = specialize_PVeta(p, identity, l, z);
    double size = 0.0;
    for (const auto& [e, c] : fiber.terms()) size = std::max(size, std::abs(c));
    if (size <= kVanishingFiber * scale) {
      vanishing.push_back(i);
      continue;
    }
    const MeasureResult m = fiber.dim() == 1 ? mahler_univariate(fiber) : mahler_multivariate(fiber, 64, tol);
    fibers.add(m.value);
    hat_logs.add(std::log(std::abs(evaluate(hat, z).real())));
  }
  if (!vanishing.empty()) {
    std::string list;
    for (auto i : vanishing) list += (list.empty() ? "" : ",") + std::to_string(i);
    throw InputError("fiber_mahler_average: P vanishes on the fibers of points " + list);
  }
  FiberAverage out;
  const double n = static_cast<double>(ps.size());
  out.mean_fiber_measure = fibers.value() / n;
  out.m_P = mahler(p, tol).value;
  out.diff = out.mean_fiber_measure - out.m_P;
  out.m_hat = l == 1 ? mahler_univariate(hat).value : mahler_multivariate(hat, 64, tol).value;
  out.hat_residual = std::abs(out.m_hat - hat_logs.value() / n);
  return out;
}

}  // namespace atoral
