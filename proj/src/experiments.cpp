#include "atoral/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "atoral/factorization.hpp"
#include "atoral/lattice.hpp"
#include "atoral/mahler.hpp"
#include "atoral/matrix.hpp"
#include "atoral/orbit.hpp"
#include "atoral/roots.hpp"
#include "atoral/separation.hpp"
#include "atoral/summation.hpp"

namespace atoral {

namespace {

constexpr double kGolden = 1.6180339887498949;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::int64_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (r) out += ';';
    for (Eigen::Index c = 0; c < m.cols(); ++c) out += (c ? " " : "") + std::to_string(m(r, c));
  }
  return out;
}

std::string point_text(const std::optional<TorsionPoint>& z) { return z ? z->to_string() : "-"; }

bool vanishes_at(const LaurentPoly& p, const TorsionPoint& z, double value, double threshold) {
  return value < threshold && exact_value(p, z).is_zero();
}

double zero_threshold(const LaurentPoly& p) {
  return 1e-9 * static_cast<double>(p.num_terms()) * coeff_sup_norm(p);
}

IntPoly random_int_poly(std::mt19937_64& rng, int max_degree, int bound, bool nonzero_constant = false) {
  std::uniform_int_distribution<int> deg(1, max_degree), coeff(-bound, bound);
  const int d = deg(rng);
  std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = coeff(rng);
  while (c.back() == 0) c.back() = coeff(rng);
  while (nonzero_constant && c.front() == 0) c.front() = coeff(rng);
  return IntPoly(std::move(c));
}

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::string format_cell(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(c));
  return buf;
}

Table::Table(std::string experiment, std::vector<std::string> columns, std::uint64_t seed)
    : experiment_(std::move(experiment)), columns_(std::move(columns)), seed_(seed) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw InputError("Table: row width differs from the header");
  for (const auto& c : row)
    if (const auto* d = std::get_if<double>(&c); d && !std::isfinite(*d))
      throw AuditFailure("Table " + experiment_ + ": non-finite value in a row");
  rows_.push_back(std::move(row));
}

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns_.begin(), columns_.end(), name);
  if (it == columns_.end()) throw InputError("Table: no column " + name);
  return static_cast<std::size_t>(it - columns_.begin());
}

double Table::number(std::size_t row, const std::string& name) const {
  const Cell& c = rows_.at(row).at(column(name));
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  throw InputError("Table: column " + name + " is not numeric");
}

std::string Table::csv() const {
  std::ostringstream os;
  os << "# atoral-lab v1, experiment=" << experiment_ << ", seed=" << seed_ << '\n';
  for (const auto& n : notes_) os << "# " << n << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
  os << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(format_cell(row[i]));
    os << '\n';
  }
  return os.str();
}

Table mahler_report(const LaurentPoly& p, MeasureMethod method, double tol, std::size_t qmc_points) {
  if (p.is_zero()) throw InputError("mahler: zero polynomial");
  MeasureResult r;
  switch (method) {
    case MeasureMethod::automatic:
      r = mahler(p, tol);
      break;
    case MeasureMethod::jensen:
      if (p.dim() != 1) throw InputError("mahler: jensen needs a univariate polynomial");
      r = mahler_univariate(p);
      break;
    case MeasureMethod::recursive:
      r = mahler_multivariate(p, 64, tol);
      break;
    case MeasureMethod::qmc:
      r = mahler_qmc(p, qmc_points, p.dim() == 2 ? QmcGenerator::fibonacci : QmcGenerator::korobov);
      break;
  }
  const MahlerBounds b = mahler_bounds(p);
  Table t("mahler", {"method", "value", "est_error", "lower", "upper", "k", "near_circle", "nodes", "ok"});
  const double slack = r.est_error + 1e-9;
  const bool ok = b.lower_ds <= r.value + slack && r.value - slack <= b.upper;
  t.note("poly=" + to_string(p));
  t.add_row({std::string(to_string(r.method)), r.value, r.est_error, b.lower_ds, b.upper,
             static_cast<std::int64_t>(b.k), static_cast<std::int64_t>(r.near_circle),
             static_cast<std::int64_t>(r.nodes), ok});
  if (!ok) t.fail();
  return t;
}

TorsionPoint golden_point(int dim, std::int64_t n) {
  if (dim < 1 || n < 1) throw InputError("golden_point: need dim >= 1 and N >= 1");
  std::vector<std::int64_t> b(static_cast<std::size_t>(dim));
  double scale = static_cast<double>(n);
  b[0] = 1 % n;
  for (int i = 1; i < dim; ++i) {
    scale *= kGolden;
    b[static_cast<std::size_t>(i)] = mod(static_cast<std::int64_t>(std::llround(std::fmod(scale, 1e15))), n);
  }
  return TorsionPoint(std::move(b), n);
}

std::int64_t golden_prime_for_delta(int dim, std::int64_t target) {
  if (target < 1) throw InputError("golden_prime_for_delta: target must be positive");
  // delta(zeta) <= N^(1/d) by Minkowski in the max-norm.
  std::int64_t n = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::pow(static_cast<double>(target), dim)));
  for (int tries = 0; tries < 200000; ++n) {
    if (!is_prime(n)) continue;
    ++tries;
    if (delta_point(golden_point(dim, n)) >= target) return n;
  }
  throw InputError("golden_prime_for_delta: no prime found");
}

Table orbit_average_table(const LaurentPoly& p, const std::vector<TorsionPoint>& points,
                          const std::optional<std::vector<std::int64_t>>& galois_generators) {
  if (p.is_zero()) throw InputError("orbit-average: zero polynomial");
  const double m_p = mahler(p).value;
  Table t("orbit-average", {"N", "zeta", "delta", "size", "average", "m_P", "abs_err", "zeros"});
  t.note("poly=" + to_string(p));
  for (const auto& z : points) {
    if (z.dim() != p.dim()) throw InputError("orbit-average: dimension of zeta differs from the polynomial");
    const std::int64_t n = z.order();
    const GaloisSubgroup g = galois_generators ? GaloisSubgroup(n, *galois_generators) : GaloisSubgroup::full(n);
    const OrbitAverage avg = orbit_average_log(p, z, g);
    t.add_row({n, z.to_string(), delta_point(z), static_cast<std::int64_t>(g.size()), avg.mean, m_p,
               std::abs(avg.mean - m_p), static_cast<std::int64_t>(avg.zeros.size())});
  }
  return t;
}

SubgroupAverage subgroup_average(const LaurentPoly& p, const FiniteTorusSubgroup& g) {
  if (p.dim() != g.dim()) throw InputError("subgroup_average: dimension mismatch");
  if (p.is_zero()) throw InputError("subgroup_average: zero polynomial");
  const double threshold = zero_threshold(p);
  SubgroupAverage out;
  CompensatedSum sum;
  for (const auto& z : g.elements()) {
    const double value = std::abs(evaluate(p, z.to_complex()));
    if (vanishes_at(p, z, value, threshold)) {
      ++out.zero_hits;
      continue;
    }
    sum.add(std::log(value));
  }
  out.mean = sum.value() / static_cast<double>(g.size());
  return out;
}

Table lsv_average_table(const LaurentPoly& p, const std::vector<FiniteTorusSubgroup>& groups) {
  if (p.is_zero()) throw InputError("lsv-average: zero polynomial");
  const double m_p = mahler(p).value;
  Table t("lsv-average", {"size", "exponent", "delta", "mean", "m_P", "abs_err", "zero_hits"});
  t.note("poly=" + to_string(p));
  for (const auto& g : groups) {
    const SubgroupAverage avg = subgroup_average(p, g);
    t.add_row({static_cast<std::int64_t>(g.size()), g.exponent(), delta_group(g), avg.mean, m_p,
               std::abs(avg.mean - m_p), static_cast<std::int64_t>(avg.zero_hits)});
  }
  return t;
}

Table reduction_pipeline(const LaurentPoly& p, const TorsionPoint& zeta, const GaloisSubgroup& g,
                         const PipelineOptions& options) {
  const int d = zeta.dim();
  if (p.dim() != d) throw InputError("reduction-pipeline: dimension of zeta differs from the polynomial");
  if (p.is_zero()) throw InputError("reduction-pipeline: zero polynomial");
  if (g.modulus() != zeta.order()) throw InputError("reduction-pipeline: group modulus differs from ord(zeta)");
  const double nu = options.nu > 0.0 ? options.nu : 1.0 / (128.0 * d * d);
  const double eps = options.eps > 0.0 ? options.eps : std::pow(nu, d);
  const double delta = options.delta > 0.0 ? options.delta : static_cast<double>(std::max<std::int64_t>(delta_point(zeta), 1));

  Table t("reduction-pipeline", {"stage", "name", "value", "ok"});
  t.note("poly=" + to_string(p));
  auto row = [&t](const std::string& stage, const std::string& name, Cell value, bool ok = true) {
    t.add_row({stage, name, std::move(value), ok});
    if (!ok) t.fail();
  };
  row("input", "zeta", zeta.to_string());
  row("input", "N", zeta.order());
  row("input", "G", g.to_string());
  row("input", "nu", nu);
  row("input", "eps", eps);
  row("input", "delta_zeta", delta_point(zeta));

  const OrbitAverage direct = orbit_average_log(p, zeta, g);
  const double m_p = mahler(p).value;
  const double direct_mean = direct.mean * static_cast<double>(direct.terms) / static_cast<double>(g.size());

  if (d == 1) {
    row("univariate", "average", direct_mean);
    row("univariate", "zeros", static_cast<std::int64_t>(direct.zeros.size()));
    row("final", "average", direct_mean);
    row("final", "m_P", m_p);
    row("final", "abs_err", std::abs(direct_mean - m_p));
    return t;
  }

  std::string stage = "monomial_change";
  try {
    const std::vector<double> nus{std::min(nu, 0.5 / (d - 1))};
    const MonomialChange mc = monomial_change(zeta, std::max(delta, 1.0), std::min(eps, 0.5), nus);
    row(stage, "l", static_cast<std::int64_t>(mc.l));
    row(stage, "V", matrix_text(mc.V));
    row(stage, "V_norm", mc.v_norm);
    row(stage, "V_shape", mc.v_bound);
    row(stage, "eta", point_text(mc.eta));
    row(stage, "xi", mc.xi.to_string());
    const double eta_order = mc.eta ? static_cast<double>(mc.eta->order()) : 1.0;
    row(stage, "ord_eta<=N^(nu_1+...+nu_l)", eta_order, eta_order <= mc.eta_order_bound * (1 + 1e-12));

    stage = "factor_torsion";
    const FactorizationResult f = factor_torsion(zeta, nu, g);
    row(stage, "identity_branch", f.identity_branch);
    row(stage, "i", static_cast<std::int64_t>(f.i));
    row(stage, "eta", f.eta.to_string());
    row(stage, "xi", f.xi.to_string());
    row(stage, "E", f.E);
    row(stage, "M", f.M);
    row(stage, "V", matrix_text(f.V));
    row(stage, "a", join(f.a, ' '));
    row(stage, "sigma", f.sigma);
    row(stage, "zeta=eta*xi", (f.eta * f.xi).to_string(), f.eta * f.xi == zeta);
    row(stage, "E|N", f.E, zeta.order() % f.E == 0);
    row(stage, "M|N", f.M, zeta.order() % f.M == 0);
    row(stage, "E<=N^(2nu^(1+i))", f.order_bound, static_cast<double>(f.E) <= f.order_bound * (1 + 1e-12));
    row(stage, "delta(xi)>=bound", f.delta_bound, f.delta_xi + 1e-9 >= f.delta_bound);
    row(stage, "a_ratio", f.a_ratio);
    row(stage, "a_shape", f.a_shape);

    stage = "specialize";
    // xi^V = (1, ..., 1, e(a sigma / M)), so xi = e(u sigma / M) with u = (0, a) V^-1.
    IntVector w = IntVector::Zero(d);
    for (int j = 0; j < f.i; ++j) w(d - f.i + j) = f.a[static_cast<std::size_t>(j)];
    const IntVector u = (w.transpose() * inverse_unimodular(f.V)).transpose();
    std::vector<std::int64_t> ub(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) ub[static_cast<std::size_t>(j)] = mod(mod(u(j), f.M) * f.sigma, f.M);
    const bool xi_ok = TorsionPoint(ub, f.M) == f.xi;
    row(stage, "u", join(to_exponent(u), ' '), xi_ok);
    if (!xi_ok) throw AuditFailure("reduction-pipeline: xi differs from e(u sigma / M)");
    if (!u.isZero()) {
      const double rho_u = rho(to_exponent(u));
      row(stage, "rho(u)>=delta(xi)", rho_u, rho_u + 1e-9 >= f.delta_xi);
    }

    IntMatrix column(d, 1);
    column.col(0) = u;
    std::map<std::int64_t, std::vector<std::int64_t>> classes;
    for (std::int64_t s : g.elements()) classes[mod(s, f.E)].push_back(s);
    std::vector<std::int64_t> zeros = direct.zeros;
    std::sort(zeros.begin(), zeros.end());

    CompensatedSum total;
    std::size_t total_terms = 0;
    for (const auto& [tau, sigmas] : classes) {
      const TorsionPoint eta_tau = f.E == 1 ? f.eta : f.eta.galois(tau);
      const LaurentPoly q = substitute_monomial(twist(p, eta_tau), column);
      const std::string key = "tau=" + std::to_string(tau);
      if (q.is_zero()) {
        row(stage, key + " Q", std::string("0"));
        continue;
      }
      const std::int64_t deg = q.terms().begin()->first[0] - q.terms().rbegin()->first[0];
      if (deg > options.max_degree)
        throw InputError("deg Q = " + std::to_string(deg) + " exceeds the cap " + std::to_string(options.max_degree));
      const ComplexLaurent qc = to_complex(q);
      CompensatedSum s_tau;
      std::size_t count = 0;
      for (std::int64_t s : sigmas) {
        if (std::binary_search(zeros.begin(), zeros.end(), s)) continue;
        const std::complex<double> x = std::polar(1.0, 2.0 * M_PI * static_cast<double>(mod_mul(s, f.sigma, f.M)) /
                                                           static_cast<double>(f.M));
        s_tau.add(std::log(std::abs(evaluate(qc, std::vector<std::complex<double>>{x}))));
        ++count;
      }
      total.add(s_tau.value());
      total_terms += count;
      const double m_q = mahler_univariate(q).value;
      const double s_mean = count ? s_tau.value() / static_cast<double>(sigmas.size()) : 0.0;
      row(stage, key + " Q", to_string(q));
      row(stage, key + " deg_Q", deg);
      row(stage, key + " h_Q", projective_height(q));
      row("orbit", key + " size", static_cast<std::int64_t>(sigmas.size()));
      row("orbit", key + " average", s_mean);
      row("orbit", key + " m_Q", m_q);
      row("orbit", key + " abs_err", std::abs(s_mean - m_q));
    }
    stage = "final";
    const double reduced = total.value() / static_cast<double>(g.size());
    row(stage, "terms", static_cast<std::int64_t>(total_terms), total_terms == direct.terms);
    row(stage, "average", direct_mean);
    row(stage, "average_via_Q", reduced, std::abs(reduced - direct_mean) <= 1e-9 * std::max(1.0, std::abs(direct_mean)));
    row(stage, "m_P", m_p);
    row(stage, "abs_err", std::abs(direct_mean - m_p));
  } catch (const AuditFailure& e) {
    throw AuditFailure(stage + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(stage + ": " + e.what());
  }
  return t;
}

Table ih_search(const LaurentPoly& p, std::int64_t max_order, std::int64_t min_order) {
  if (p.is_zero()) throw InputError("ih-search: zero polynomial");
  if (!has_integer_coefficients(p)) throw InputError("ih-search: coefficients must be integers");
  if (min_order < 1 || max_order < min_order) throw InputError("ih-search: bad order range");
  const int d = p.dim();
  double work = 0.0;
  for (std::int64_t n = min_order; n <= max_order; ++n) work += std::pow(static_cast<double>(n), d);
  if (work > 1e7) throw InputError("ih-search: the enumeration exceeds 10^7 points");

  Table t("ih-search", {"N", "zeta", "delta", "norm"});
  t.note("poly=" + to_string(p));
  t.note("one representative per Galois orbit: the lexicographically smallest residue vector");
  std::size_t orbits = 0;
  for (std::int64_t n = min_order; n <= max_order; ++n) {
    const std::vector<std::int64_t> units = units_mod(n);
    const std::uint64_t total = ipow(static_cast<std::uint64_t>(n), d);
    std::vector<char> seen(total, 0);
    std::vector<std::int64_t> b(static_cast<std::size_t>(d));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      if (seen[idx]) continue;
      std::uint64_t rest = idx;
      for (int j = d - 1; j >= 0; --j) {
        b[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(n));
        rest /= static_cast<std::uint64_t>(n);
      }
      std::int64_t g0 = n;
      for (auto x : b) g0 = gcd(g0, x);
      if (g0 != 1) continue;
      for (std::int64_t s : units) {
        std::uint64_t image = 0;
        for (auto x : b) image = image * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(mod_mul(x, s, n));
        seen[image] = 1;
      }
      ++orbits;
      const TorsionPoint z(b, n);
      if (exact_value(p, z).is_zero()) continue;
      const BigInt norm = norm_at_torsion(p, z);
      if (norm == 1 || norm == -1)
        t.add_row({n, z.to_string(), delta_point(z), static_cast<std::int64_t>(norm)});
    }
  }
  t.note("orbits=" + std::to_string(orbits));
  return t;
}

Table separation_audit(const SeparationOptions& o) {
  if (o.mignotte_degree < 1 || o.repulsion_degree < 1 || o.coeff_bound < 1)
    throw InputError("separation-audit: degrees and coefficient bound must be positive");
  std::mt19937_64 rng(o.seed);
  Table t("separation-audit", {"audit", "deg", "k", "lhs", "rhs", "margin", "ok"}, o.seed);
  t.note("k = root pairs for mignotte rows, roots on the circle for repulsion rows");
  auto add = [&t](const std::string& name, int deg, int k, const Audit& a) {
    t.add_row({name, static_cast<std::int64_t>(deg), static_cast<std::int64_t>(k), a.lhs, a.rhs, a.margin(), a.ok});
    if (!a.ok) t.fail();
  };
  for (std::size_t done = 0; done < o.count;) {
    const IntPoly q = random_int_poly(rng, o.mignotte_degree, o.coeff_bound);
    if (discriminant_int(q) == 0) continue;
    std::vector<int> idx(static_cast<std::size_t>(q.degree()));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i + 1 < idx.size(); i += 2) pairs.emplace_back(idx[i], idx[i + 1]);
    const auto th = mignotte_audit(q, pairs, MignotteForm::theorem);
    add("mignotte-theorem", th.degree, th.pairs, th);
    const auto co = mignotte_audit(q, pairs, MignotteForm::corollary);
    add("mignotte-corollary", co.degree, co.pairs, co);
    ++done;
  }
  for (std::size_t done = 0; done < o.count; ++done) {
    IntPoly q = random_int_poly(rng, o.reciprocal ? std::max(1, o.repulsion_degree / 2) : o.repulsion_degree,
                                o.coeff_bound, o.reciprocal);
    if (o.reciprocal) {
      auto c = q.coeffs();
      std::reverse(c.begin(), c.end());
      q = q * IntPoly(std::move(c));
    }
    const auto r = repulsion_audit(q);
    add("repulsion", r.degree, r.excluded, r);
  }
  return t;
}

Table gauss_audit(std::int64_t max_n, std::int64_t max_subgroup_n, double tol) {
  if (max_n < 1) throw InputError("gauss-audit: N_max must be positive");
  if (max_subgroup_n > 40) throw InputError("gauss-audit: subgroup enumeration is limited to N <= 40");
  Table t("gauss-audit", {"kind", "N", "label", "k", "abs", "bound", "ok"});
  t.note("character rows: |sum chi(s) e(ks/N)| <= phi(N)/phi(N') f_chi^(1/2); subgroup rows: (1/#G) |sum over G of e(ks/N)| <= [Gamma_N:G]/phi(N') f_G^(1/2)");
  for (std::int64_t n = 1; n <= max_n; ++n) {
    for (const auto& chi : enumerate_characters(n)) {
      const std::string label = chi.to_string();
      for (std::int64_t k = 0; k < n; ++k) {
        const double v = std::abs(gauss_sum(chi, k));
        const double b = gauss_sum_bound(chi, k);
        const bool ok = v <= b + tol;
        t.add_row({std::string(gcd(k, n) == 1 ? "character-coprime" : "character"), n, label, k, v, b, ok});
        if (!ok) t.fail();
      }
    }
  }
  for (std::int64_t n = 1; n <= max_subgroup_n; ++n) {
    for (const auto& g : all_subgroups(n)) {
      const std::string label = g.to_string();
      for (std::int64_t k = 0; k < n; ++k) {
        const double v = std::abs(subgroup_exponential_sum(g, k)) / static_cast<double>(g.size());
        const double b = subgroup_sum_bound(g, k);
        const bool ok = v <= b + tol;
        t.add_row({std::string("subgroup"), n, label, k, v, b, ok});
        if (!ok) t.fail();
      }
    }
  }
  return t;
}

Table discrepancy_table(const PointSet& ps, bool allow_lower_bound, std::uint64_t seed) {
  const Discrepancy d = discrepancy(ps, allow_lower_bound, 200000, seed);
  Table t("discrepancy", {"n", "dim", "discrepancy", "exact", "boxes"}, seed);
  t.add_row({static_cast<std::int64_t>(ps.size()), static_cast<std::int64_t>(ps.dim()), d.value, d.exact,
             static_cast<std::int64_t>(d.boxes)});
  if (!d.exact) t.note("lower bound from random boxes");
  return t;
}

Table lawton_table(const LaurentPoly& p, const std::vector<ExponentVector>& as) {
  if (p.dim() < 2) throw InputError("lawton: the polynomial needs at least two variables");
  Table t("lawton", {"n", "a", "rho", "deg", "k", "m_spec", "m_P", "abs_err", "bound_shape", "flagged"});
  t.note("poly=" + to_string(p));
  for (const auto& a : as) {
    if (static_cast<int>(a.size()) != p.dim()) throw InputError("lawton: a must have one entry per variable");
    const LawtonRecord r = lawton_experiment(p, a);
    std::int64_t n = 0;
    for (auto x : a) n = std::max<std::int64_t>(n, std::abs(x));
    t.add_row({n, join(a, ' '), r.rho, r.deg_P, static_cast<std::int64_t>(r.k), r.m_specialized, r.m_P,
               r.abs_error, r.bound_shape, r.flagged});
  }
  return t;
}

Table atoral_table(const LaurentPoly& p) {
  if (p.is_zero()) throw InputError("atoral: zero polynomial");
  Table t("atoral", {"dim", "verdict", "method", "detail"});
  t.note("poly=" + to_string(p));
  if (p.dim() == 1) {
    if (!has_rational_coefficients(p))
      throw InputError("atoral: the one-variable decision needs rational coefficients");
    BigInt den = 1;
    for (const auto& [e, c] : p.terms()) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c.rational_value()));
    const LaurentPoly scaled = CycloNumber(Rational(den)) * p;
    const IntPoly q = to_int_poly(scaled);
    if (q.degree() < 1) {
      t.add_row({std::int64_t{1}, std::string("yes"), std::string("exact"), std::string("constant")});
      return t;
    }
    const AtoralReport r = essentially_atoral_1d(q);
    char buf[64];
    std::snprintf(buf, sizeof buf, "min ||z|-1| over non-cyclotomic roots = %.6g", r.min_distance);
    t.add_row({std::int64_t{1}, std::string(to_string(r.verdict)), std::string("exact"), std::string(buf)});
    return t;
  }
  const AsymmetryReport a = is_asymmetric(p);
  if (a.asymmetric) {
    t.add_row({static_cast<std::int64_t>(p.dim()), std::string("yes"), std::string("asymmetry"),
               std::string("not fixed up to monomial and sign by X -> 1/X")});
  } else {
    t.add_row({static_cast<std::int64_t>(p.dim()), std::string("unknown"), std::string("asymmetry"),
               std::string("symmetric; symmetric polynomials can still be essentially atoral, e.g. "
                           "X1 + 1/X1 + X2 + 1/X2 - 4")});
  }
  return t;
}

}  // namespace atoral
