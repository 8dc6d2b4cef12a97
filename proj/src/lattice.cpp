#include "atoral/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Cholesky>

namespace atoral {

namespace {

constexpr std::size_t kEnumerationCap = 4'000'000;

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt round_div(const BigInt& a, const BigInt& b) { return floor_div(2 * a + b, 2 * b); }

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

/// Row echelon form of the first `ncols` columns by unimodular row
/// operations applied to whole rows. Returns the rank; pivots positive.
/// With `reduce`, entries above each pivot land in [0, pivot).
int echelon(BigMatrix& m, Eigen::Index ncols, bool reduce) {
  const Eigen::Index rows = m.rows();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < ncols && r < rows; ++c) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i)
        if (m(i, c) != 0 && (best < 0 || abs_big(m(i, c)) < abs_big(m(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) m.row(r).swap(m.row(best));
      bool done = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        const BigInt q = floor_div(m(i, c), m(r, c));
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
    if (reduce)
      for (Eigen::Index i = 0; i < r; ++i) {
        const BigInt q = floor_div(m(i, c), m(r, c));
        if (q != 0)
          for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
      }
    ++r;
  }
  return static_cast<int>(r);
}

BigInt quad_form(const BigMatrix& g, const std::vector<std::int64_t>& x) {
  BigInt acc = 0;
  const Eigen::Index n = g.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    BigInt row = 0;
    for (Eigen::Index j = 0; j < n; ++j) row += g(i, j) * x[static_cast<std::size_t>(j)];
    acc += row * x[static_cast<std::size_t>(i)];
  }
  return acc;
}

/// Exact integral LLL (delta = 99/100) driven by a positive definite Gram
/// matrix. Returns unimodular H with H G H^T reduced.
BigMatrix lll_gram(const BigMatrix& g0) {
  const int n = static_cast<int>(g0.rows());
  BigMatrix h = BigMatrix::Identity(n, n);
  if (n <= 1) return h;
  auto dot = [&](int a, int b) {
    BigInt acc = 0;
    for (int i = 0; i < n; ++i) {
      if (h(a, i) == 0) continue;
      for (int j = 0; j < n; ++j) acc += h(a, i) * g0(i, j) * h(b, j);
    }
    return acc;
  };
  // One-based indices as in the classical description; d[0] = 1.
  std::vector<BigInt> d(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<BigInt>> lam(static_cast<std::size_t>(n) + 1,
                                       std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0));
  d[0] = 1;
  d[1] = dot(0, 0);
  int k = 2, kmax = 1;
  auto red = [&](int kk, int l) {
    if (abs_big(2 * lam[kk][l]) <= d[l]) return;
    const BigInt q = round_div(lam[kk][l], d[l]);
    for (int j = 0; j < n; ++j) h(kk - 1, j) -= q * h(l - 1, j);
    lam[kk][l] -= q * d[l];
    for (int i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
  };
  auto swap_step = [&](int kk) {
    h.row(kk - 1).swap(h.row(kk - 2));
    for (int j = 1; j <= kk - 2; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    const BigInt l = lam[kk][kk - 1];
    const BigInt b = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
    for (int i = kk + 1; i <= kmax; ++i) {
      const BigInt t = lam[i][kk];
      lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
      lam[i][kk - 1] = (b * t + l * lam[i][kk]) / d[kk];
    }
    d[kk - 1] = b;
  };
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (int j = 1; j <= k; ++j) {
        BigInt u = dot(k - 1, j - 1);
        for (int i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) throw InputError("LLL: vectors are linearly dependent");
    }
    while (true) {
      red(k, k - 1);
      if (100 * d[k] * d[k - 2] < 99 * d[k - 1] * d[k - 1] - 100 * lam[k][k - 1] * lam[k][k - 1]) {
        swap_step(k);
        k = std::max(2, k - 1);
      } else {
        for (int l = k - 2; l >= 1; --l) red(k, l);
        ++k;
        break;
      }
    }
  }
  return h;
}

BigMatrix congruent(const BigMatrix& h, const BigMatrix& g) {
  const BigMatrix ht = h.transpose();
  return multiply(multiply(h, g), ht);
}

/// All coefficient vectors x != 0 with x^T G x <= radius2.
std::vector<std::vector<std::int64_t>> enumerate_gram(const BigMatrix& g, const BigInt& radius2) {
  std::vector<std::vector<std::int64_t>> out;
  const int n = static_cast<int>(g.rows());
  if (n == 0 || radius2 <= 0) return out;
  const BigMatrix h = lll_gram(g);
  const BigMatrix gr = congruent(h, g);
  // Cholesky: gr = R^T R, stored as q_ii = R_ii^2 and mu_ij = R_ij / R_ii.
  std::vector<std::vector<long double>> r(static_cast<std::size_t>(n),
                                          std::vector<long double>(static_cast<std::size_t>(n), 0.0L));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      long double s = to_ld(gr(i, j));
      for (int l = 0; l < i; ++l) s -= r[l][i] * r[l][j];
      if (j == i) {
        if (s <= 0) throw InputError("enumeration: Gram matrix is not positive definite");
        r[i][i] = std::sqrt(s);
      } else {
        r[i][j] = s / r[i][i];
      }
    }
  }
  const long double bound = to_ld(radius2) * (1.0L + 1e-12L) + 1e-9L;
  std::vector<std::int64_t> y(static_cast<std::size_t>(n), 0);
  std::function<void(int, long double)> rec = [&](int i, long double remaining) {
    long double center = 0.0L;
    for (int j = i + 1; j < n; ++j) center -= r[i][j] * static_cast<long double>(y[j]);
    center /= r[i][i];
    const long double width = std::sqrt(std::max(remaining, 0.0L)) / r[i][i];
    const auto lo = static_cast<std::int64_t>(std::ceil(center - width - 1e-12L));
    const auto hi = static_cast<std::int64_t>(std::floor(center + width + 1e-12L));
    for (std::int64_t v = lo; v <= hi; ++v) {
      const long double t = r[i][i] * (static_cast<long double>(v) - center);
      const long double rest = remaining - t * t;
      if (rest < -1e-9L * (1.0L + bound)) continue;
      y[i] = v;
      if (i == 0) {
        if (std::all_of(y.begin(), y.end(), [](std::int64_t c) { return c == 0; })) continue;
        if (quad_form(gr, y) > radius2) continue;
        std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
        for (int a = 0; a < n; ++a) {
          BigInt s = 0;
          for (int b = 0; b < n; ++b) s += BigInt(y[b]) * h(b, a);
          x[a] = static_cast<std::int64_t>(s);
        }
        out.push_back(std::move(x));
        if (out.size() > kEnumerationCap) throw InputError("enumeration: too many lattice vectors");
      } else {
        rec(i - 1, rest);
      }
    }
    y[i] = 0;
  };
  rec(n - 1, bound);
  return out;
}

BigMatrix basis_big(const IntLattice& l) { return to_big(l.basis()); }

IntVector combine(const std::vector<std::int64_t>& x, const IntMatrix& basis) {
  IntVector v = IntVector::Zero(basis.cols());
  for (Eigen::Index i = 0; i < basis.rows(); ++i) v += x[static_cast<std::size_t>(i)] * basis.row(i).transpose();
  return v;
}

/// Positive first nonzero entry.
IntVector normalize_sign(IntVector v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    if (v(i) < 0) v = -v;
    break;
  }
  return v;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

bool lex_less_matrix(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

BigInt squared_norm(const IntVector& v) {
  BigInt s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += BigInt(v(i)) * v(i);
  return s;
}

std::int64_t vec_max_norm(const IntVector& v) {
  std::int64_t m = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, v(i) < 0 ? -v(i) : v(i));
  return m;
}

/// Kernel of the row vector c in Z^k, as rows.
BigMatrix kernel_of_row(const std::vector<std::int64_t>& c) {
  BigMatrix m(1, static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) m(0, static_cast<Eigen::Index>(i)) = c[i];
  return to_big(integer_kernel(m));
}

BigMatrix adjugate_spd(const BigMatrix& g, BigInt& det_out) {
  const Eigen::Index n = g.rows();
  det_out = determinant(g);
  BigMatrix adj(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      BigMatrix minor(n - 1, n - 1);
      for (Eigen::Index a = 0, ra = 0; a < n; ++a) {
        if (a == j) continue;
        for (Eigen::Index b = 0, cb = 0; b < n; ++b) {
          if (b == i) continue;
          minor(ra, cb++) = g(a, b);
        }
        ++ra;
      }
      const BigInt m = determinant(minor);
      adj(i, j) = ((i + j) % 2 == 0) ? m : BigInt(-m);
    }
  return adj;
}

double half_log(const BigInt& gram_det) { return gram_det <= 0 ? -kInfinity : 0.5 * log_abs(gram_det); }

}  // namespace

IntLattice::IntLattice(int ambient_dim) : basis_(0, ambient_dim) {
  if (ambient_dim < 1) throw InputError("IntLattice: ambient dimension must be at least 1");
}

IntLattice::IntLattice(IntMatrix rows) : basis_(std::move(rows)) {
  if (basis_.cols() < 1) throw InputError("IntLattice: ambient dimension must be at least 1");
  if (basis_.rows() > basis_.cols()) throw InputError("IntLattice: more rows than the ambient dimension");
  if (basis_.rows() > 0 && determinant(gram(to_big(basis_))) == 0)
    throw InputError("IntLattice: basis rows are linearly dependent");
}

IntLattice IntLattice::standard(int ambient_dim) {
  return IntLattice(IntMatrix(IntMatrix::Identity(ambient_dim, ambient_dim)));
}

IntLattice IntLattice::from_generators(const IntMatrix& rows) {
  if (rows.rows() == 0) return IntLattice(static_cast<int>(rows.cols()));
  return lll_reduce(IntLattice(to_int(hermite_normal_form(to_big(rows)))));
}

IntLattice IntLattice::parse(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::replace(row.begin(), row.end(), ',', ' ');
    std::stringstream rs(row);
    std::vector<std::int64_t> entries;
    std::string tok;
    while (rs >> tok) {
      try {
        std::size_t used = 0;
        entries.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw InputError("lattice: cannot parse entry '" + tok + "'");
      }
    }
    if (entries.empty()) continue;
    if (!rows.empty() && entries.size() != rows.front().size())
      throw InputError("lattice: rows have different lengths");
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw InputError("lattice: no rows given");
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  return from_generators(m);
}

bool IntLattice::contains(const IntVector& v) const {
  if (v.size() != ambient_dim()) throw InputError("IntLattice::contains: dimension mismatch");
  if (v.isZero()) return true;
  if (rank() == 0) return false;
  IntMatrix stacked(rank() + 1, ambient_dim());
  stacked << basis_, v.transpose();
  return equal(hermite_normal_form(to_big(stacked)), hermite_normal_form(to_big(basis_)));
}

std::string IntLattice::to_string() const {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    if (i) os << ';';
    for (Eigen::Index j = 0; j < basis_.cols(); ++j) os << (j ? "," : "") << basis_(i, j);
  }
  return os.str();
}

BigInt gram_determinant(const IntLattice& lattice) {
  if (lattice.rank() == 0) return 1;
  return determinant(gram(basis_big(lattice)));
}

double log_det(const IntLattice& lattice) { return half_log(gram_determinant(lattice)); }

double det_lattice(const IntLattice& lattice) { return std::exp(log_det(lattice)); }

BigMatrix hermite_normal_form(const BigMatrix& rows) {
  BigMatrix m = rows;
  const int r = echelon(m, m.cols(), true);
  return m.topRows(r);
}

IntMatrix canonical_basis(const IntLattice& lattice) {
  return to_int(hermite_normal_form(basis_big(lattice)));
}

bool same_lattice(const IntLattice& a, const IntLattice& b) {
  return a.ambient_dim() == b.ambient_dim() && canonical_basis(a) == canonical_basis(b);
}

IntMatrix integer_kernel(const BigMatrix& m) {
  const Eigen::Index n = m.cols();
  BigMatrix aug(n, m.rows() + n);
  aug.leftCols(m.rows()) = m.transpose();
  aug.rightCols(n) = BigMatrix::Identity(n, n);
  const int rank = echelon(aug, m.rows(), false);
  if (rank == n) return IntMatrix(0, n);
  const BigMatrix kernel = aug.bottomRows(n - rank).rightCols(n);
  const BigMatrix h = lll_gram(gram(kernel));
  return to_int(multiply(h, kernel));
}

IntLattice congruence_lattice(const IntMatrix& rows, const std::vector<std::int64_t>& moduli) {
  const Eigen::Index g = rows.rows(), d = rows.cols();
  if (static_cast<std::size_t>(g) != moduli.size()) throw InputError("congruence_lattice: modulus count mismatch");
  if (g == 0) return IntLattice::standard(static_cast<int>(d));
  BigMatrix relation = BigMatrix::Zero(g, d + g);
  relation.leftCols(d) = to_big(rows);
  for (Eigen::Index i = 0; i < g; ++i) {
    if (moduli[static_cast<std::size_t>(i)] < 1) throw InputError("congruence_lattice: moduli must be positive");
    relation(i, d + i) = -moduli[static_cast<std::size_t>(i)];
  }
  const IntMatrix kernel = integer_kernel(relation);
  return IntLattice::from_generators(kernel.leftCols(d));
}

IntLattice lattice_of_torsion(const TorsionPoint& zeta) {
  IntMatrix row(1, zeta.dim());
  for (int i = 0; i < zeta.dim(); ++i) row(0, i) = zeta.residues()[static_cast<std::size_t>(i)];
  IntLattice out = congruence_lattice(row, {zeta.order()});
  if (gram_determinant(out) != BigInt(zeta.order()) * zeta.order())
    throw AuditFailure("lattice_of_torsion: determinant differs from the order");
  return out;
}

IntLattice lll_reduce(const IntLattice& lattice) {
  if (lattice.rank() <= 1) return lattice;
  const BigMatrix b = basis_big(lattice);
  const BigMatrix h = lll_gram(gram(b));
  return IntLattice(to_int(multiply(h, b)));
}

std::vector<IntVector> short_vectors(const IntLattice& lattice, const BigInt& radius2) {
  std::vector<IntVector> out;
  if (lattice.rank() == 0) return out;
  for (const auto& x : enumerate_gram(gram(basis_big(lattice)), radius2))
    out.push_back(combine(x, lattice.basis()));
  return out;
}

std::optional<IntVector> shortest_vector(const IntLattice& lattice, Norm norm) {
  if (lattice.rank() == 0) return std::nullopt;
  const IntLattice reduced = lll_reduce(lattice);
  const BigMatrix g = gram(basis_big(reduced));
  BigInt radius2 = g(0, 0);
  for (Eigen::Index i = 1; i < g.rows(); ++i) radius2 = std::min(radius2, BigInt(g(i, i)));
  auto pick = [](const std::vector<IntVector>& cands, auto&& measure) {
    std::optional<IntVector> best;
    BigInt best_m = 0;
    for (const auto& raw : cands) {
      const IntVector v = normalize_sign(raw);
      const BigInt m = measure(v);
      if (!best || m < best_m || (m == best_m && lex_less(v, *best))) {
        best = v;
        best_m = m;
      }
    }
    return best;
  };
  const std::optional<IntVector> e = pick(short_vectors(reduced, radius2), squared_norm);
  if (norm == Norm::euclidean) return e;
  const std::int64_t t = vec_max_norm(*e);
  const BigInt r2 = BigInt(t) * t * lattice.ambient_dim();
  return pick(short_vectors(reduced, r2), [](const IntVector& v) { return BigInt(vec_max_norm(v)); });
}

double lambda1(const IntLattice& lattice, Norm norm) {
  const auto v = shortest_vector(lattice, norm);
  if (!v) return kInfinity;
  if (norm == Norm::max) return static_cast<double>(vec_max_norm(*v));
  return std::sqrt(static_cast<double>(v->cast<double>().squaredNorm()));
}

MinDetResult min_det_sublattice(const IntLattice& lattice, int r) {
  const int k = lattice.rank();
  const int d = lattice.ambient_dim();
  if (r < 0 || r > k) throw InputError("min_det_sublattice: rank out of range");
  MinDetResult res;
  res.witness = IntLattice(d);
  if (r == 0) {
    res.gram_det = 1;
    res.log_det = 0.0;
    return res;
  }
  if (r == k) {
    res.gram_det = gram_determinant(lattice);
    res.log_det = half_log(res.gram_det);
    res.witness = IntLattice(canonical_basis(lattice));
    return res;
  }
  const IntLattice reduced = lll_reduce(lattice);
  const IntMatrix& b = reduced.basis();
  const BigMatrix g = gram(to_big(b));
  std::optional<IntMatrix> best_basis;
  auto consider = [&](const BigInt& gd, const IntMatrix& rows) {
    const IntMatrix canon = to_int(hermite_normal_form(to_big(rows)));
    if (!best_basis || gd < res.gram_det || (gd == res.gram_det && lex_less_matrix(canon, *best_basis))) {
      res.gram_det = gd;
      best_basis = canon;
    }
  };
  if (r == 1) {
    const IntVector v = *shortest_vector(reduced, Norm::euclidean);
    consider(squared_norm(v), IntMatrix(v.transpose()));
  } else if (r == k - 1) {
    // Rank k-1 sublattices that are saturated correspond to primitive c in
    // Z^k via {x B : <x, c> = 0}, with squared determinant c^T adj(G) c.
    BigInt det_g;
    const BigMatrix adj = adjugate_spd(g, det_g);
    BigInt radius2 = adj(0, 0);
    for (Eigen::Index i = 1; i < adj.rows(); ++i) radius2 = std::min(radius2, BigInt(adj(i, i)));
    for (const auto& c : enumerate_gram(adj, radius2)) {
      const BigInt value = quad_form(adj, c);
      if (best_basis && value > res.gram_det) continue;
      const IntMatrix rows = to_int(multiply(kernel_of_row(c), to_big(b)));
      consider(value, rows);
    }
  } else if (r == 2) {
    // Successive minima of a rank-2 minimizer L' satisfy
    // lambda_2(L') <= (2/sqrt 3) det L' / lambda_1(Lambda).
    const BigInt lambda1_sq = squared_norm(*shortest_vector(reduced, Norm::euclidean));
    const BigInt upper = g(0, 0) * g(1, 1) - g(0, 1) * g(0, 1);
    const BigInt radius2 = (4 * upper + 3 * lambda1_sq - 1) / (3 * lambda1_sq);
    std::vector<std::vector<std::int64_t>> vecs;
    for (auto& x : enumerate_gram(g, radius2)) {
      const auto first = std::find_if(x.begin(), x.end(), [](std::int64_t c) { return c != 0; });
      if (*first > 0) vecs.push_back(std::move(x));
    }
    std::vector<BigInt> norms;
    for (const auto& x : vecs) norms.push_back(quad_form(g, x));
    for (std::size_t i = 0; i < vecs.size(); ++i)
      for (std::size_t j = i + 1; j < vecs.size(); ++j) {
        BigInt cross = 0;
        for (int a = 0; a < k; ++a)
          for (int c = 0; c < k; ++c) cross += g(a, c) * vecs[i][a] * vecs[j][c];
        const BigInt gd = norms[i] * norms[j] - cross * cross;
        if (gd == 0 || (best_basis && gd > res.gram_det)) continue;
        IntMatrix rows(2, d);
        rows.row(0) = combine(vecs[i], b).transpose();
        rows.row(1) = combine(vecs[j], b).transpose();
        consider(gd, rows);
      }
  } else {
    throw InputError("min_det_sublattice: exact mode supports rank at most 4");
  }
  res.log_det = half_log(res.gram_det);
  res.witness = IntLattice(*best_basis);
  return res;
}

double HNProfile::hull_value(int j) const {
  double acc = 0.0;
  for (int i = 0; i < j; ++i) acc += slopes[static_cast<std::size_t>(i)];
  return acc;
}

HNProfile hn_profile(const IntLattice& lattice) {
  const int k = lattice.rank();
  HNProfile p;
  for (int r = 0; r <= k; ++r) {
    MinDetResult m = min_det_sublattice(lattice, r);
    p.min_gram_dets.push_back(m.gram_det);
    p.min_log_dets.push_back(m.log_det);
    p.witnesses.push_back(std::move(m.witness));
  }
  // Lower convex hull of (r, log g_r / 2), compared exactly:
  // j lies on or above the chord from i to l iff g_j^(l-i) >= g_i^(l-j) g_l^(j-i).
  auto above_or_on = [&](int i, int j, int l) {
    using boost::multiprecision::pow;
    const BigInt& gi = p.min_gram_dets[static_cast<std::size_t>(i)];
    const BigInt& gj = p.min_gram_dets[static_cast<std::size_t>(j)];
    const BigInt& gl = p.min_gram_dets[static_cast<std::size_t>(l)];
    return pow(gj, static_cast<unsigned>(l - i)) >=
           pow(gi, static_cast<unsigned>(l - j)) * pow(gl, static_cast<unsigned>(j - i));
  };
  std::vector<int> hull;
  for (int r = 0; r <= k; ++r) {
    while (hull.size() >= 2 && above_or_on(hull[hull.size() - 2], hull.back(), r)) hull.pop_back();
    hull.push_back(r);
  }
  p.on_hull.assign(static_cast<std::size_t>(k) + 1, false);
  for (int h : hull) p.on_hull[static_cast<std::size_t>(h)] = true;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int a = hull[s], b = hull[s + 1];
    const double slope = (p.min_log_dets[static_cast<std::size_t>(b)] - p.min_log_dets[static_cast<std::size_t>(a)]) /
                         static_cast<double>(b - a);
    for (int j = a; j < b; ++j) p.slopes.push_back(slope);
    if (s + 2 < hull.size()) p.jump_ranks.push_back(b);
  }
  return p;
}

LambdaNu lambda_nu(const HNProfile& profile, double log_det_total, double nu) {
  if (!(nu > 0.0 && nu <= 0.5)) throw InputError("lambda_nu: nu must lie in (0, 1/2]");
  if (log_det_total < 0.0) throw InputError("lambda_nu: determinant below 1");
  const int rank = static_cast<int>(profile.slopes.size());
  if (rank == 0) throw InputError("lambda_nu: zero lattice");
  LambdaNu out;
  out.lattice = IntLattice(profile.witnesses.front().ambient_dim());
  for (int j = 0; j < rank; ++j) {
    if (profile.slopes[static_cast<std::size_t>(j)] >= std::pow(nu, rank - j) * log_det_total) {
      out.j = j;
      out.lattice = profile.witnesses[static_cast<std::size_t>(j)];
      if (j > 0 && !profile.on_hull[static_cast<std::size_t>(j)])
        throw AuditFailure("lambda_nu: selected rank is not a filtration member");
      return out;
    }
  }
  throw AuditFailure("lambda_nu: no admissible rank although det >= 1");
}

LambdaNu lambda_nu(const IntLattice& lattice, double nu) {
  return lambda_nu(hn_profile(lattice), log_det(lattice), nu);
}

IntLattice saturate(const IntLattice& lattice) {
  const int d = lattice.ambient_dim();
  if (lattice.rank() == 0) return lattice;
  if (lattice.rank() == d) return IntLattice::standard(d);
  const IntMatrix orth = integer_kernel(basis_big(lattice));
  return IntLattice(integer_kernel(to_big(orth)));
}

double tilde_lambda(const TorsionPoint& zeta, double nu) {
  const IntLattice l = lattice_of_torsion(zeta);
  const LambdaNu ln = lambda_nu(l, nu);
  const double cap = std::pow(static_cast<double>(zeta.order()), std::pow(nu, zeta.dim()) / 2.0);
  return std::min(lambda1(saturate(ln.lattice), Norm::max), cap);
}

double rho(const ExponentVector& a) {
  if (std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; }))
    throw InputError("rho: vector must be nonzero");
  if (a.size() == 1) return kInfinity;
  BigMatrix row(1, static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) row(0, static_cast<Eigen::Index>(i)) = a[i];
  return lambda1(IntLattice(integer_kernel(row)), Norm::max);
}

IntMatrix complete_to_unimodular(const IntMatrix& columns) {
  const Eigen::Index d = columns.rows(), k = columns.cols();
  if (k > d) throw InputError("complete_to_unimodular: too many columns");
  BigMatrix aug(d, k + d);
  aug.leftCols(k) = to_big(columns);
  aug.rightCols(d) = BigMatrix::Identity(d, d);
  const int rank = echelon(aug, k, false);
  if (rank < k) throw InputError("complete_to_unimodular: columns are linearly dependent");
  const BigMatrix upper = aug.topLeftCorner(k, k);
  BigInt det = 1;
  for (Eigen::Index i = 0; i < k; ++i) det *= upper(i, i);
  if (det != 1) throw InputError("complete_to_unimodular: columns do not span a saturated lattice");
  // T C = [R; 0] with T unimodular, so V = T^{-1} diag(R, I) has first columns C.
  const IntMatrix t_inv = inverse_unimodular(to_int(aug.rightCols(d)));
  BigMatrix block = BigMatrix::Identity(d, d);
  block.topLeftCorner(k, k) = upper;
  IntMatrix v = to_int(multiply(to_big(t_inv), block));
  if (k > 0) {
    const Eigen::MatrixXd c = columns.cast<double>();
    const Eigen::MatrixXd gram_c = c.transpose() * c;
    for (Eigen::Index j = k; j < d; ++j) {
      const Eigen::VectorXd t = gram_c.ldlt().solve(c.transpose() * v.col(j).cast<double>());
      for (Eigen::Index i = 0; i < k; ++i) v.col(j) -= static_cast<std::int64_t>(std::llround(t(i))) * columns.col(i);
    }
  }
  const BigInt check = determinant(v);
  if ((check != 1 && check != -1) || v.leftCols(k) != columns)
    throw AuditFailure("complete_to_unimodular: result is not a unimodular completion");
  return v;
}

std::int64_t max_norm(const IntMatrix& m) {
  std::int64_t out = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out = std::max(out, m(i, j) < 0 ? -m(i, j) : m(i, j));
  return out;
}

}  // namespace atoral
