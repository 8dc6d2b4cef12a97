#include "atoral/torus.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "atoral/lattice.hpp"
#include "atoral/numtheory.hpp"

namespace atoral {

namespace {

constexpr std::size_t kMaxGroupSize = 1'000'000;

std::vector<std::int64_t> lift_residues(const TorsionPoint& z, std::int64_t e) {
  std::vector<std::int64_t> out = z.residues();
  for (auto& x : out) x *= e / z.order();
  return out;
}

}  // namespace

std::int64_t delta_point(const TorsionPoint& zeta) {
  return static_cast<std::int64_t>(lambda1(lattice_of_torsion(zeta), Norm::max));
}

FiniteTorusSubgroup::FiniteTorusSubgroup(std::vector<TorsionPoint> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw InputError("FiniteTorusSubgroup: at least one generator is required");
  dim_ = gens_.front().dim();
  for (const auto& g : gens_) {
    if (g.dim() != dim_) throw InputError("FiniteTorusSubgroup: generators differ in dimension");
    exponent_ = lcm(exponent_, g.order());
  }
  std::vector<std::vector<std::int64_t>> lifted;
  for (const auto& g : gens_) lifted.push_back(lift_residues(g, exponent_));
  const std::vector<std::int64_t> zero(static_cast<std::size_t>(dim_), 0);
  std::set<std::vector<std::int64_t>> seen{zero};
  std::vector<std::vector<std::int64_t>> frontier{zero};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& x : frontier)
      for (const auto& g : lifted) {
        std::vector<std::int64_t> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] + g[i]) % exponent_;
        if (seen.insert(y).second) {
          if (seen.size() > kMaxGroupSize) throw InputError("FiniteTorusSubgroup: more than 10^6 elements");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  for (const auto& x : seen) elems_.emplace_back(x, exponent_);
  // Lagrange: the element count must divide exponent^d.
  BigInt bound = 1;
  for (int i = 0; i < dim_; ++i) bound *= exponent_;
  if (bound % elems_.size() != 0) throw AuditFailure("FiniteTorusSubgroup: element count is inconsistent");
}

FiniteTorusSubgroup FiniteTorusSubgroup::full_torsion(int dim, std::int64_t n) {
  std::vector<TorsionPoint> gens;
  for (int i = 0; i < dim; ++i) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(dim), 0);
    b[static_cast<std::size_t>(i)] = 1;
    gens.emplace_back(b, n);
  }
  return FiniteTorusSubgroup(gens);
}

FiniteTorusSubgroup FiniteTorusSubgroup::parse(const std::string& text) {
  std::vector<TorsionPoint> gens;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) gens.push_back(TorsionPoint::parse(item));
  return FiniteTorusSubgroup(gens);
}

std::int64_t delta_group(const FiniteTorusSubgroup& g) {
  IntMatrix rows(static_cast<Eigen::Index>(g.generators().size()), g.dim());
  std::vector<std::int64_t> moduli;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const TorsionPoint& z = g.generators()[i];
    for (int j = 0; j < g.dim(); ++j) rows(static_cast<Eigen::Index>(i), j) = z.residues()[static_cast<std::size_t>(j)];
    moduli.push_back(z.order());
  }
  return static_cast<std::int64_t>(lambda1(congruence_lattice(rows, moduli), Norm::max));
}

CountAudit count_kernel(const FiniteTorusSubgroup& g, const ExponentVector& a) {
  std::int64_t norm = 0;
  for (auto x : a) norm = std::max(norm, x < 0 ? -x : x);
  if (norm == 0) throw InputError("count_kernel: vector must be nonzero");
  CountAudit out;
  out.total = static_cast<std::int64_t>(g.size());
  for (const auto& z : g.elements())
    if (z.kills(a)) ++out.count;
  out.ratio = static_cast<double>(out.count) / static_cast<double>(out.total);
  out.bound = static_cast<double>(norm) / static_cast<double>(delta_group(g));
  out.holds = out.ratio <= out.bound;
  return out;
}

CountAudit count_small_delta(const FiniteTorusSubgroup& g, double t) {
  if (t < 1.0) throw InputError("count_small_delta: threshold must be at least 1");
  CountAudit out;
  out.total = static_cast<std::int64_t>(g.size());
  for (const auto& z : g.elements())
    if (static_cast<double>(delta_point(z)) <= t) ++out.count;
  out.ratio = static_cast<double>(out.count) / static_cast<double>(out.total);
  out.bound = std::pow(3.0, g.dim()) * std::pow(t, g.dim() + 1) / static_cast<double>(delta_group(g));
  out.holds = out.ratio <= out.bound;
  return out;
}

CountAudit mean_delta_power(const FiniteTorusSubgroup& g, double kappa) {
  if (!(kappa > 0.0)) throw InputError("mean_delta_power: kappa must be positive");
  CountAudit out;
  out.total = static_cast<std::int64_t>(g.size());
  out.count = out.total;
  double sum = 0.0;
  for (const auto& z : g.elements()) sum += std::pow(static_cast<double>(delta_point(z)), -kappa);
  out.ratio = sum / static_cast<double>(out.total);
  const double d = g.dim();
  out.bound = std::pow(4.0, d) * std::pow(static_cast<double>(delta_group(g)), -kappa / (d + 1.0 + kappa));
  out.holds = out.ratio <= out.bound;
  return out;
}

}  // namespace atoral
