#include "atoral/galois.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "atoral/numtheory.hpp"
#include "atoral/summation.hpp"

namespace atoral {

namespace {

std::vector<std::int64_t> closure(std::int64_t n, const std::vector<std::int64_t>& gens) {
  std::set<std::int64_t> seen{mod(1, n)};
  std::vector<std::int64_t> frontier{mod(1, n)};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (std::int64_t x : frontier)
      for (std::int64_t g : gens) {
        const std::int64_t y = mod_mul(x, g, n);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

GaloisSubgroup::GaloisSubgroup(std::int64_t modulus, std::vector<std::int64_t> generators)
    : n_(modulus), gens_(std::move(generators)) {
  if (n_ < 1) throw InputError("GaloisSubgroup: modulus must be positive");
  for (auto& g : gens_) {
    g = mod(g, n_);
    if (gcd(g, n_) != 1) throw InputError("GaloisSubgroup: generator " + std::to_string(g) + " is not a unit");
  }
  elems_ = closure(n_, gens_);
}

GaloisSubgroup GaloisSubgroup::full(std::int64_t modulus) {
  if (modulus < 1) throw InputError("GaloisSubgroup: modulus must be positive");
  std::vector<std::int64_t> gens;
  for (const auto& f : cyclic_decomposition(modulus)) gens.push_back(f.generator);
  return GaloisSubgroup(modulus, gens);
}

GaloisSubgroup GaloisSubgroup::trivial(std::int64_t modulus) { return GaloisSubgroup(modulus, {}); }

GaloisSubgroup GaloisSubgroup::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("group '" + text + "' must have the form N:g1,g2,... or N:*");
  std::int64_t n = 0;
  try {
    n = std::stoll(text.substr(0, colon));
  } catch (const std::logic_error&) {
    throw InputError("group: cannot parse modulus in '" + text + "'");
  }
  const std::string rest = text.substr(colon + 1);
  if (rest == "*") return full(n);
  std::vector<std::int64_t> gens;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      gens.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
      throw InputError("group: cannot parse generator '" + item + "'");
    }
  }
  return GaloisSubgroup(n, gens);
}

std::int64_t GaloisSubgroup::index() const {
  return euler_phi(n_) / static_cast<std::int64_t>(elems_.size());
}

bool GaloisSubgroup::contains(std::int64_t sigma) const {
  return std::binary_search(elems_.begin(), elems_.end(), mod(sigma, n_));
}

std::int64_t GaloisSubgroup::conductor() const {
  for (std::int64_t f : divisors(n_)) {
    bool inside = true;
    for (std::int64_t s = mod(1, n_); s < n_ + (n_ == 1 ? 1 : 0) && inside; s += f) {
      if (gcd(s, n_) != 1) continue;
      inside = contains(s);
    }
    if (inside) return f;
  }
  return n_;
}

GaloisSubgroup GaloisSubgroup::reduce(std::int64_t m) const {
  if (m < 1 || n_ % m != 0) throw InputError("GaloisSubgroup::reduce: target modulus must divide N");
  std::vector<std::int64_t> gens;
  for (std::int64_t g : gens_) gens.push_back(mod(g, m));
  return GaloisSubgroup(m, gens);
}

std::string GaloisSubgroup::to_string() const {
  std::ostringstream os;
  os << n_ << ':';
  if (elems_.size() == static_cast<std::size_t>(euler_phi(n_))) {
    os << '*';
    return os.str();
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? "," : "") << gens_[i];
  return os.str();
}

std::vector<GaloisSubgroup> all_subgroups(std::int64_t modulus) {
  if (modulus < 1 || modulus > 40) throw InputError("all_subgroups: modulus must lie in [1, 40]");
  std::vector<GaloisSubgroup> found;
  auto add = [&](GaloisSubgroup g) {
    for (const auto& h : found)
      if (h == g) return false;
    found.push_back(std::move(g));
    return true;
  };
  add(GaloisSubgroup::trivial(modulus));
  for (std::int64_t s : units_mod(modulus)) add(GaloisSubgroup(modulus, {s}));
  // Every subgroup is generated by cyclic ones, so joins of pairs close up.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        std::vector<std::int64_t> gens = found[i].elements();
        gens.insert(gens.end(), found[j].elements().begin(), found[j].elements().end());
        if (add(GaloisSubgroup(modulus, gens))) grew = true;
      }
  }
  std::sort(found.begin(), found.end(), [](const GaloisSubgroup& a, const GaloisSubgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  });
  for (auto& g : found) {
    // Replace the bulky join generators by a short generating set.
    std::vector<std::int64_t> gens;
    std::vector<std::int64_t> span{mod(1, modulus)};
    for (std::int64_t s : g.elements()) {
      if (std::binary_search(span.begin(), span.end(), s)) continue;
      gens.push_back(s);
      span = closure(modulus, gens);
    }
    g = GaloisSubgroup(modulus, gens);
  }
  return found;
}

std::vector<CyclicFactor> cyclic_decomposition(std::int64_t modulus) {
  if (modulus < 1) throw InputError("cyclic_decomposition: modulus must be positive");
  std::vector<CyclicFactor> out;
  auto lift = [&](std::int64_t residue, std::int64_t q) {
    // x = residue mod q and x = 1 mod modulus / q.
    const std::int64_t rest = modulus / q;
    if (rest == 1) return mod(residue, modulus);
    const std::int64_t t = mod_mul(mod(residue - 1, q), mod_inverse(rest % q, q), q);
    return mod(1 + mod_mul(rest, t, modulus), modulus);
  };
  for (auto [p, e] : factorize(modulus)) {
    std::int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e >= 2) out.push_back({lift(-1, q), 2});
      if (e >= 3) out.push_back({lift(3, q), q / 4});
    } else {
      out.push_back({lift(smallest_primitive_root(q), q), q / p * (p - 1)});
    }
  }
  return out;
}

DirichletCharacter::DirichletCharacter(std::int64_t modulus, std::vector<std::int64_t> exponents)
    : n_(modulus), exps_(std::move(exponents)), factors_(cyclic_decomposition(modulus)) {
  if (exps_.size() != factors_.size())
    throw InputError("DirichletCharacter: expected " + std::to_string(factors_.size()) + " exponents");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] = mod(exps_[i], factors_[i].order);
    order_ = lcm(order_, factors_[i].order / gcd(exps_[i], factors_[i].order));
  }
  // chi(g_i) = e(step_i / order) with step_i = e_i order / ord_i.
  std::vector<std::int64_t> step(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::int64_t g = gcd(exps_[i], factors_[i].order);
    step[i] = exps_[i] == 0 ? 0 : (exps_[i] / g) * (order_ / (factors_[i].order / g)) % order_;
  }
  table_.assign(static_cast<std::size_t>(n_), -1);
  std::vector<std::int64_t> j(exps_.size(), 0);
  std::int64_t x = mod(1, n_), value = 0;
  while (true) {
    table_[static_cast<std::size_t>(x)] = value;
    std::size_t i = 0;
    while (i < j.size() && j[i] == factors_[i].order - 1) {
      j[i] = 0;
      ++i;
    }
    if (i == j.size()) break;
    ++j[i];
    x = mod(1, n_);
    value = 0;
    for (std::size_t t = 0; t < j.size(); ++t) {
      x = mod_mul(x, mod_pow(factors_[t].generator, j[t], n_), n_);
      value = (value + mod_mul(step[t], j[t], order_)) % order_;
    }
  }
}

bool DirichletCharacter::is_trivial() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::int64_t e) { return e == 0; });
}

std::int64_t DirichletCharacter::value_exponent(std::int64_t sigma) const {
  const std::int64_t v = table_[static_cast<std::size_t>(mod(sigma, n_))];
  if (v < 0) throw InputError("DirichletCharacter: argument is not a unit");
  return v;
}

std::complex<double> DirichletCharacter::operator()(std::int64_t sigma) const {
  return unit_root(value_exponent(sigma), order_);
}

GaloisSubgroup DirichletCharacter::kernel() const {
  std::vector<std::int64_t> elems;
  for (std::int64_t s : units_mod(n_))
    if (value_exponent(s) == 0) elems.push_back(s);
  return GaloisSubgroup(n_, elems);
}

std::string DirichletCharacter::to_string() const {
  std::ostringstream os;
  os << "chi[" << n_ << ';';
  for (std::size_t i = 0; i < exps_.size(); ++i) os << (i ? "," : "") << exps_[i];
  os << ']';
  return os.str();
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t modulus) {
  const auto factors = cyclic_decomposition(modulus);
  std::vector<DirichletCharacter> out;
  std::vector<std::int64_t> e(factors.size(), 0);
  while (true) {
    out.emplace_back(modulus, e);
    std::size_t i = 0;
    while (i < e.size() && e[i] == factors[i].order - 1) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return out;
}

std::complex<double> gauss_sum(const DirichletCharacter& chi, std::int64_t k) {
  const std::int64_t n = chi.modulus();
  CompensatedComplexSum s;
  for (std::int64_t sigma : units_mod(n)) s.add(chi(sigma) * unit_root(mod_mul(mod(k, n), sigma, n), n));
  return s.value();
}

std::complex<double> subgroup_exponential_sum(const GaloisSubgroup& g, std::int64_t k) {
  const std::int64_t n = g.modulus();
  CompensatedComplexSum s;
  for (std::int64_t sigma : g.elements()) s.add(unit_root(mod_mul(mod(k, n), sigma, n), n));
  return s.value();
}

double gauss_sum_bound(const DirichletCharacter& chi, std::int64_t k) {
  const std::int64_t n = chi.modulus();
  const std::int64_t n_prime = n / gcd(k, n);
  return static_cast<double>(euler_phi(n)) / static_cast<double>(euler_phi(n_prime)) *
         std::sqrt(static_cast<double>(chi.conductor()));
}

double subgroup_sum_bound(const GaloisSubgroup& g, std::int64_t k) {
  const std::int64_t n = g.modulus();
  const std::int64_t n_prime = n / gcd(k, n);
  return static_cast<double>(g.index()) / static_cast<double>(euler_phi(n_prime)) *
         std::sqrt(static_cast<double>(g.conductor()));
}

}  // namespace atoral
