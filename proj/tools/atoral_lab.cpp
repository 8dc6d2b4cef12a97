#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "atoral/experiments.hpp"
#include "json.hpp"

namespace {

using namespace atoral;
using nlohmann::json;

struct Globals {
  std::string poly;
  int dim = 0;
  std::string zeta;
  std::string group;
  double nu = 0.0;
  double eps = 0.0;
  std::uint64_t seed = 1;
  std::string out;
  bool json = false;
};

int infer_dim(const std::string& text) {
  int d = 1;
  static const std::regex var("x([0-9]+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
    d = std::max(d, std::stoi((*it)[1].str()));
  return d;
}

std::vector<std::int64_t> parse_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("not an integer list: " + text);
    }
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

class Lab {
 public:
  explicit Lab(Globals& g) : g_(g) {}

  LaurentPoly poly(const std::string& positional) const {
    const std::string text = positional.empty() ? g_.poly : positional;
    if (text.empty()) throw InputError("a polynomial is required (--poly)");
    int d = g_.dim;
    if (d == 0) d = g_.zeta.empty() ? infer_dim(text) : TorsionPoint::parse(g_.zeta).dim();
    const LaurentPoly p = parse_poly(text, d);
    if (p.is_zero()) throw InputError("the polynomial is zero");
    return p;
  }

  TorsionPoint zeta() const {
    if (g_.zeta.empty()) throw InputError("a torsion point is required (--zeta b1/N,...)");
    return TorsionPoint::parse(g_.zeta);
  }

  GaloisSubgroup group(std::int64_t n) const {
    if (g_.group.empty()) return GaloisSubgroup::full(n);
    const GaloisSubgroup h = GaloisSubgroup::parse(g_.group);
    if (h.modulus() != n) throw InputError("--group modulus differs from the order of zeta");
    return h;
  }

 private:
  Globals& g_;
};

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return json(v); }, c);
}

std::string render_json(const Table& t, const Globals& g) {
  json j;
  j["experiment"] = t.experiment();
  j["seed"] = t.seed();
  j["timestamp"] = timestamp();
  json inputs = json::object();
  if (!g.poly.empty()) inputs["poly"] = g.poly;
  if (!g.zeta.empty()) inputs["zeta"] = g.zeta;
  if (!g.group.empty()) inputs["group"] = g.group;
  if (g.nu > 0) inputs["nu"] = g.nu;
  if (g.eps > 0) inputs["eps"] = g.eps;
  j["inputs"] = inputs;
  j["notes"] = t.notes();
  j["columns"] = t.columns();
  json rows = json::array();
  for (const auto& r : t.rows()) {
    json row = json::object();
    for (std::size_t i = 0; i < r.size(); ++i) row[t.columns()[i]] = cell_json(r[i]);
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["ok"] = t.ok();
  return j.dump(2) + "\n";
}

void emit(const Table& t, const Globals& g) {
  const std::string text = g.json ? render_json(t, g) : t.csv();
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw InputError("cannot write " + g.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atoral-lab: experiments on Mahler measures and torsion points"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--poly", g.poly, "Laurent polynomial, e.g. \"1 + x1 + x2\"");
  app.add_option("--dim", g.dim, "number of variables (default: inferred)");
  app.add_option("--zeta", g.zeta, "torsion point b1/N,b2/N,...");
  app.add_option("--group", g.group, "Galois subgroup N:g1,g2,... or N:*");
  app.add_option("--nu", g.nu, "nu in (0, 1/4]");
  app.add_option("--eps", g.eps, "epsilon in (0, 1/2]");
  app.add_option("--seed", g.seed, "seed for randomized steps");
  app.add_option("--out", g.out, "write the CSV (or JSON) to this file");
  app.add_flag("--json", g.json, "emit a JSON record instead of CSV");
  Lab lab(g);
  std::optional<Table> result;
  std::string positional;

  auto* mahler_cmd = app.add_subcommand("mahler", "Mahler measure with bounds");
  mahler_cmd->add_option("poly", positional);
  std::string method = "auto";
  double tol = 1e-9;
  std::size_t points = 1000000;
  mahler_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "jensen", "recursive", "qmc"}));
  mahler_cmd->add_option("--tol", tol);
  mahler_cmd->add_option("--points", points, "QMC points");
  mahler_cmd->callback([&] {
    const MeasureMethod m = method == "jensen"      ? MeasureMethod::jensen
                            : method == "recursive" ? MeasureMethod::recursive
                            : method == "qmc"       ? MeasureMethod::qmc
                                                    : MeasureMethod::automatic;
    result = mahler_report(lab.poly(positional), m, tol, points);
  });

  auto* orbit_cmd = app.add_subcommand("orbit-average", "Galois orbit averages of log|P|");
  orbit_cmd->add_option("poly", positional);
  std::string sweep_n, sweep_delta;
  orbit_cmd->add_option("--sweep-n", sweep_n, "orders N1,N2,... with golden-ratio points");
  orbit_cmd->add_option("--sweep-delta", sweep_delta, "targets for delta(zeta); N is the least prime reaching it");
  orbit_cmd->callback([&] {
    const LaurentPoly p = lab.poly(positional);
    std::vector<TorsionPoint> pts;
    std::optional<std::vector<std::int64_t>> gens;
    std::string choice;
    if (!sweep_n.empty()) {
      for (auto n : parse_ints(sweep_n)) pts.push_back(golden_point(p.dim(), n));
      choice = "golden-ratio points b = (1, round(phi N), ...) mod N";
    } else if (!sweep_delta.empty()) {
      for (auto target : parse_ints(sweep_delta)) pts.push_back(golden_point(p.dim(), golden_prime_for_delta(p.dim(), target)));
      choice = "golden-ratio points at the least prime N with delta >= target";
    } else {
      const TorsionPoint z = lab.zeta();
      pts.push_back(z);
      if (!g.group.empty()) gens = lab.group(z.order()).generators();
    }
    Table t = orbit_average_table(p, pts, gens);
    if (!choice.empty()) t.note(choice);
    result = std::move(t);
  });

  auto* lsv_cmd = app.add_subcommand("lsv-average", "averages of log|P| over finite subgroups of the torus");
  lsv_cmd->add_option("poly", positional);
  std::string torus_group, lsv_sweep;
  lsv_cmd->add_option("--generators", torus_group, "generators b/N,...;b/N,... of one subgroup");
  lsv_cmd->add_option("--sweep-n", lsv_sweep, "N1,N2,...: the full N-torsion mu_N^d");
  lsv_cmd->callback([&] {
    const LaurentPoly p = lab.poly(positional);
    std::vector<FiniteTorusSubgroup> groups;
    if (!torus_group.empty()) groups.push_back(FiniteTorusSubgroup::parse(torus_group));
    if (!lsv_sweep.empty())
      for (auto n : parse_ints(lsv_sweep)) groups.push_back(FiniteTorusSubgroup::full_torsion(p.dim(), n));
    if (groups.empty()) throw InputError("lsv-average needs --generators or --sweep-n");
    result = lsv_average_table(p, groups);
  });

  auto* pipe_cmd = app.add_subcommand("reduction-pipeline", "reduction of an orbit average to univariate pieces");
  pipe_cmd->add_option("poly", positional);
  PipelineOptions popt;
  pipe_cmd->add_option("--delta", popt.delta, "delta for the monomial change (default delta(zeta))");
  pipe_cmd->add_option("--max-degree", popt.max_degree);
  pipe_cmd->callback([&] {
    const TorsionPoint z = lab.zeta();
    popt.nu = g.nu;
    popt.eps = g.eps;
    result = reduction_pipeline(lab.poly(positional), z, lab.group(z.order()), popt);
  });

  auto* ih_cmd = app.add_subcommand("ih-search", "torsion points where P is an algebraic unit");
  ih_cmd->add_option("poly", positional);
  std::int64_t max_order = 12, min_order = 1;
  ih_cmd->add_option("--max-order", max_order);
  ih_cmd->add_option("--min-order", min_order);
  ih_cmd->callback([&] { result = ih_search(lab.poly(positional), max_order, min_order); });

  auto* sep_cmd = app.add_subcommand("separation-audit", "root separation and repulsion inequalities");
  SeparationOptions sopt;
  sep_cmd->add_option("--count", sopt.count);
  sep_cmd->add_option("--degree", sopt.mignotte_degree);
  sep_cmd->add_option("--repulsion-degree", sopt.repulsion_degree);
  sep_cmd->add_option("--coeff-bound", sopt.coeff_bound);
  sep_cmd->add_flag("--reciprocal", sopt.reciprocal);
  sep_cmd->callback([&] {
    sopt.seed = g.seed;
    result = separation_audit(sopt);
  });

  auto* gauss_cmd = app.add_subcommand("gauss-audit", "character and subgroup sum bounds");
  std::int64_t n_max = 60, sub_max = 40;
  gauss_cmd->add_option("N_max", n_max);
  gauss_cmd->add_option("--subgroup-max", sub_max);
  gauss_cmd->callback([&] { result = gauss_audit(n_max, std::min(sub_max, n_max)); });

  auto* disc_cmd = app.add_subcommand("discrepancy", "extreme discrepancy of a point set");
  std::string file;
  bool lower = false;
  disc_cmd->add_option("file", file, "points, one per line");
  disc_cmd->add_flag("--lower-bound", lower, "allow a random-box lower bound beyond the exact range");
  disc_cmd->callback([&] {
    std::optional<PointSet> ps;
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw InputError("cannot read " + file);
      ps = PointSet::read(in);
    } else {
      const TorsionPoint z = lab.zeta();
      ps = PointSet::orbit(z, lab.group(z.order()));
    }
    result = discrepancy_table(*ps, lower, g.seed);
  });

  auto* lawton_cmd = app.add_subcommand("lawton", "m(P(X^a)) against m(P)");
  lawton_cmd->add_option("poly", positional);
  std::vector<std::string> as;
  lawton_cmd->add_option("--a", as, "exponent vectors a1,a2,...")->required();
  lawton_cmd->callback([&] {
    std::vector<ExponentVector> vs;
    for (const auto& a : as) vs.push_back(parse_ints(a));
    result = lawton_table(lab.poly(positional), vs);
  });

  auto* atoral_cmd = app.add_subcommand("atoral", "essential atorality verdict");
  atoral_cmd->add_option("poly", positional);
  atoral_cmd->callback([&] { result = atoral_table(lab.poly(positional)); });

  try {
    app.parse(argc, argv);
    if (!result) return 0;
    if (result->seed() == 0) result->set_seed(g.seed);
    emit(*result, g);
    if (!result->ok()) {
      std::cerr << "atoral-lab: an inequality audit failed\n";
      return 2;
    }
    return 0;
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  } catch (const AuditFailure& e) {
    std::cerr << "atoral-lab: audit failure: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "atoral-lab: input error: " << e.what() << '\n';
    return 3;
  }
}
