#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "atwood/diagnostics.hpp"
#include "atwood/exactsol.hpp"
#include "atwood/model.hpp"
#include "atwood/poisson.hpp"
#include "atwood/serialize.hpp"

namespace atwood::cli {

namespace {

namespace fs = std::filesystem;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> kSeriesNames = {"x_plus", "x_minus", "z", "lambda"};
const std::vector<std::string> kConstantFlags = {"b1", "c1", "c2", "d1"};

struct RunConfig {
  std::string command;
  std::string family;  // "integrable" or "kr"
  bool integrable = false;
  int k = 0;
  int r = 0;
  int k_max = -1;
  int n_terms = 0;
  int pade_m = 59;
  std::map<std::string, std::string> constants;
  std::string g = "1";
  std::string m = "1";
  std::string K;
  std::string E;
  std::string out = "out";
  double tol = 1e-8;
  std::string policy = "published";
  std::string input;
  int stride = 0;  // 0 picks 1 or 2 per series
  std::string series = "x_plus";
  std::string expected;
  std::string t0;
  std::string t1;
  int grid = 16;
  int bits = 256;

  bool bridged() const { return !K.empty() || !E.empty(); }

  Json echo() const {
    Json c;
    c["family"] = integrable ? "integrable" : (k ? "kr" : "");
    if (!integrable && k) {
      c["k"] = k;
      c["r"] = r;
    }
    if (command == "scan") c["k_max"] = k_max;
    c["N"] = n_terms;
    c["M"] = pade_m;
    Json cs = Json::object();
    for (const auto& [name, v] : constants) cs[name] = v;
    c["constants"] = cs;
    c["g"] = g;
    c["m"] = m;
    c["K"] = K;
    c["E"] = E;
    c["tol"] = tol;
    c["policy"] = policy;
    c["input"] = input;
    c["stride"] = stride;
    c["series"] = series;
    c["expected"] = expected;
    c["t0"] = t0;
    c["t1"] = t1;
    c["grid"] = grid;
    c["bits"] = bits;
    return c;
  }
};

Json header(const RunConfig& cfg) {
  return {{"artifact", kArtifact}, {"version", kVersion}, {"command", cfg.command}, {"config", cfg.echo()}};
}

Json cjson(Complex z) { return {z.real(), z.imag()}; }

Json cjson(std::span<const Complex> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(cjson(z));
  return out;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

class Outputs {
 public:
  Outputs(const RunConfig& cfg, std::ostream& log) : cfg_(cfg), log_(log) {}

  std::ofstream open(const std::string& name) {
    const fs::path p = fs::path(cfg_.out) / name;
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + p.string());
    written_.push_back(p.string());
    log_ << "wrote " << p.string() << '\n';
    return f;
  }

  // CSV files start with one "# {header}" comment line.
  std::ofstream csv(const std::string& name) {
    auto f = open(name);
    f << "# " << header(cfg_).dump() << '\n';
    return f;
  }

  void json(const std::string& name, Json body) {
    Json doc;
    doc["header"] = header(cfg_);
    for (auto& [key, v] : body.items()) doc[key] = std::move(v);
    auto f = open(name);
    f << doc.dump(2) << '\n';
  }

 private:
  const RunConfig& cfg_;
  std::ostream& log_;
  std::vector<std::string> written_;
};

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw ConfigError("--" + name + " expects a rational number, got '" + text + "'");
  }
}

GaussianRational gaussian_flag(const std::string& name, const std::string& text) {
  try {
    return parse_gaussian(text);
  } catch (const std::exception&) {
    throw ConfigError("--" + name + " expects a Gaussian rational such as 1/2+3i, got '" + text + "'");
  }
}

LeadingBalance balance_of(const RunConfig& cfg) {
  if (cfg.integrable) return LeadingBalance::integrable(Rational(-1, 2));
  if (cfg.k == 0) throw ConfigError("select a family with --integrable or --k K --r R");
  if (!is_admissible(cfg.k, cfg.r)) {
    throw ConfigError("(k, r) = (" + std::to_string(cfg.k) + ", " + std::to_string(cfg.r) + ") is not admissible");
  }
  return LeadingBalance::q2(cfg.k, cfg.r);
}

MachineParams params_of(const RunConfig& cfg, const LeadingBalance& b) {
  const Rational m = rational_flag("m", cfg.m);
  const Rational g = rational_flag("g", cfg.g);
  if (sgn(m) <= 0 || sgn(g) <= 0) throw ConfigError("--m and --g must be positive");
  return MachineParams::with_ratio(b.mass_ratio, m, g);
}

std::vector<std::string> family_constants(const LeadingBalance& b) {
  if (b.family == BranchFamily::kIntegrable) return {"b1", "c1", "d1"};
  return {"c1", "c2", "d1"};
}

std::map<std::string, GaussianRational> constant_values(const RunConfig& cfg, const LeadingBalance& b) {
  const auto names = family_constants(b);
  std::map<std::string, GaussianRational> out;
  for (const auto& [name, text] : cfg.constants) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw ConfigError("--" + name + " is not a constant of this family");
    }
    out[name] = gaussian_flag(name, text);
  }
  return out;
}

ConstantPolicy policy_of(const RunConfig& cfg, const LeadingBalance& b) {
  if (cfg.policy == "published") return ConstantPolicy::published(b);
  if (cfg.policy == "b") return ConstantPolicy::b_normalized();
  if (cfg.policy == "xplus") return ConstantPolicy::x_plus_at_r(b);
  throw ConfigError("--policy must be published, b or xplus");
}

TrigParams trig_of(const RunConfig& cfg) {
  TrigParams tp;
  if (!cfg.K.empty()) tp.K = gaussian_flag("K", cfg.K).to_complex();
  if (!cfg.E.empty()) tp.E = rational_flag("E", cfg.E).get_d();
  tp.g = rational_flag("g", cfg.g).get_d();
  tp.m = rational_flag("m", cfg.m).get_d();
  try {
    tp.validate();
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  return tp;
}

void require_terms(const RunConfig& cfg, int minimum) {
  if (cfg.n_terms < minimum) throw ConfigError("--N must be at least " + std::to_string(minimum));
}

// Numeric series for the diagnostics, from the exact recursion or the bridge.
struct Numeric {
  LeadingBalance balance;
  MachineParams params;
  std::optional<Expansion<GaussianRational>> exact;
  Expansion<Complex> floats;
  Json extra = Json::object();
};

Expansion<Complex> to_float(const Expansion<GaussianRational>& ex) {
  Expansion<Complex> f;
  f.balance = ex.balance;
  f.params = ex.params;
  f.n_terms = ex.n_terms;
  f.x_plus = atwood::to_float(ex.x_plus);
  f.x_minus = atwood::to_float(ex.x_minus);
  f.z = atwood::to_float(ex.z);
  f.lambda = atwood::to_float(ex.lambda);
  f.constants = ex.constants;
  return f;
}

Numeric numeric_expansion(const RunConfig& cfg) {
  if (cfg.bridged()) {
    if (!cfg.integrable) throw ConfigError("--K and --E select the closed-form solution, which needs --integrable");
    const TrigParams tp = trig_of(cfg);
    BridgedSeries bs = [&] {
      try {
        return bridged_expansion(tp, cfg.n_terms);
      } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
      }
    }();
    Numeric n{bs.series.balance, bs.series.params, std::move(bs.rescaled), bs.series, Json::object()};
    const BridgeConstants bc = bridge_constants(tp);
    n.extra["t_infinity"] = cjson(tp.t_infinity());
    n.extra["nu"] = cjson(bs.nu);
    n.extra["bridge_constants"] = {{"b1", cjson(bc.b1)}, {"c1", cjson(bc.c1)}, {"d1", cjson(bc.d1)}};
    return n;
  }
  const LeadingBalance b = balance_of(cfg);
  const MachineParams p = params_of(cfg, b);
  const auto values = constant_values(cfg, b);
  for (const auto& name : family_constants(b)) {
    if (!values.count(name)) throw ConfigError("numeric series need --" + name);
  }
  Expansion<GaussianRational> ex = expand<GaussianRational>(b, p, cfg.n_terms, policy_of(cfg, b), values);
  Expansion<Complex> f = to_float(ex);
  return {b, p, std::move(ex), std::move(f), Json::object()};
}

template <class T>
const PuiseuxSeries<T>& series_by_name(const Expansion<T>& ex, const std::string& name) {
  if (name == "x_plus") return ex.x_plus;
  if (name == "x_minus") return ex.x_minus;
  if (name == "z") return ex.z;
  if (name == "lambda") return ex.lambda;
  throw ConfigError("--series must be one of x_plus, x_minus, z, lambda");
}

std::vector<PuiseuxSeries<Complex>> all_series(const Expansion<Complex>& ex) {
  return {ex.x_plus, ex.x_minus, ex.z, ex.lambda};
}

std::vector<CoefficientRow> load_rows(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path);
  try {
    return read_coefficient_csv(f);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

PuiseuxSeries<Complex> series_from_rows(const std::vector<CoefficientRow>& rows, const std::string& name) {
  std::vector<Complex> c = coefficients_of(rows, name);
  int k = 1;
  int lead = 0;
  for (const auto& row : rows) {
    if (row.series == name && row.j == 0) {
      k = row.k;
      lead = row.exponent;
    }
  }
  return PuiseuxSeries<Complex>::truncated(k, lead, std::move(c));
}

// ---- subcommands ----

int cmd_scan(const RunConfig& cfg, Outputs& out, std::ostream& log) {
  const int k_max = cfg.k_max >= 0 ? cfg.k_max : cfg.k;
  if (k_max < 0) throw ConfigError("scan needs k_max");
  const auto pairs = admissible_pairs(k_max);
  auto f = out.csv("scan.csv");
  f << "k,r,mass_ratio\n";
  for (const auto& p : pairs) {
    f << p.k << ',' << p.r << ',' << p.mass_ratio.get_str() << '\n';
    log << p.k << ' ' << p.r << ' ' << p.mass_ratio.get_str() << '\n';
  }
  return kOk;
}

int cmd_expand(const RunConfig& cfg, Outputs& out) {
  require_terms(cfg, 1);
  if (cfg.bridged()) {
    const Numeric n = numeric_expansion(cfg);
    Json body = n.extra;
    body["expansion"] = expansion_to_json(*n.exact);
    out.json("expansion.json", body);
    auto f = out.csv("coeffs.csv");
    write_coefficient_csv(f, kSeriesNames, all_series(n.floats));
    return kOk;
  }
  const LeadingBalance b = balance_of(cfg);
  const MachineParams p = params_of(cfg, b);
  const auto values = constant_values(cfg, b);
  bool complete = true;
  for (const auto& name : family_constants(b)) complete = complete && values.count(name);
  if (complete) {
    const Numeric n = numeric_expansion(cfg);
    out.json("expansion.json", {{"expansion", expansion_to_json(*n.exact)}});
    auto f = out.csv("coeffs.csv");
    write_coefficient_csv(f, kSeriesNames, all_series(n.floats));
    return kOk;
  }
  std::map<std::string, CoefficientPoly> partial;
  for (const auto& [name, v] : values) partial[name] = CoefficientPoly(v);
  const auto sol = expand<CoefficientPoly>(b, p, cfg.n_terms, policy_of(cfg, b), partial);
  out.json("expansion.json", {{"expansion", expansion_to_json(sol)}});
  return kOk;
}

// Stride 2 when one parity class of the tail vanishes, else 1.
int cmd_diagnose(const RunConfig& cfg, Outputs& out) {
  std::vector<PuiseuxSeries<Complex>> series;
  Json extra = Json::object();
  int k = 1;
  if (!cfg.input.empty()) {
    const auto rows = load_rows(cfg.input);
    for (const auto& name : kSeriesNames) series.push_back(series_from_rows(rows, name));
    k = series.front().k();
  } else {
    require_terms(cfg, 10);
    const Numeric n = numeric_expansion(cfg);
    series = all_series(n.floats);
    extra = n.extra;
    k = n.balance.k;
  }
  std::vector<RatioSequence> ratios;
  std::vector<ExponentSequence> exponents;
  Json summary = Json::array();
  for (std::size_t i = 0; i < series.size(); ++i) {
    Json entry;
    entry["series"] = kSeriesNames[i];
    entry["terms"] = series[i].size();
    const auto& c = series[i].coeffs();
    const int stride = cfg.stride > 0 ? cfg.stride : parity_stride(c);
    entry["stride"] = stride;
    RatioSequence rs;
    try {
      rs = dalembert(std::span<const Complex>(c), {stride, 1e-9, 0.1});
      entry["ratio_limit"] = finite_or_null(rs.limit);
      entry["ratio_uncertainty"] = finite_or_null(rs.uncertainty);
      entry["radius_t"] = finite_or_null(std::pow(rs.limit, -double(k)));
      entry["skipped"] = rs.skipped.size();
    } catch (const std::exception& e) {
      entry["ratio_error"] = e.what();
    }
    ExponentSequence es;
    try {
      es = exponent_estimate(std::span<const Complex>(c), {stride, 1e-9, 0.1});
      entry["exponent"] = finite_or_null(es.exponent);
      entry["exponent_uncertainty"] = finite_or_null(es.uncertainty);
      entry["residue_class"] = es.residue_class;
    } catch (const std::exception& e) {
      entry["exponent_error"] = e.what();
    }
    ratios.push_back(std::move(rs));
    exponents.push_back(std::move(es));
    summary.push_back(entry);
  }
  {
    auto f = out.csv("ratios.csv");
    write_ratio_csv(f, kSeriesNames, ratios);
  }
  {
    auto f = out.csv("exponents.csv");
    write_exponent_csv(f, kSeriesNames, exponents);
  }
  Json body = extra;
  body["k"] = k;
  if (extra.contains("t_infinity")) {
    const Complex tinf(extra["t_infinity"][0].get<double>(), extra["t_infinity"][1].get<double>());
    body["ratio_target"] = std::pow(std::abs(tinf), -1.0 / k);
  }
  body["series"] = summary;
  out.json("summary.json", body);
  return kOk;
}

std::vector<double> expected_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(rational_flag("expected", item).get_d());
  }
  return out;
}

int cmd_pade(const RunConfig& cfg, Outputs& out) {
  if (cfg.pade_m < 1) throw ConfigError("--M must be positive");
  const int needed = 2 * cfg.pade_m + 3;  // log-derivative loses one coefficient
  PadeApproximant pa;
  Json extra = Json::object();
  if (!cfg.input.empty()) {
    const auto rows = load_rows(cfg.input);
    const auto s = series_from_rows(rows, cfg.series);
    if (static_cast<int>(s.size()) < needed) throw ConfigError("input has too few coefficients for --M");
    const auto ld = log_derivative(s);
    pa = pade(std::span<const Complex>(ld), cfg.pade_m, cfg.bits);
  } else {
    RunConfig c = cfg;
    if (c.n_terms == 0) c.n_terms = needed;
    require_terms(c, needed);
    const Numeric n = numeric_expansion(c);
    extra = n.extra;
    const auto ld = log_derivative(series_by_name(*n.exact, cfg.series));
    pa = pade(std::span<const GaussianRational>(ld), cfg.pade_m, cfg.bits);
  }
  ResidueOptions ro;
  ro.expected_exponents = expected_list(cfg.expected);
  const SingularityReport rep = pole_residues(pa, ro);
  {
    auto f = out.csv("singularities.csv");
    write_singularity_csv(f, rep);
  }
  Json body = extra;
  body["requested_m"] = pa.requested_m;
  body["m"] = pa.m;
  body["condition"] = finite_or_null(pa.condition);
  body["scale"] = pa.scale;
  body["precision_bits"] = pa.precision_bits;
  body["notes"] = pa.notes;
  body["numerator"] = cjson(pa.numerator);
  body["denominator"] = cjson(pa.denominator);
  Json poles = Json::array();
  int n_true = 0;
  for (const auto& e : rep.entries) {
    n_true += e.cls == PoleClass::kTrueBranchPoint;
    Json p = {{"pole", cjson(e.pole)},
              {"residue", cjson(e.residue)},
              {"class", pole_class_name(e.cls)},
              {"paired_zero_distance", e.paired_zero_distance}};
    if (!ro.expected_exponents.empty() && e.cls == PoleClass::kTrueBranchPoint) {
      p["nearest_exponent"] = e.nearest_exponent;
      p["deviation"] = e.deviation;
    }
    poles.push_back(p);
  }
  body["true_pole_count"] = n_true;
  body["poles"] = poles;
  body["zeros"] = cjson(rep.zeros);
  out.json("pade.json", body);
  return kOk;
}

int cmd_exact(const RunConfig& cfg, Outputs& out) {
  const TrigParams tp = trig_of(cfg);
  if (cfg.grid < 1) throw ConfigError("--grid must be positive");
  std::vector<Complex> us;
  // U = 1/2 e^(i theta) stays away from the poles at U = 0 and U = +-1.
  for (int j = 0; j < cfg.grid; ++j) us.push_back(std::polar(0.5, 2 * M_PI * (j + 0.5) / cfg.grid));
  {
    auto f = out.csv("trig_grid.csv");
    write_trig_grid_csv(f, tp, us);
  }
  const BridgeConstants bc = bridge_constants(tp);
  Json body;
  body["K"] = cjson(tp.K);
  body["E"] = tp.E;
  body["omega"] = tp.omega();
  body["alpha"] = tp.alpha();
  body["t_infinity"] = cjson(tp.t_infinity());
  body["bridge_constants"] = {{"b1", cjson(bc.b1)}, {"c1", cjson(bc.c1)}, {"d1", cjson(bc.d1)}};
  out.json("exact.json", body);
  return kOk;
}

int cmd_poisson(const RunConfig& cfg, Outputs& out) {
  const LeadingBalance b = balance_of(cfg);
  const MachineParams p = params_of(cfg, b);
  const auto values = constant_values(cfg, b);
  for (const auto& name : family_constants(b)) {
    if (!values.count(name)) throw ConfigError("poisson needs --" + name + " for the evaluation point");
  }
  const int n = cfg.n_terms > 0 ? cfg.n_terms : 14;
  const auto sol = expand_symbolic(b, p, n);
  const Assignment sigma(values.begin(), values.end());
  const BracketTable table = solve_brackets(sol, sigma);
  std::stringstream ss;
  write_bracket_json(ss, table);
  Json body;
  body["table"] = Json::parse(ss.str());
  Json h = Json::object();
  for (const auto& [name, v] : hamiltonian_brackets(sol, table)) h[name] = v.str();
  body["hamiltonian"] = h;
  const ClosedFormBrackets cf = closed_form_brackets(sol);
  Json cmp = Json::array();
  bool all = true;
  for (const auto& [key, v] : table.values) {
    const GaussianRational closed = evaluate_at(cf.get(key.first, key.second), sol, sigma);
    const bool match = closed == v;
    all = all && match;
    cmp.push_back({{"a", key.first}, {"b", key.second}, {"closed_form", closed.str()}, {"match", match}});
  }
  body["closed_form"] = cmp;
  body["closed_form_match"] = all;
  body["jacobi_residual"] = jacobi_check(cf, sol, {sigma}).str();
  if (b.family == BranchFamily::kQ2 && b.k == 3 && b.r == 4) {
    body["c1c2_energy_form"] = evaluate_at(c1c2_energy_form(sol), sol, sigma).str();
  }
  out.json("brackets.json", body);
  return all ? kOk : kFailure;
}

Complex complex_flag(const std::string& name, const std::string& text) { return gaussian_flag(name, text).to_complex(); }

int cmd_integrate(const RunConfig& cfg, Outputs& out) {
  RunConfig c = cfg;
  if (c.n_terms == 0) c.n_terms = 80;
  require_terms(c, 20);
  const Numeric n = numeric_expansion(c);
  const int k = n.balance.k;
  const RatioSequence rs = dalembert(std::span<const Complex>(n.floats.x_minus.coeffs()));
  const double radius = std::pow(rs.limit, -double(k));
  const Complex ta = c.t0.empty() ? Complex(0.2 * radius) : complex_flag("t0", c.t0);
  const Complex tb = c.t1.empty() ? Complex(0.4 * radius) : complex_flag("t1", c.t1);
  if (std::abs(ta) == 0.0 || std::abs(tb) >= radius || std::abs(ta) >= radius) {
    throw ConfigError("--t0 and --t1 must lie inside the convergence disk and avoid t = 0");
  }
  std::vector<double> fractions;
  for (int j = 0; j <= 10; ++j) fractions.push_back(j / 10.0);
  IntegratorOptions opts;
  opts.rel_tol = 1e-13;
  opts.abs_tol = 1e-15;
  const Trajectory tr = integrate_complex(series_state(n.floats, ta), n.params, ta, tb, opts, fractions);
  double max_rel = 0.0;
  double max_abs = 0.0;
  for (const auto& s : tr.samples) {
    const CartesianState ref = series_state(n.floats, s.t);
    const Complex d[] = {s.state.xp - ref.xp, s.state.xm - ref.xm, s.state.z - ref.z};
    const Complex v[] = {ref.xp, ref.xm, ref.z};
    for (int i = 0; i < 3; ++i) {
      max_abs = std::max(max_abs, std::abs(d[i]));
      max_rel = std::max(max_rel, std::abs(d[i]) / std::max(std::abs(v[i]), 1e-300));
    }
  }
  {
    auto f = out.csv("trajectory.csv");
    write_trajectory_csv(f, tr);
  }
  Json body = n.extra;
  body["radius_estimate"] = radius;
  body["t0"] = cjson(ta);
  body["t1"] = cjson(tb);
  body["steps"] = tr.steps;
  body["rejected"] = tr.rejected;
  body["complete"] = tr.complete;
  body["truncation_reason"] = tr.truncation_reason;
  body["max_abs_error"] = max_abs;
  body["max_rel_error"] = max_rel;
  body["tol"] = c.tol;
  body["agree"] = tr.complete && max_rel <= c.tol;
  out.json("comparison.json", body);
  return tr.complete && max_rel <= c.tol ? kOk : kFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_flag("--integrable", cfg.integrable, "integrable family, M/m = 3");
  sub->add_option("--family", cfg.family, "integrable or kr")->check(CLI::IsMember({"integrable", "kr"}));
  sub->add_option("--k", cfg.k, "branch denominator k");
  sub->add_option("--r", cfg.r, "resonance index r");
  sub->add_option("--N", cfg.n_terms, "number of series coefficients");
  sub->add_option("--M", cfg.pade_m, "Pade numerator degree");
  for (const auto& name : kConstantFlags) {
    sub->add_option_function<std::string>(
        "--" + name, [&cfg, name](const std::string& v) { cfg.constants[name] = v; }, "constant " + name);
  }
  sub->add_option("--g", cfg.g, "gravity (rational)");
  sub->add_option("--m", cfg.m, "swinging mass (rational)");
  sub->add_option("--K", cfg.K, "closed-form modulus K");
  sub->add_option("--E", cfg.E, "closed-form energy E (rational)");
  sub->add_option("--out", cfg.out, "output directory");
  sub->add_option("--tol", cfg.tol, "agreement tolerance");
  sub->add_option("--policy", cfg.policy, "constant normalization: published, b or xplus");
  sub->add_option("--input", cfg.input, "coefficient CSV written by expand");
  sub->add_option("--stride", cfg.stride, "coefficient stride for the ratio tests (0: automatic)");
  sub->add_option("--series", cfg.series, "series for the Pade analysis");
  sub->add_option("--expected", cfg.expected, "comma-separated expected exponents");
  sub->add_option("--t0", cfg.t0, "integration start time");
  sub->add_option("--t1", cfg.t1, "integration end time");
  sub->add_option("--grid", cfg.grid, "closed-form grid size");
  sub->add_option("--bits", cfg.bits, "Pade working precision");
}

void report_error(const RunConfig& cfg, std::ostream& err, Json error) {
  Json doc = {{"header", header(cfg)}, {"error", error}};
  err << doc.dump() << '\n';
  std::error_code ec;
  fs::create_directories(cfg.out, ec);
  if (!ec) {
    std::ofstream f(fs::path(cfg.out) / "error.json", std::ios::binary);
    if (f) f << doc.dump(2) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Painleve analysis of the swinging Atwood machine"};
  app.require_subcommand(1);
  const char* names[] = {"scan", "expand", "diagnose", "pade", "exact", "poisson", "integrate"};
  std::map<std::string, CLI::App*> subs;
  for (const char* name : names) {
    auto* sub = app.add_subcommand(name);
    add_common(sub, cfg);
    subs[name] = sub;
  }
  subs["scan"]->add_option("k_max", cfg.k_max, "largest k");
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(cfg, err, {{"kind", "bad_config"}, {"message", e.what()}});
    return kBadConfig;
  }
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) cfg.command = name;
  }
  if (cfg.family == "integrable") cfg.integrable = true;
  if (cfg.family == "kr" && cfg.k == 0) {
    report_error(cfg, err, {{"kind", "bad_config"}, {"message", "--family kr needs --k and --r"}});
    return kBadConfig;
  }
  try {
    if (cfg.n_terms < 0) throw ConfigError("--N must be positive");
    std::error_code ec;
    fs::create_directories(cfg.out, ec);
    if (ec) throw ConfigError("cannot create output directory " + cfg.out);
    Outputs files(cfg, out);
    if (cfg.command == "scan") return cmd_scan(cfg, files, out);
    if (cfg.command == "expand") return cmd_expand(cfg, files);
    if (cfg.command == "diagnose") return cmd_diagnose(cfg, files);
    if (cfg.command == "pade") return cmd_pade(cfg, files);
    if (cfg.command == "exact") return cmd_exact(cfg, files);
    if (cfg.command == "poisson") return cmd_poisson(cfg, files);
    if (cfg.command == "integrate") return cmd_integrate(cfg, files);
    throw ConfigError("unknown command");
  } catch (const ObstructionError& e) {
    report_error(cfg, err,
                 {{"kind", "obstruction"},
                  {"message", e.what()},
                  {"step", e.step()},
                  {"compatibility", e.compatibility()},
                  {"value", {finite_or_null(e.value().real()), finite_or_null(e.value().imag())}}});
    return kObstruction;
  } catch (const std::invalid_argument& e) {
    report_error(cfg, err, {{"kind", "bad_config"}, {"message", e.what()}});
    return kBadConfig;
  } catch (const std::exception& e) {
    report_error(cfg, err, {{"kind", "failure"}, {"message", e.what()}});
    return kFailure;
  }
}

}  // namespace atwood::cli
