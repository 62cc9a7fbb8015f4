#include "atwood/serialize.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace atwood {

namespace {

Json rational_pair(const Rational& q) { return {q.get_num().get_str(), q.get_den().get_str()}; }

Rational rational_of(const Json& num, const Json& den) {
  Rational q(mpz_class(num.get<std::string>()), mpz_class(den.get<std::string>()));
  q.canonicalize();
  return q;
}

Json vec_to_json(const Vec4<CoefficientPoly>& v, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str(names));
  return out;
}

Json vec_to_json(const Vec4<GaussianRational>& v, const std::vector<std::string>&) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::string text_of(const CoefficientPoly& c, const std::vector<std::string>& names) { return c.str(names); }
std::string text_of(const GaussianRational& c, const std::vector<std::string>&) { return c.str(); }

template <class T>
Json series_json(const PuiseuxSeries<T>& s, const std::vector<std::string>* names) {
  Json j;
  j["k"] = s.k();
  j["leading"] = s.lead();
  j["order"] = s.exact() ? Json(nullptr) : Json(s.order());
  Json coeffs = Json::array();
  Json text = Json::array();
  for (const auto& c : s.coeffs()) {
    coeffs.push_back(to_json(c));
    if (names) text.push_back(text_of(c, *names));
  }
  j["coeffs"] = coeffs;
  if (names) j["display"] = text;
  return j;
}

}  // namespace

Json to_json(const GaussianRational& v) {
  Json re = rational_pair(v.real());
  Json im = rational_pair(v.imag());
  return {re[0], re[1], im[0], im[1]};
}

GaussianRational gaussian_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("Gaussian rational must be four integer strings");
  return GaussianRational(rational_of(j[0], j[1]), rational_of(j[2], j[3]));
}

Json to_json(const CoefficientPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json ex = Json::array();
    for (auto x : e) ex.push_back(static_cast<int>(x));
    out.push_back({{"e", ex}, {"c", to_json(c)}});
  }
  return out;
}

CoefficientPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a list of monomials");
  CoefficientPoly p;
  for (const auto& m : j) {
    Exponents e{};
    const auto& ex = m.at("e");
    if (ex.size() > kMaxConstants) throw std::invalid_argument("too many constant slots");
    for (std::size_t i = 0; i < ex.size(); ++i) e[i] = static_cast<std::int16_t>(ex[i].get<int>());
    p += CoefficientPoly::monomial(e, gaussian_from_json(m.at("c")));
  }
  return p;
}

Json to_json(const PuiseuxSeries<CoefficientPoly>& s) { return series_json(s, nullptr); }

Json to_json(const PuiseuxSeries<GaussianRational>& s) {
  // Numeric coefficients use the same monomial layout with a zero exponent vector.
  Json j = series_json(s, nullptr);
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(CoefficientPoly(c)));
  j["coeffs"] = coeffs;
  return j;
}

PuiseuxSeries<CoefficientPoly> series_from_json(const Json& j) {
  std::vector<CoefficientPoly> c;
  for (const auto& x : j.at("coeffs")) c.push_back(poly_from_json(x));
  const int lead = j.at("leading").get<int>();
  const int order = j.at("order").is_null() ? PuiseuxSeries<CoefficientPoly>::kExactOrder : j.at("order").get<int>();
  return PuiseuxSeries<CoefficientPoly>(j.at("k").get<int>(), lead, std::move(c), order);
}

template <class T>
Json expansion_to_json(const Expansion<T>& ex) {
  const auto names = ex.constant_names();
  Json j;
  const auto& b = ex.balance;
  j["family"] = b.family == BranchFamily::kIntegrable ? "integrable" : "k_r";
  j["k"] = b.k;
  j["r"] = b.r;
  j["p"] = b.p.get_str();
  j["q"] = b.q.get_str();
  j["mass_ratio"] = b.mass_ratio.get_str();
  j["params"] = {{"m", ex.params.m.get_str()}, {"M", ex.params.M.get_str()}, {"g", ex.params.g.get_str()}};
  j["n_terms"] = ex.n_terms;
  Json constants = Json::array();
  for (const auto& c : ex.constants) constants.push_back({{"name", c.name}, {"step", c.step}});
  j["constants"] = constants;
  Json series;
  const std::pair<const char*, const PuiseuxSeries<T>*> all[] = {
      {"x_plus", &ex.x_plus}, {"x_minus", &ex.x_minus}, {"z", &ex.z}, {"lambda", &ex.lambda}};
  for (const auto& [name, s] : all) {
    Json sj = to_json(*s);
    Json text = Json::array();
    for (const auto& c : s->coeffs()) text.push_back(text_of(c, names));
    sj["display"] = text;
    series[name] = sj;
  }
  j["series"] = series;
  Json log = Json::array();
  for (const auto& rec : ex.resonance_log) {
    log.push_back({{"s", rec.s},
                   {"rhs", vec_to_json(rec.rhs, names)},
                   {"compatibility", text_of(rec.compatibility, names)},
                   {"solvable", rec.solvable},
                   {"constant", rec.constant},
                   {"normalized", component_name(rec.normalized)},
                   {"null_vector", vec_to_json(rec.null_vector, names)}});
  }
  j["resonance_log"] = log;
  return j;
}

template Json expansion_to_json<CoefficientPoly>(const Expansion<CoefficientPoly>&);
template Json expansion_to_json<GaussianRational>(const Expansion<GaussianRational>&);

GaussianRational parse_gaussian(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("empty number");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t p = 1; p < s.size(); ++p) {
    if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '*') {
      terms.push_back(s.substr(start, p - start));
      start = p;
    }
  }
  terms.push_back(s.substr(start));
  GaussianRational out;
  for (std::string t : terms) {
    const std::size_t at = t.find('i');
    const bool imag = at != std::string::npos;
    if (imag) {
      t.erase(at, 1);
      if (at < t.size() && t[at] == '*') t.erase(at, 1);
      if (at > 0 && t[at - 1] == '*') t.erase(at - 1, 1);
    }
    std::string sign;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
      sign = t.substr(0, 1);
      t.erase(0, 1);
    }
    if (t.empty() || t.front() == '/') t.insert(0, "1");
    Rational v = parse_rational(t);
    if (sign == "-") v = -v;
    out += imag ? GaussianRational(Rational(0), v) : GaussianRational(v);
  }
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_coefficient_csv(std::ostream& os, const std::vector<std::string>& names,
                           const std::vector<PuiseuxSeries<Complex>>& series) {
  os << "series,j,exponent,k,re,im\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& f = series[s];
    for (std::size_t j = 0; j < f.size(); ++j) {
      os << names[s] << ',' << j << ',' << f.lead() + static_cast<int>(j) << ',' << f.k() << ','
         << format_double(f.coeffs()[j].real()) << ',' << format_double(f.coeffs()[j].imag()) << '\n';
    }
  }
}

std::vector<CoefficientRow> read_coefficient_csv(std::istream& is) {
  std::vector<CoefficientRow> rows;
  std::string line;
  bool header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "series,j,exponent,k,re,im") throw std::invalid_argument("unexpected coefficient CSV header");
      header = true;
      continue;
    }
    std::stringstream ss(line);
    std::string f[6];
    for (auto& x : f) {
      if (!std::getline(ss, x, ',')) throw std::invalid_argument("short coefficient CSV row: " + line);
    }
    rows.push_back({f[0], std::stoi(f[1]), std::stoi(f[2]), std::stoi(f[3]), {std::stod(f[4]), std::stod(f[5])}});
  }
  return rows;
}

std::vector<Complex> coefficients_of(const std::vector<CoefficientRow>& rows, const std::string& series) {
  std::vector<Complex> out;
  for (const auto& r : rows) {
    if (r.series != series) continue;
    if (r.j != static_cast<int>(out.size())) throw std::invalid_argument("coefficient rows out of order");
    out.push_back(r.value);
  }
  if (out.empty()) throw std::invalid_argument("no coefficients for series " + series);
  return out;
}

}  // namespace atwood
