#include "atwood/poisson.hpp"

#include <json.hpp>
#include <ostream>

namespace atwood {

namespace {

using GrSeries = PuiseuxSeries<GaussianRational>;
using PolySeries = PuiseuxSeries<CoefficientPoly>;

std::vector<GaussianRational> slot_values(const PuiseuxSolution& sol, const Assignment& sigma) {
  std::vector<GaussianRational> v(kMaxConstants, GaussianRational(1));
  for (std::size_t j = 0; j < sol.constants.size(); ++j) {
    const auto it = sigma.find(sol.constants[j].name);
    if (it == sigma.end()) throw std::invalid_argument("no value for constant " + sol.constants[j].name);
    v[j] = it->second;
  }
  return v;
}

std::size_t slot_of(const PuiseuxSolution& sol, const std::string& name) {
  const int s = sol.constant_slot(name);
  if (s < 0) throw std::invalid_argument("unknown constant " + name);
  return static_cast<std::size_t>(s);
}

// Partial derivative along a coordinate: d/dt for t0, d/dc otherwise.
PolySeries partial(const PolySeries& f, const PuiseuxSolution& sol, const std::string& coord) {
  if (coord == "t0") return f.derivative();
  const std::size_t slot = slot_of(sol, coord);
  return f.map([slot](const CoefficientPoly& c) { return c.derivative(slot); });
}

GrSeries at_sigma(const PolySeries& f, std::span<const GaussianRational> values) {
  return f.map([values](const CoefficientPoly& c) { return c.evaluate(values); });
}

std::vector<std::string> coordinates_of(const PuiseuxSolution& sol) {
  std::vector<std::string> out{"t0"};
  for (const auto& n : sol.constant_names()) out.push_back(n);
  return out;
}

std::pair<std::string, std::string> ordered_key(const std::vector<std::string>& coords, const std::string& a,
                                                const std::string& b, bool& flipped) {
  const auto ia = std::find(coords.begin(), coords.end(), a);
  const auto ib = std::find(coords.begin(), coords.end(), b);
  if (ia == coords.end() || ib == coords.end()) throw std::invalid_argument("unknown coordinate " + a + " or " + b);
  flipped = ia > ib;
  return flipped ? std::make_pair(b, a) : std::make_pair(a, b);
}

}  // namespace

GaussianRational BracketTable::get(const std::string& a, const std::string& b) const {
  if (a == b) return GaussianRational();
  bool flipped = false;
  const auto key = ordered_key(coordinates, a, b, flipped);
  const auto it = values.find(key);
  if (it == values.end()) throw std::out_of_range("bracket not in table");
  return flipped ? -it->second : it->second;
}

CoefficientPoly ClosedFormBrackets::get(const std::string& a, const std::string& b) const {
  if (a == b) return CoefficientPoly();
  bool flipped = false;
  const auto key = ordered_key(coordinates, a, b, flipped);
  const auto it = values.find(key);
  if (it == values.end()) return CoefficientPoly();
  return flipped ? -it->second : it->second;
}

PolySeries angular_momentum_series(const PuiseuxSolution& sol) {
  const GaussianRational factor = GaussianRational::i() * GaussianRational(sol.params.m / 2);
  const PolySeries cross = sol.x_plus * sol.x_minus.derivative() - sol.x_minus * sol.x_plus.derivative();
  return cross * CoefficientPoly(factor);
}

GaussianRational evaluate_at(const CoefficientPoly& p, const PuiseuxSolution& sol, const Assignment& sigma) {
  const auto v = slot_values(sol, sigma);
  return p.evaluate(v);
}

BracketTable solve_brackets(const PuiseuxSolution& sol, const Assignment& sigma) {
  BracketTable table;
  table.family = sol.balance.family;
  table.k = sol.balance.k;
  table.r = sol.balance.r;
  table.coordinates = coordinates_of(sol);
  table.sigma = sigma;
  const auto values = slot_values(sol, sigma);
  const auto& coords = table.coordinates;
  const PolySeries Az = angular_momentum_series(sol);

  std::vector<std::pair<std::string, std::string>> unknowns;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t j = i + 1; j < coords.size(); ++j) unknowns.emplace_back(coords[i], coords[j]);
  }
  const std::size_t nu = unknowns.size();

  std::map<std::string, GrSeries> dF;
  for (const auto& c : coords) dF[c] = at_sigma(partial(Az, sol, c), values);

  std::vector<std::vector<GaussianRational>> rows;
  const GaussianRational i_unit = GaussianRational::i();
  for (int sign : {1, -1}) {
    const PolySeries& G = sign > 0 ? sol.x_plus : sol.x_minus;
    std::map<std::string, GrSeries> dG;
    for (const auto& c : coords) dG[c] = at_sigma(partial(G, sol, c), values);
    std::vector<GrSeries> S;
    int lo = INT_MAX;
    int hi = INT_MAX;
    for (const auto& [a, b] : unknowns) {
      S.push_back(dF[a] * dG[b] - dF[b] * dG[a]);
      lo = std::min(lo, S.back().lead());
      hi = std::min(hi, S.back().order());
    }
    const GrSeries rhs = at_sigma(G, values) * GaussianRational(sign) * i_unit;
    lo = std::min(lo, rhs.lead());
    hi = std::min(hi, rhs.order());
    for (int e = lo; e < hi; ++e) {
      std::vector<GaussianRational> row;
      bool any = false;
      for (const auto& s : S) {
        row.push_back(s.at(e));
        any = any || !row.back().is_zero();
      }
      row.push_back(rhs.at(e));
      if (any || !row.back().is_zero()) rows.push_back(std::move(row));
    }
  }
  table.equations = static_cast<int>(rows.size());

  // Gauss-Jordan elimination over Q(i).
  int rank = 0;
  std::vector<int> pivot_col;
  for (std::size_t col = 0; col < nu && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const GaussianRational inv = *rows[rank][col].inverse();
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col].is_zero()) continue;
      const GaussianRational f = rows[r][col];
      for (std::size_t j = col; j <= nu; ++j) rows[r][j] -= f * rows[rank][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  table.rank = rank;
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][nu].is_zero()) {
      throw IntegrityError("bracket equations are inconsistent: residual " + rows[r][nu].str());
    }
  }
  if (rank < static_cast<int>(nu)) {
    throw IntegrityError("bracket equations fix only " + std::to_string(rank) + " of " + std::to_string(nu) +
                         " brackets; use more terms");
  }
  for (int r = 0; r < rank; ++r) table.values[unknowns[pivot_col[r]]] = rows[r][nu];
  return table;
}

std::map<std::string, GaussianRational> hamiltonian_brackets(const PuiseuxSolution& sol, const BracketTable& table) {
  const CoefficientPoly H = energy(sol);
  const auto values = slot_values(sol, table.sigma);
  std::map<std::string, GaussianRational> out;
  for (const auto& u : table.coordinates) {
    GaussianRational sum;
    for (std::size_t j = 0; j < sol.constants.size(); ++j) {
      const GaussianRational dH = H.derivative(j).evaluate(values);
      if (dH.is_zero()) continue;
      sum += dH * table.get(sol.constants[j].name, u);
    }
    out[u] = sum;
  }
  return out;
}

ClosedFormBrackets closed_form_brackets(const PuiseuxSolution& sol) {
  ClosedFormBrackets out;
  out.coordinates = coordinates_of(sol);
  const GaussianRational m(sol.params.m);
  const GaussianRational g(sol.params.g);
  const GaussianRational i = GaussianRational::i();
  auto var = [&](const char* name, int power = 1) { return CoefficientPoly::variable(slot_of(sol, name), power); };
  auto put = [&](const std::string& a, const std::string& b, const CoefficientPoly& v) {
    bool flipped = false;
    const auto key = ordered_key(out.coordinates, a, b, flipped);
    out.values[key] = flipped ? -v : v;
  };
  const auto& bal = sol.balance;
  if (bal.family == BranchFamily::kIntegrable) {
    const auto b1 = var("b1");
    const auto c1 = var("c1");
    put("t0", "d1", CoefficientPoly());
    put("t0", "b1", CoefficientPoly());
    put("t0", "c1", b1 * var("d1", -2) * (GaussianRational(1) / (GaussianRational(4) * m)));
    put("b1", "d1", b1 * var("d1", -1) * (GaussianRational(1) / (GaussianRational(2) * m)));
    put("c1", "d1",
        (CoefficientPoly(g * g) + GaussianRational(16) * b1 * c1) * var("b1", -1) * var("d1", -1) *
            (GaussianRational(1) / (GaussianRational(32) * m)));
    put("c1", "b1",
        (CoefficientPoly(g * g) + GaussianRational(32) * b1 * c1) * var("d1", -2) *
            (GaussianRational(1) / (GaussianRational(32) * m)));
  } else if (bal.k == 3 && bal.r == 4) {
    const auto c1 = var("c1");
    const GaussianRational g3 = g * g * g;
    put("t0", "c1", CoefficientPoly());
    put("t0", "d1", CoefficientPoly());
    put("t0", "c2", var("d1", -2) * GaussianRational(Rational(14, 15)));
    put("d1", "c1", var("d1", -1) * (i * GaussianRational(3) * g / (GaussianRational(20) * m)));
    put("d1", "c2", c1.pow(3) * var("d1", -1) * (i * GaussianRational(13412) / (GaussianRational(32805) * g3)));
    put("c1", "c2",
        (GaussianRational(13412) * m * c1.pow(4) - GaussianRational(19683) * g3 * g * var("c2")) * var("d1", -2) *
            (-i / (GaussianRational(65610) * g3 * m)));
  } else {
    throw std::invalid_argument("closed-form brackets are known for the integrable family and (3,4) only");
  }
  return out;
}

CoefficientPoly c1c2_energy_form(const PuiseuxSolution& sol) {
  if (!(sol.balance.family == BranchFamily::kQ2 && sol.balance.k == 3 && sol.balance.r == 4)) {
    throw std::invalid_argument("energy form of {c1, c2} applies to (3,4)");
  }
  const GaussianRational m(sol.params.m);
  const GaussianRational g(sol.params.g);
  const CoefficientPoly E = energy(sol);
  return E * CoefficientPoly::variable(slot_of(sol, "d1"), -4) *
         (-GaussianRational::i() * GaussianRational(7) * g / (GaussianRational(25) * m));
}

std::vector<CoefficientPoly> jacobi_sums(const ClosedFormBrackets& br, const PuiseuxSolution& sol) {
  const auto& coords = br.coordinates;
  // {a, {b, c}} with {b, c} a function of the constants only.
  auto outer = [&](const std::string& a, const std::string& b, const std::string& c) {
    const CoefficientPoly inner = br.get(b, c);
    CoefficientPoly sum;
    for (std::size_t j = 0; j < sol.constants.size(); ++j) {
      const CoefficientPoly d = inner.derivative(j);
      if (d.is_zero()) continue;
      sum += br.get(a, sol.constants[j].name) * d;
    }
    return sum;
  };
  std::vector<CoefficientPoly> out;
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      for (std::size_t c = b + 1; c < coords.size(); ++c) {
        out.push_back(outer(coords[a], coords[b], coords[c]) + outer(coords[b], coords[c], coords[a]) +
                      outer(coords[c], coords[a], coords[b]));
      }
    }
  }
  return out;
}

GaussianRational jacobi_check(const ClosedFormBrackets& br, const PuiseuxSolution& sol,
                              const std::vector<Assignment>& grid) {
  const auto sums = jacobi_sums(br, sol);
  GaussianRational worst;
  Rational worst_norm = 0;
  for (const auto& sigma : grid) {
    const auto v = slot_values(sol, sigma);
    for (const auto& s : sums) {
      const GaussianRational x = s.evaluate(v);
      if (x.norm() > worst_norm) {
        worst_norm = x.norm();
        worst = x;
      }
    }
  }
  return worst;
}

void write_bracket_json(std::ostream& os, const BracketTable& table) {
  nlohmann::ordered_json j;
  j["family"] = table.family == BranchFamily::kIntegrable ? "integrable" : "k_r";
  j["k"] = table.k;
  j["r"] = table.r;
  j["coordinates"] = table.coordinates;
  nlohmann::ordered_json sigma = nlohmann::ordered_json::object();
  for (const auto& [name, v] : table.sigma) sigma[name] = v.str();
  j["sigma"] = sigma;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& [key, v] : table.values) list.push_back({{"a", key.first}, {"b", key.second}, {"value", v.str()}});
  j["brackets"] = list;
  j["equations"] = table.equations;
  j["rank"] = table.rank;
  os << j.dump(2) << '\n';
}

}  // namespace atwood
