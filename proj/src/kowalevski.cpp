#include "atwood/kowalevski.hpp"

#include <cmath>
#include <type_traits>

#include "atwood/linear_small.hpp"

namespace atwood {

namespace {

template <class T>
constexpr bool kSymbolic = std::is_same_v<T, CoefficientPoly>;

GaussianRational img_of(const MachineParams& params) { return GaussianRational(Rational(0), params.m * params.g); }

template <class T>
T constant_value(std::size_t slot, const std::string& name, const std::map<std::string, T>& values) {
  if (auto it = values.find(name); it != values.end()) return it->second;
  if constexpr (kSymbolic<T>) {
    return CoefficientPoly::variable(slot);
  } else {
    throw std::invalid_argument("no value assigned to constant " + name);
  }
}

template <class T>
LeadingData<T> make_leading(const LeadingBalance& balance, const MachineParams& params,
                            const std::map<std::string, T>& values) {
  using Tr = ScalarTraits<T>;
  LeadingData<T> lead;
  lead.l1 = from_rational<T>(params.m * balance.lambda_ratio());
  if (balance.family == BranchFamily::kIntegrable) {
    lead.b1 = constant_value<T>(0, "b1", values);
    lead.d1 = constant_value<T>(1, "d1", values);
  } else {
    lead.d1 = constant_value<T>(0, "d1", values);
    // b1 = -i g / ((p - 2)(p + 1)).
    const Rational den = (balance.p - 2) * (balance.p + 1);
    lead.b1 = Tr::from(GaussianRational(Rational(0), -params.g / den));
  }
  auto inv_b1 = Tr::inverse(lead.b1);
  if (!inv_b1) throw std::invalid_argument("leading coefficient b1 must be invertible");
  lead.a1 = lead.d1 * lead.d1;
  lead.a1 = lead.a1 * *inv_b1;
  return lead;
}

template <class T>
bool numerically_zero(const T& value, double scale) {
  if constexpr (ScalarTraits<T>::kExact) {
    return ScalarTraits<T>::is_zero(value);
  } else {
    return std::abs(value) <= 1e-9 * scale + 1e-300;
  }
}

template <class T>
std::string describe(const T& value) {
  if constexpr (kSymbolic<T>) {
    return value.str({});
  } else if constexpr (std::is_same_v<T, GaussianRational>) {
    return value.str();
  } else {
    return std::to_string(value.real()) + (value.imag() < 0 ? "" : "+") + std::to_string(value.imag()) + "i";
  }
}

template <class T>
Complex approximate(const T& value) {
  if constexpr (kSymbolic<T>) {
    return value.is_constant() ? value.constant_term().to_complex() : Complex(NAN, NAN);
  } else {
    return to_complex(value);
  }
}

// Solves the 3x3 system rows x cols of K against rhs restricted to rows.
template <class T>
std::array<T, 3> solve3(const Mat4<T>& K, const Vec4<T>& rhs, const std::array<int, 3>& rows,
                        const std::array<int, 3>& cols) {
  std::array<std::array<T, 3>, 3> m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = K[rows[i]][cols[j]];
  }
  const std::array<int, 3> id{0, 1, 2};
  const T det = minor3(m, id, id);
  auto inv = ScalarTraits<T>::inverse(det);
  if (!inv) throw std::logic_error("singular 3x3 block in resonant solve");
  std::array<T, 3> out;
  for (int t = 0; t < 3; ++t) {
    auto mt = m;
    for (int i = 0; i < 3; ++i) mt[i][t] = rhs[rows[i]];
    out[t] = minor3(mt, id, id) * *inv;
  }
  return out;
}

}  // namespace

const char* component_name(Component c) {
  switch (c) {
    case Component::kA:
      return "a";
    case Component::kB:
      return "b";
    case Component::kD:
      return "d";
    case Component::kL:
      return "l";
  }
  return "?";
}

std::array<Rational, 3> kowalevski_diagonal(int s, const LeadingBalance& balance, const MachineParams& params) {
  const Rational k2(balance.k * balance.k);
  const Rational l1 = params.m * balance.lambda_ratio();
  auto quad = [&](int lead) -> Rational {
    const long e = lead + s;
    return Rational(e * (e - balance.k)) / k2;
  };
  return {params.m * quad(balance.lead_x_plus) - l1, params.m * quad(balance.lead_x_minus) - l1,
          params.M * quad(balance.lead_z) + l1};
}

Rational resonance_polynomial(int s, const LeadingBalance& balance, const MachineParams& params) {
  const auto [alpha, beta, gamma] = kowalevski_diagonal(s, balance, params);
  return alpha * gamma + beta * gamma + 2 * alpha * beta;
}

template <class T>
KowalevskiMatrix<T> kowalevski_matrix(int s, const LeadingBalance& balance, const MachineParams& params,
                                      const LeadingData<T>& lead) {
  const auto diag = kowalevski_diagonal(s, balance, params);
  const T zero = zero_of<T>();
  KowalevskiMatrix<T> K;
  K.s = s;
  K.entries = {{
      {from_rational<T>(diag[0]), zero, zero, T(-lead.a1)},
      {zero, from_rational<T>(diag[1]), zero, T(-lead.b1)},
      {zero, zero, from_rational<T>(diag[2]), lead.d1},
      {T(-lead.b1), T(-lead.a1), T(lead.d1 * from_rational<T>(Rational(2))), zero},
  }};
  return K;
}

template <class T>
T KowalevskiMatrix<T>::determinant() const {
  return determinant4(entries);
}

template <class T>
Mat4<T> KowalevskiMatrix<T>::adjugate() const {
  return adjugate4(entries);
}

KowalevskiMatrix<CoefficientPoly> kowalevski_matrix(int s, const LeadingBalance& balance,
                                                    const MachineParams& params) {
  return kowalevski_matrix(s, balance, params, make_leading<CoefficientPoly>(balance, params, {}));
}

CoefficientPoly closed_form_determinant(int s, const LeadingBalance& balance, const MachineParams& params) {
  const Rational sr(s);
  if (balance.family == BranchFamily::kIntegrable) {
    const CoefficientPoly d1 = CoefficientPoly::variable(1);
    const Rational c = -(params.m * params.m / 2) * (sr + 2) * sr * sr * (sr - 2);
    return d1 * d1 * GaussianRational(c);
  }
  const CoefficientPoly d1 = CoefficientPoly::variable(0);
  const long k = balance.k;
  const long r = balance.r;
  const Rational c = -6 * params.m * params.m * Rational(2 * k + r) / Rational(k * k * k * k * (2 * k - r)) * sr *
                     (sr + Rational(k)) * (sr - Rational(r)) * (sr + Rational(k - r));
  return d1 * d1 * GaussianRational(c);
}

ConstantPolicy ConstantPolicy::published(const LeadingBalance& balance) {
  ConstantPolicy policy;
  if (balance.family == BranchFamily::kQ2) policy.at_step[balance.r] = Component::kL;
  return policy;
}

ConstantPolicy ConstantPolicy::x_plus_at_r(const LeadingBalance& balance) {
  ConstantPolicy policy;
  if (balance.family == BranchFamily::kQ2) policy.at_step[balance.r] = Component::kA;
  return policy;
}

template <class T>
std::vector<std::string> Expansion<T>::constant_names() const {
  std::vector<std::string> out;
  for (const auto& c : constants) out.push_back(c.name);
  return out;
}

template <class T>
int Expansion<T>::constant_slot(const std::string& name) const {
  for (std::size_t j = 0; j < constants.size(); ++j) {
    if (constants[j].name == name) return static_cast<int>(j);
  }
  return -1;
}

template <class T>
Vec4<T> recursion_rhs(const LeadingBalance& balance, const MachineParams& params, const std::vector<Vec4<T>>& unknowns,
                      int s) {
  using Tr = ScalarTraits<T>;
  if (s < 1 || s > static_cast<int>(unknowns.size())) throw std::out_of_range("recursion step out of range");
  const T zero = zero_of<T>();
  Vec4<T> rhs{zero, zero, zero, zero};
  for (int i = 1; i < s; ++i) {
    const auto& u = unknowns[i];
    const auto& v = unknowns[s - i];
    add_product(rhs[0], u[0], v[3]);
    add_product(rhs[1], u[1], v[3]);
    add_product(rhs[2], u[2], v[3], true);
    add_product(rhs[3], u[2], v[2], true);
    add_product(rhs[3], u[0], v[1]);
  }
  const GaussianRational img = img_of(params);
  if (s == balance.forcing_a()) rhs[0] -= Tr::from(img);
  if (s == balance.forcing_b()) rhs[1] += Tr::from(img);
  if (s == balance.forcing_d()) rhs[2] -= Tr::from(GaussianRational(params.M * params.g));
  return rhs;
}

template <class T>
Expansion<T> expand(const LeadingBalance& balance, const MachineParams& params, int n_terms,
                    const ConstantPolicy& policy, const std::map<std::string, T>& values) {
  using Tr = ScalarTraits<T>;
  params.validate();
  if (params.mass_ratio() != balance.mass_ratio) throw std::invalid_argument("mass ratio does not match the balance");
  if (n_terms < 1) throw std::invalid_argument("need at least one term");

  Expansion<T> ex;
  ex.balance = balance;
  ex.params = params;
  ex.n_terms = n_terms;
  for (const auto& name : balance.leading_constants) ex.constants.push_back({name, 0});

  const LeadingData<T> lead = make_leading<T>(balance, params, values);
  const T zero = zero_of<T>();
  ex.rhs.assign(n_terms, Vec4<T>{zero, zero, zero, zero});
  ex.unknowns.assign(n_terms, Vec4<T>{zero, zero, zero, zero});
  ex.unknowns[0] = {lead.a1, lead.b1, lead.d1, lead.l1};

  int injected = 0;
  const int exponent_limit = 10 * n_terms + 10;

  for (int s = 1; s < n_terms; ++s) {
    const Vec4<T> rhs = recursion_rhs(balance, params, ex.unknowns, s);
    ex.rhs[s] = rhs;

    const auto K = kowalevski_matrix<T>(s, balance, params, lead);
    const auto adj = K.adjugate();
    const Rational q = resonance_polynomial(s, balance, params);
    Vec4<T> x{zero, zero, zero, zero};

    if (sgn(q) != 0) {
      T det = zero;
      for (int j = 0; j < 4; ++j) add_product(det, K.entries[0][j], adj[j][0]);
      auto inv = Tr::inverse(det);
      if (!inv) throw std::logic_error("Kowalevski determinant is not a unit");
      for (int i = 0; i < 4; ++i) {
        T acc = zero;
        for (int j = 0; j < 4; ++j) add_product(acc, adj[i][j], rhs[j]);
        x[i] = acc * *inv;
      }
    } else {
      ResonanceRecord<T> rec;
      rec.s = s;
      rec.det_factor = q;
      rec.rhs = rhs;

      // Right null vectors are the columns of adj(K), left null vectors its rows.
      std::vector<Component> candidates = policy.preference;
      if (auto it = policy.at_step.find(s); it != policy.at_step.end()) candidates = {it->second};
      int comp = -1;
      int column = -1;
      for (Component c : candidates) {
        const int ci = static_cast<int>(c);
        double best = 0.0;
        for (int j = 0; j < 4; ++j) {
          const double score = Tr::pivot_score(adj[ci][j]);
          if (score > best) {
            best = score;
            column = j;
          }
        }
        if (best > 0.0) {
          comp = ci;
          break;
        }
      }
      if (comp < 0) throw ObstructionError(s, "no usable null-vector normalization", Complex(NAN, NAN));
      rec.normalized = static_cast<Component>(comp);

      const T norm = *Tr::inverse(adj[comp][column]) * Tr::from(policy.scale);
      for (int i = 0; i < 4; ++i) rec.null_vector[i] = adj[i][column] * norm;

      int row = 0;
      double best_row = -1.0;
      for (int i = 0; i < 4; ++i) {
        double score = 0.0;
        for (int j = 0; j < 4; ++j) score = std::max(score, Tr::pivot_score(adj[i][j]));
        if (score > best_row) {
          best_row = score;
          row = i;
        }
      }
      T compat = zero;
      double scale = 0.0;
      for (int j = 0; j < 4; ++j) {
        add_product(compat, adj[row][j], rhs[j]);
        if constexpr (!Tr::kExact) scale += std::abs(adj[row][j]) * std::abs(rhs[j]);
      }
      rec.compatibility = compat;
      rec.solvable = numerically_zero(compat, scale);
      if (!rec.solvable) {
        ex.resonance_log.push_back(rec);
        throw ObstructionError(s, describe(compat), approximate(compat));
      }

      // Particular solution with x[comp] = 0: drop the row whose cofactor on
      // column comp is a unit and solve the remaining 3x3 block.
      int drop = -1;
      double best_drop = 0.0;
      for (int i = 0; i < 4; ++i) {
        const double score = Tr::pivot_score(adj[comp][i]);
        if (score > best_drop) {
          best_drop = score;
          drop = i;
        }
      }
      if (drop < 0) throw ObstructionError(s, "degenerate resonance", Complex(NAN, NAN));
      const auto rows = complement3(drop);
      const auto cols = complement3(comp);
      const auto part = solve3(K.entries, rhs, rows, cols);
      for (int t = 0; t < 3; ++t) x[cols[t]] = part[t];

      const std::size_t slot = ex.constants.size();
      const std::string name =
          injected < static_cast<int>(policy.names.size()) ? policy.names[injected] : "c" + std::to_string(injected + 1);
      ++injected;
      ex.constants.push_back({name, s});
      rec.constant = name;
      const T c = constant_value<T>(slot, name, values);
      for (int i = 0; i < 4; ++i) x[i] += c * rec.null_vector[i];
      ex.resonance_log.push_back(rec);
    }

    if constexpr (Tr::kExact) {
      for (int i = 0; i < 4; ++i) {
        T check = zero;
        for (int j = 0; j < 4; ++j) add_product(check, K.entries[i][j], x[j]);
        if (!Tr::is_zero(T(check - rhs[i]))) throw std::logic_error("recursion step does not satisfy K x = rhs");
      }
    }
    if constexpr (kSymbolic<T>) {
      for (const auto& v : x) {
        if (v.max_abs_exponent() > exponent_limit) {
          throw ExponentOverflow("constant exponent exceeds 10 N at s = " + std::to_string(s));
        }
      }
    }
    ex.unknowns[s] = x;
  }

  std::vector<T> a, b, d, l;
  for (const auto& u : ex.unknowns) {
    a.push_back(u[0]);
    b.push_back(u[1]);
    d.push_back(u[2]);
    l.push_back(u[3]);
  }

  const int k = balance.k;
  ex.x_plus = PuiseuxSeries<T>::truncated(k, balance.lead_x_plus, a);
  ex.x_minus = PuiseuxSeries<T>::truncated(k, balance.lead_x_minus, b);
  ex.z = PuiseuxSeries<T>::truncated(k, balance.lead_z, d);
  ex.lambda = PuiseuxSeries<T>::truncated(k, balance.lead_lambda, l);
  return ex;
}

PuiseuxSolution expand_symbolic(const LeadingBalance& balance, const MachineParams& params, int n_terms) {
  return expand<CoefficientPoly>(balance, params, n_terms, ConstantPolicy::published(balance));
}

Expansion<GaussianRational> expand_exact(const LeadingBalance& balance, const MachineParams& params, int n_terms,
                                         const std::map<std::string, GaussianRational>& values) {
  return expand<GaussianRational>(balance, params, n_terms, ConstantPolicy::published(balance), values);
}

Expansion<Complex> expand_float(const LeadingBalance& balance, const MachineParams& params, int n_terms,
                                const std::map<std::string, Complex>& values) {
  return expand<Complex>(balance, params, n_terms, ConstantPolicy::published(balance), values);
}

#define ATWOOD_INSTANTIATE(T)                                                                                    \
  template struct KowalevskiMatrix<T>;                                                                           \
  template struct Expansion<T>;                                                                                  \
  template KowalevskiMatrix<T> kowalevski_matrix<T>(int, const LeadingBalance&, const MachineParams&,          \
                                                    const LeadingData<T>&);                                      \
  template Vec4<T> recursion_rhs<T>(const LeadingBalance&, const MachineParams&, const std::vector<Vec4<T>>&, int); \
  template Expansion<T> expand<T>(const LeadingBalance&, const MachineParams&, int, const ConstantPolicy&,     \
                                  const std::map<std::string, T>&);

ATWOOD_INSTANTIATE(CoefficientPoly)
ATWOOD_INSTANTIATE(GaussianRational)
ATWOOD_INSTANTIATE(Complex)

#undef ATWOOD_INSTANTIATE

}  // namespace atwood
