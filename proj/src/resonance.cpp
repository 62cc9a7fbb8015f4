#include <algorithm>

#include "atwood/kowalevski.hpp"
#include "atwood/linear_small.hpp"

namespace atwood {

namespace {

bool vec_is_zero(const Vec4<CoefficientPoly>& v) {
  return std::all_of(v.begin(), v.end(), [](const CoefficientPoly& c) { return c.is_zero(); });
}

CoefficientPoly dot(const Vec4<CoefficientPoly>& u, const Vec4<CoefficientPoly>& v) {
  CoefficientPoly out;
  for (int j = 0; j < 4; ++j) add_product(out, u[j], v[j]);
  return out;
}

}  // namespace

ResonanceStructure resonance_structure(int k, int r, const MachineParams& base) {
  const LeadingBalance balance = LeadingBalance::q2(k, r);
  const MachineParams params = MachineParams::with_ratio(balance.mass_ratio, base.m, base.g);
  ResonanceStructure out;
  out.k = k;
  out.r = r;
  out.adjacent = (r == k + 1);
  out.kowalevski_indices = {-k, 0, r - k, r};
  const int gap = r - k;
  for (int s = gap; s <= r; s += gap) {
    if (s >= 2 * gap) out.predicted_nonzero_rhs.push_back(s);
    out.predicted_nonzero_solution.push_back(s);
  }
  out.second_index_avoided = (r % gap != 0);
  if (out.second_index_avoided) out.predicted_nonzero_solution.push_back(r);

  const auto ex = expand<CoefficientPoly>(balance, params, r + 1, ConstantPolicy::published(balance));
  for (int s = 1; s <= r; ++s) {
    if (!vec_is_zero(ex.rhs[s])) out.observed_nonzero_rhs.push_back(s);
    if (!vec_is_zero(ex.unknowns[s])) out.observed_nonzero_solution.push_back(s);
  }
  out.confirmed = out.observed_nonzero_rhs == out.predicted_nonzero_rhs &&
                  out.observed_nonzero_solution == out.predicted_nonzero_solution;
  return out;
}

Vec4<CoefficientPoly> r_k1_covector(int k, const MachineParams& params) {
  const CoefficientPoly d1 = CoefficientPoly::variable(0);
  const Rational kk(k);
  const Rational g = params.g;
  const Rational m = params.m;
  const GaussianRational i = GaussianRational::i();
  Vec4<CoefficientPoly> u;
  u[0] = CoefficientPoly(GaussianRational(2 * g * g * kk * kk * kk * kk * kk));
  u[1] = d1 * d1 * GaussianRational((kk + 1) * (3 * kk + 1) * (3 * kk + 1));
  u[2] = d1 * (i * GaussianRational(g * kk * kk * (kk - 1) * (3 * kk + 1)));
  u[3] = CoefficientPoly(i * GaussianRational(-2 * m * g * kk * (kk + 1) * (2 * kk + 1) * (3 * kk + 1)));
  return u;
}

CovectorReport covector_test(int k, const MachineParams& base, int s_max) {
  const LeadingBalance balance = LeadingBalance::q2(k, k + 1);
  const MachineParams params = MachineParams::with_ratio(balance.mass_ratio, base.m, base.g);
  CovectorReport out;
  out.k = k;
  out.covector = r_k1_covector(k, params);

  const auto K = kowalevski_matrix(balance.r, balance, params);
  out.annihilates = true;
  for (int j = 0; j < 4; ++j) {
    CoefficientPoly col;
    for (int i = 0; i < 4; ++i) add_product(col, out.covector[i], K.entries[i][j]);
    if (!col.is_zero()) out.annihilates = false;
  }

  // Steps below s_max are solved; the right-hand side at s_max only needs them.
  const auto ex = expand<CoefficientPoly>(balance, params, s_max, ConstantPolicy::published(balance));
  for (int s = 3; s <= s_max; ++s) {
    const Vec4<CoefficientPoly> rhs = s < s_max ? ex.rhs[s] : recursion_rhs(balance, params, ex.unknowns, s);
    out.w[s] = dot(out.covector, rhs);
  }
  return out;
}

CoefficientPoly w3_closed_form(int k, const MachineParams& params) {
  const Rational kk(k);
  const CoefficientPoly d1 = CoefficientPoly::variable(0);
  const CoefficientPoly c1 = CoefficientPoly::variable(1);
  const Rational t = 3 * kk + 1;
  const Rational num = -params.m * (kk - 2) * (kk + 1) * (2 * kk + 1) * t * t * t * t;
  const Rational den = 4 * params.g * params.g * kk * kk * kk * kk * kk * (kk + 2);
  return c1.pow(3) * d1 * d1 * GaussianRational(num / den);
}

Rational w4_denominator(int k, const MachineParams& params) {
  const Rational kk(k);
  Rational k8 = 1;
  for (int j = 0; j < 8; ++j) k8 *= kk;
  return 96 * params.g * params.g * params.g * (kk - 1) * (kk - 1) * k8 * (kk + 2) * (kk + 2) * (kk + 3);
}

Rational w4_polynomial_value(int k, const MachineParams& params, const CoefficientPoly& w4) {
  if (k == 3) throw std::invalid_argument("W(4) vanishes identically at k = 3");
  Exponents e{};
  e[0] = 2;
  e[1] = 4;
  if (!w4.is_monomial() || w4.terms().begin()->first != e) {
    throw std::invalid_argument("W(4) is not proportional to c1^4 d1^2");
  }
  const Rational kk(k);
  const Rational t = 3 * kk + 1;
  const Rational known = params.m * (kk - 3) * (kk + 1) * (2 * kk + 1) * t * t * t * t;
  // W(4) / (i m c1^4 d1^2 (k-3)(k+1)(2k+1)(3k+1)^4) * den, with i^-1 = -i.
  const GaussianRational scaled = w4.terms().begin()->second * GaussianRational(Rational(0), Rational(-1)) *
                                  GaussianRational(w4_denominator(k, params) / known);
  if (!scaled.is_real()) throw std::invalid_argument("W(4) does not carry the expected factor i");
  return scaled.real();
}

}  // namespace atwood
