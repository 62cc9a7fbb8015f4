#include "atwood/puiseux_series.hpp"

#include <cmath>

namespace atwood {

namespace {

Complex eval_coefficients(int k, int lead, std::span<const Complex> c, Complex t, const EvalOptions& opts) {
  const Complex shifted = t + opts.t0;
  if (std::abs(shifted) > opts.radius) throw EvaluationError("|t| outside the supplied radius guard");
  if (shifted == Complex(0.0, 0.0)) {
    if (lead < 0 && !c.empty()) throw EvaluationError("series with negative leading exponent evaluated at t = 0");
    return lead == 0 && !c.empty() ? c[0] : Complex(0.0);
  }
  // Principal branch of t^(1/k).
  const Complex tau = std::pow(shifted, 1.0 / k);
  Complex sum = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) sum = sum * tau + c[j];
  return sum * std::pow(tau, double(lead));
}

}  // namespace

Complex series_eval(const FloatSeries& s, Complex t, const EvalOptions& opts) {
  return eval_coefficients(s.k(), s.lead(), s.coeffs(), t, opts);
}

Complex series_eval(const ExactSeries& s, Complex t, const EvalOptions& opts) {
  return series_eval(to_float(s), t, opts);
}

Complex series_eval(const SymbolicSeries& s, std::span<const Complex> sigma, Complex t, const EvalOptions& opts) {
  return series_eval(substitute(s, sigma), t, opts);
}

ExactSeries substitute(const SymbolicSeries& s, std::span<const GaussianRational> sigma) {
  return s.map([&](const CoefficientPoly& c) { return c.evaluate(sigma); });
}

FloatSeries substitute(const SymbolicSeries& s, std::span<const Complex> sigma) {
  return s.map([&](const CoefficientPoly& c) { return c.evaluate(sigma); });
}

FloatSeries to_float(const ExactSeries& s) {
  return s.map([](const GaussianRational& c) { return c.to_complex(); });
}

}  // namespace atwood
