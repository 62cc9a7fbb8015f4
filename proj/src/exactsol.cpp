#include "atwood/exactsol.hpp"

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>

namespace atwood {

namespace {

const Complex kI(0.0, 1.0);

template <class T>
bool vanishes(const T& v) {
  if constexpr (std::is_same_v<T, Complex>) {
    return std::abs(v) < 1e-300;
  } else {
    return ScalarTraits<T>::is_zero(v);
  }
}

template <class T>
T imag_unit() {
  if constexpr (std::is_same_v<T, Complex>) {
    return kI;
  } else {
    return GaussianRational::i();
  }
}

// Continued-fraction recognition of a double as a small rational.
std::optional<Rational> recognize(double x, long max_den = 1000000) {
  if (!std::isfinite(x)) return std::nullopt;
  if (std::abs(x) < 1e-13) return Rational(0);
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    const double a = std::floor(r);
    const mpz_class ai(a);
    const mpz_class h2 = ai * h1 + h0;
    const mpz_class k2 = ai * k1 + k0;
    if (abs(k2) > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    Rational q(h1, k1);
    q.canonicalize();
    if (std::abs(q.get_d() - x) <= 1e-12 * std::max(1.0, std::abs(x))) return q;
    const double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

GaussianRational recognize(Complex v, const char* what) {
  const auto re = recognize(v.real());
  const auto im = recognize(v.imag());
  if (!re || !im) throw std::domain_error(std::string("rescaled ") + what + " is not a recognizable Gaussian rational");
  return GaussianRational(*re, *im);
}

Rational recognize_real(double v, const char* what) {
  const auto q = recognize(v);
  if (!q) throw std::domain_error(std::string(what) + " is not a recognizable rational");
  return *q;
}

}  // namespace

double TrigParams::omega() const { return g / std::sqrt(2 * E); }

Complex TrigParams::t_infinity() const { return 4.0 * kI * K / (omega() * (K * K - 1.0)); }

void TrigParams::validate() const {
  if (!(E > 0)) throw std::invalid_argument("trigonometric solution needs E > 0");
  if (!(g > 0) || !(m > 0)) throw std::invalid_argument("g and m must be positive");
  if (std::abs(K * K - 1.0) < 1e-14) throw std::invalid_argument("K^2 = 1 is degenerate");
  if (std::abs(K) < 1e-300) throw std::invalid_argument("K must be nonzero");
}

template <class T>
TrigPositions<T> trig_positions(const T& K, const T& E, const T& g, const T& m, const T& U) {
  const T i = imag_unit<T>();
  const T one(1);
  const T K2 = K * K;
  const T U2m1 = U * U - one;
  const T P = (K2 + one) * U2m1 - T(4) * i * K * U;
  if (vanishes(U2m1)) throw PoleError("positions diverge at U = +-1");
  if (vanishes(U)) throw PoleError("x+ diverges at U = 0");
  const T C = T(4) * K * E / (g * (K2 - one) * (K2 - one));
  const T den = U2m1 * U2m1;
  TrigPositions<T> out;
  out.x_plus = -(C * P / (den * U));
  out.x_minus = C * P * U * U * U / den;
  out.z = i * C * P * U / den;
  if (vanishes(P)) throw PoleError("lambda diverges where P(U) = 0");
  const T omega2 = g * g / (T(2) * E);
  const T U4 = U * U * U * U;
  const T U2m1_5 = den * den * U2m1;
  out.lambda = -(m * T(3) * omega2 / (T(64) * K2) * (K2 - one) * (K2 - one) * (K2 + one) * U2m1_5 / (P * U4));
  return out;
}

template TrigPositions<Complex> trig_positions<Complex>(const Complex&, const Complex&, const Complex&,
                                                        const Complex&, const Complex&);
template TrigPositions<GaussianRational> trig_positions<GaussianRational>(const GaussianRational&,
                                                                          const GaussianRational&,
                                                                          const GaussianRational&,
                                                                          const GaussianRational&,
                                                                          const GaussianRational&);

Complex t_of_U(const TrigParams& params, Complex U) {
  return -params.t_infinity() * U * U / (1.0 - U * U);
}

Complex U_of_t(const TrigParams& params, Complex t, int sheet) {
  const Complex tinf = params.t_infinity();
  if (t == tinf) throw PoleError("U is infinite at t = t_inf");
  return static_cast<double>(sheet >= 0 ? 1 : -1) * std::sqrt(t / (t - tinf));
}

Complex series_uniformizer(const TrigParams& params, Complex t) {
  return std::sqrt(t) / std::sqrt(t - params.t_infinity());
}

TrigState trig_state(const TrigParams& params, Complex U) {
  params.validate();
  const auto pos = trig_positions<Complex>(params.K, params.E, params.g, params.m, U);
  const Complex K = params.K;
  const Complex tinf = params.t_infinity();
  const Complex P = (K * K + 1.0) * (U * U - 1.0) - 4.0 * kI * K * U;
  const Complex dP = 2.0 * (K * K + 1.0) * U - 4.0 * kI * K;
  // dt/dU = -2 t_inf U / (1 - U^2)^2; logarithmic derivatives in U.
  const Complex dt_dU = -2.0 * tinf * U / ((1.0 - U * U) * (1.0 - U * U));
  const Complex common = dP / P - 4.0 * U / (U * U - 1.0);
  TrigState s;
  s.t = t_of_U(params, U);
  s.lambda = pos.lambda;
  s.state.xp = pos.x_plus;
  s.state.xm = pos.x_minus;
  s.state.z = pos.z;
  s.state.vp = pos.x_plus * (common - 1.0 / U) / dt_dU;
  s.state.vm = pos.x_minus * (common + 3.0 / U) / dt_dU;
  s.state.vz = pos.z * (common + 1.0 / U) / dt_dU;
  return s;
}

TrigState trig_state_at(const TrigParams& params, Complex t) { return trig_state(params, series_uniformizer(params, t)); }

BridgeConstants bridge_constants(const TrigParams& params) {
  params.validate();
  const Complex K = params.K;
  const double w = params.omega();
  const double g = params.g;
  const Complex sk = std::sqrt(K);
  const Complex sk21 = std::sqrt(K * K - 1.0);
  const double sw = std::sqrt(w);
  const Complex e1 = std::exp(Complex(0.0, -M_PI / 4));
  const Complex e3 = std::exp(Complex(0.0, -3 * M_PI / 4));
  BridgeConstants out;
  out.b1 = e1 * g * (K * K + 1.0) / (4.0 * sw * sk * sk21);
  out.c1 = e3 * g * sw * sk21 * (K * K + 1.0) / (32.0 * K * sk);
  out.d1 = e1 * g * sk * (K * K + 1.0) / (w * sw * (K * K - 1.0) * sk21);
  return out;
}

BridgedSeries bridged_expansion(const TrigParams& params, int n_terms) {
  params.validate();
  const BridgeConstants bc = bridge_constants(params);
  std::map<std::string, GaussianRational> values{
      {"b1", GaussianRational(1)},
      {"c1", recognize(bc.c1 * bc.b1, "c1 b1")},
      {"d1", recognize(bc.d1 / (bc.b1 * bc.b1 * bc.b1), "d1 / b1^3")},
  };
  const auto balance = LeadingBalance::integrable(Rational(-1, 2));
  const auto machine =
      MachineParams::with_ratio(balance.mass_ratio, recognize_real(params.m, "m"), recognize_real(params.g, "g"));
  BridgedSeries out;
  out.rescaled = expand_exact(balance, machine, n_terms, values);
  out.nu = 1.0 / bc.b1;

  // Undo t -> t / mu with mu = nu^2: positions pick up mu^-2 nu^e, lambda mu^2 nu^e.
  const Complex mu = out.nu * out.nu;
  auto unscale = [&](const PuiseuxSeries<GaussianRational>& f, Complex factor) {
    std::vector<Complex> c;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const int e = f.lead() + static_cast<int>(j);
      c.push_back(f.coeffs()[j].to_complex() * factor * std::pow(out.nu, e));
    }
    return PuiseuxSeries<Complex>(f.k(), f.lead(), std::move(c), f.order());
  };
  auto& s = out.series;
  s.balance = balance;
  s.params = machine;
  s.n_terms = n_terms;
  s.constants = out.rescaled.constants;
  s.x_plus = unscale(out.rescaled.x_plus, 1.0 / (mu * mu));
  s.x_minus = unscale(out.rescaled.x_minus, 1.0 / (mu * mu));
  s.z = unscale(out.rescaled.z, 1.0 / (mu * mu));
  s.lambda = unscale(out.rescaled.lambda, mu * mu);
  return out;
}

void write_trig_grid_csv(std::ostream& os, const TrigParams& params, const std::vector<Complex>& us) {
  os << "U_re,U_im,t_re,t_im,xp_re,xp_im,xm_re,xm_im,z_re,z_im,lambda_re,lambda_im\n";
  os << std::setprecision(17);
  for (const Complex& U : us) {
    const TrigState s = trig_state(params, U);
    const Complex cols[] = {U, s.t, s.state.xp, s.state.xm, s.state.z, s.lambda};
    for (std::size_t j = 0; j < 6; ++j) os << (j ? "," : "") << cols[j].real() << ',' << cols[j].imag();
    os << '\n';
  }
}

}  // namespace atwood
