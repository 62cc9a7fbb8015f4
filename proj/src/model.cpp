#include "atwood/model.hpp"

#include <cmath>

#include "atwood/linear_small.hpp"

namespace atwood {

namespace {

double as_double(const Rational& q) { return q.get_d(); }

Rational rpow(const Rational& base, long e) {
  Rational out = 1;
  const Rational b = e < 0 ? Rational(1 / base) : base;
  for (long j = 0; j < std::labs(e); ++j) out *= b;
  return out;
}

template <class T>
PuiseuxSeries<T> constant_series(int k, const GaussianRational& c) {
  return PuiseuxSeries<T>::constant(k, ScalarTraits<T>::from(c));
}

template <class T>
PuiseuxSeries<T> second(const PuiseuxSeries<T>& s) {
  return s.derivative().derivative();
}

template <class T>
bool negligible(const T& v, double scale) {
  if constexpr (ScalarTraits<T>::kExact) {
    return ScalarTraits<T>::is_zero(v);
  } else {
    return std::abs(v) <= 1e-9 * scale;
  }
}

}  // namespace

Complex lambda_of(const CartesianState& s, const MachineParams& params) {
  if (s.z == Complex(0.0)) throw SingularConfiguration("lambda is singular at z = 0");
  const double m = as_double(params.m);
  const double M = as_double(params.M);
  const double g = as_double(params.g);
  return (m * M / (M + m)) * (s.vz * s.vz - s.vp * s.vm + g * (s.y() - s.z)) / (s.z * s.z);
}

Complex energy(const CartesianState& s, const MachineParams& params) {
  const double m = as_double(params.m);
  const double M = as_double(params.M);
  const double g = as_double(params.g);
  return 0.5 * m * s.vp * s.vm + 0.5 * M * s.vz * s.vz + g * (m * s.y() + M * s.z);
}

Complex second_invariant_sq(const CartesianState& s, const MachineParams& params) {
  if (params.mass_ratio() != 3) throw std::invalid_argument("second invariant exists only for M/m = 3");
  const double g = as_double(params.g);
  const Complex i(0, 1);
  const Complex x = 0.5 * (s.xp + s.xm);
  const Complex y = s.y();
  const Complex vx = 0.5 * (s.vp + s.vm);
  const Complex vy = -0.5 * i * (s.vp - s.vm);
  const Complex w = x * vy - y * vx;
  const Complex q = s.z * s.z - s.z * y;
  if (q == Complex(0.0)) throw SingularConfiguration("second invariant is singular at z (z - y) = 0");
  const Complex dq = 2.0 * s.z * s.vz - s.vz * y - s.z * vy;
  return w * w * dq * dq / q + 2.0 * g * x * w * dq + g * g * x * x * q;
}

template <class T>
SeriesQuad<T> eom_residual(const SeriesQuad<T>& s, const MachineParams& params) {
  const int k = s.x_plus.k();
  const GaussianRational img(Rational(0), params.m * params.g);
  const T m = from_rational<T>(params.m);
  const T M = from_rational<T>(params.M);
  SeriesQuad<T> r;
  r.x_plus = second(s.x_plus) * m + constant_series<T>(k, img) - s.lambda * s.x_plus;
  r.x_minus = second(s.x_minus) * m - constant_series<T>(k, img) - s.lambda * s.x_minus;
  r.z = second(s.z) * M + constant_series<T>(k, GaussianRational(params.M * params.g)) + s.lambda * s.z;
  r.lambda = s.z * s.z - s.x_plus * s.x_minus;
  return r;
}

template <class T>
PuiseuxSeries<T> energy_series(const SeriesQuad<T>& s, const MachineParams& params) {
  const auto vp = s.x_plus.derivative();
  const auto vm = s.x_minus.derivative();
  const auto vz = s.z.derivative();
  const auto y = (s.x_plus - s.x_minus) * ScalarTraits<T>::from(GaussianRational(Rational(0), Rational(-1, 2)));
  return vp * vm * from_rational<T>(params.m / 2) + vz * vz * from_rational<T>(params.M / 2) +
         y * from_rational<T>(params.g * params.m) + s.z * from_rational<T>(params.g * params.M);
}

template <class T>
PuiseuxSeries<T> second_invariant_sq_series(const SeriesQuad<T>& s, const MachineParams& params) {
  if (params.mass_ratio() != 3) throw std::invalid_argument("second invariant exists only for M/m = 3");
  using Tr = ScalarTraits<T>;
  const T half = from_rational<T>(Rational(1, 2));
  const T minus_half_i = Tr::from(GaussianRational(Rational(0), Rational(-1, 2)));
  const auto x = (s.x_plus + s.x_minus) * half;
  const auto y = (s.x_plus - s.x_minus) * minus_half_i;
  const auto w = x * y.derivative() - y * x.derivative();
  const auto q = s.z * s.z - s.z * y;
  const auto dq = q.derivative();
  const T two_g = from_rational<T>(2 * params.g);
  const T g2 = from_rational<T>(params.g * params.g);
  return w * w * dq * dq * q.inverse() + x * w * dq * two_g + x * x * q * g2;
}

template <class T>
T conserved_value(const PuiseuxSeries<T>& s, const char* what) {
  double scale = 0.0;
  if constexpr (!ScalarTraits<T>::kExact) {
    for (const auto& c : s.coeffs()) scale = std::max(scale, std::abs(c));
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    const int e = s.lead() + static_cast<int>(j);
    if (e != 0 && !negligible(s.coeffs()[j], scale)) {
      throw IntegrityError(std::string(what) + " series is not constant: exponent " + std::to_string(e) + "/" +
                           std::to_string(s.k()) + " has a nonzero coefficient");
    }
  }
  if (s.order() <= 0) throw IntegrityError(std::string(what) + " series is truncated before its constant term");
  return s.at(0);
}

template <class T>
SeriesQuad<T> mirror(const SeriesQuad<T>& s) {
  return {-s.x_minus, -s.x_plus, s.z, s.lambda};
}

template <class T>
SeriesQuad<T> similarity(const SeriesQuad<T>& s, const Rational& nu) {
  if (sgn(nu) == 0) throw std::invalid_argument("similarity parameter must be nonzero");
  const int k = s.x_plus.k();
  const Rational mu = rpow(nu, k);
  auto scaled = [&](const PuiseuxSeries<T>& f, const Rational& factor) {
    std::vector<T> out;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const long e = f.lead() + static_cast<long>(j);
      out.push_back(f.coeffs()[j] * from_rational<T>(factor * rpow(nu, -e)));
    }
    return PuiseuxSeries<T>(k, f.lead(), std::move(out), f.order());
  };
  return {scaled(s.x_plus, mu * mu), scaled(s.x_minus, mu * mu), scaled(s.z, mu * mu),
          scaled(s.lambda, 1 / (mu * mu))};
}

double reduced_hamiltonian(const PhasePoint& p, const MachineParams& params) {
  if (p.z == 0.0) throw SingularConfiguration("reduced Hamiltonian is singular at z = 0");
  const double m = as_double(params.m);
  const double M = as_double(params.M);
  const double g = as_double(params.g);
  const double ax = p.z * p.py + p.y * p.pz;
  const double ay = p.z * p.px + p.x * p.pz;
  const double az = p.x * p.py - p.y * p.px;
  return (ax * ax + ay * ay + (M / m) * az * az) / (2 * (m + M) * p.z * p.z) + M * g * p.z + m * g * p.y;
}

double polar_hamiltonian(const PhasePoint& p, const MachineParams& params) {
  const double m = as_double(params.m);
  const double M = as_double(params.M);
  const double g = as_double(params.g);
  const double r = p.z;
  const double theta = std::atan2(p.x, -p.y);
  // p_r = (m + M) dr/dt and p_theta = m r^2 dtheta/dt from Hamilton's equations.
  const double ax = p.z * p.py + p.y * p.pz;
  const double ay = p.z * p.px + p.x * p.pz;
  const double p_r = (p.x * ay + p.y * ax) / (p.z * p.z);
  const double p_theta = p.x * p.py - p.y * p.px;
  return p_r * p_r / (2 * (m + M)) + p_theta * p_theta / (2 * m * r * r) + g * r * (M - m * std::cos(theta));
}

PhasePoint phase_point(double x, double y, double z, double vx, double vy, double vz, const MachineParams& params) {
  const double m = as_double(params.m);
  const double M = as_double(params.M);
  return {x, y, z, m * vx, m * vy, M * vz};
}

double angular_identity(const PhasePoint& p) {
  const double ax = p.z * p.py + p.y * p.pz;
  const double ay = p.z * p.px + p.x * p.pz;
  const double az = p.x * p.py - p.y * p.px;
  return p.y * ay - p.x * ax + p.z * az;
}

namespace phase {

CoefficientPoly coordinate(int slot) { return CoefficientPoly::variable(static_cast<std::size_t>(slot)); }

CoefficientPoly angular_x() { return coordinate(2) * coordinate(4) + coordinate(1) * coordinate(5); }
CoefficientPoly angular_y() { return coordinate(2) * coordinate(3) + coordinate(0) * coordinate(5); }
CoefficientPoly angular_z() { return coordinate(0) * coordinate(4) - coordinate(1) * coordinate(3); }

CoefficientPoly bracket(const CoefficientPoly& f, const CoefficientPoly& g) {
  CoefficientPoly out;
  for (std::size_t i = 0; i < 3; ++i) {
    out += f.derivative(i + 3) * g.derivative(i);
    out -= f.derivative(i) * g.derivative(i + 3);
  }
  return out;
}

}  // namespace phase

#define ATWOOD_INSTANTIATE(T)                                                                   \
  template SeriesQuad<T> eom_residual<T>(const SeriesQuad<T>&, const MachineParams&);           \
  template PuiseuxSeries<T> energy_series<T>(const SeriesQuad<T>&, const MachineParams&);       \
  template PuiseuxSeries<T> second_invariant_sq_series<T>(const SeriesQuad<T>&, const MachineParams&); \
  template T conserved_value<T>(const PuiseuxSeries<T>&, const char*);                          \
  template SeriesQuad<T> mirror<T>(const SeriesQuad<T>&);                                       \
  template SeriesQuad<T> similarity<T>(const SeriesQuad<T>&, const Rational&);

ATWOOD_INSTANTIATE(CoefficientPoly)
ATWOOD_INSTANTIATE(GaussianRational)
ATWOOD_INSTANTIATE(Complex)

#undef ATWOOD_INSTANTIATE

}  // namespace atwood
