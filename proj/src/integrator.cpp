#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "atwood/model.hpp"

namespace atwood {

namespace {

using State6 = std::array<Complex, 6>;

State6 pack(const CartesianState& s) { return {s.xp, s.xm, s.z, s.vp, s.vm, s.vz}; }
CartesianState unpack(const State6& y) { return {y[0], y[1], y[2], y[3], y[4], y[5]}; }

State6 axpy(const State6& y, Complex h, std::initializer_list<std::pair<double, const State6*>> terms) {
  State6 out = y;
  for (const auto& [c, k] : terms) {
    for (int i = 0; i < 6; ++i) out[i] += h * c * (*k)[i];
  }
  return out;
}

bool finite(const State6& y) {
  return std::all_of(y.begin(), y.end(), [](const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

}  // namespace

std::array<Complex, 6> equations_of_motion(const CartesianState& s, const MachineParams& params) {
  const double m = params.m.get_d();
  const double M = params.M.get_d();
  const double g = params.g.get_d();
  const Complex lam = lambda_of(s, params);
  const Complex img(0, m * g);
  return {s.vp, s.vm, s.vz, (-img + lam * s.xp) / m, (img + lam * s.xm) / m, (-M * g - lam * s.z) / M};
}

Trajectory integrate_complex(const CartesianState& initial, const MachineParams& params, Complex t0, Complex t1,
                             const IntegratorOptions& opts, const std::vector<double>& outputs) {
  if (!(opts.rel_tol > 0) || !(opts.abs_tol > 0)) throw std::invalid_argument("tolerances must be positive");
  if (initial.z == Complex(0.0)) throw SingularConfiguration("initial z must be nonzero");

  const Complex span = t1 - t0;
  const Complex e0 = energy(initial, params);
  Trajectory tr;
  auto record = [&](double u, const State6& y) {
    const CartesianState s = unpack(y);
    tr.samples.push_back({t0 + u * span, s, std::abs(s.constraint()), std::abs(energy(s, params) - e0)});
  };

  std::vector<double> stops(outputs.begin(), outputs.end());
  stops.push_back(1.0);
  std::sort(stops.begin(), stops.end());
  stops.erase(std::remove_if(stops.begin(), stops.end(), [](double u) { return u <= 0.0 || u > 1.0; }), stops.end());
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());
  std::size_t next_stop = 0;

  // Right-hand side in the path parameter u in [0, 1]: dy/du = span * f(y).
  auto f = [&](const State6& y) { return equations_of_motion(unpack(y), params); };

  State6 y = pack(initial);
  record(0.0, y);
  double u = 0.0;
  double h = 1e-3;
  while (u < 1.0) {
    if (tr.steps >= opts.max_steps) {
      tr.complete = false;
      tr.truncation_reason = "maximum step count reached";
      break;
    }
    const double target = stops[next_stop];
    bool hit = false;
    if (u + h >= target) {
      h = target - u;
      hit = true;
    }
    State6 k1, k2, k3, k4, k5, k6;
    try {
      k1 = f(y);
      k2 = f(axpy(y, h * span, {{1.0 / 4, &k1}}));
      k3 = f(axpy(y, h * span, {{3.0 / 32, &k1}, {9.0 / 32, &k2}}));
      k4 = f(axpy(y, h * span, {{1932.0 / 2197, &k1}, {-7200.0 / 2197, &k2}, {7296.0 / 2197, &k3}}));
      k5 = f(axpy(y, h * span, {{439.0 / 216, &k1}, {-8.0, &k2}, {3680.0 / 513, &k3}, {-845.0 / 4104, &k4}}));
      k6 = f(axpy(y, h * span,
                  {{-8.0 / 27, &k1}, {2.0, &k2}, {-3544.0 / 2565, &k3}, {1859.0 / 4104, &k4}, {-11.0 / 40, &k5}}));
    } catch (const SingularConfiguration&) {
      tr.complete = false;
      tr.truncation_reason = "trajectory reached z = 0";
      break;
    }
    const State6 y5 = axpy(y, h * span,
                           {{16.0 / 135, &k1}, {6656.0 / 12825, &k3}, {28561.0 / 56430, &k4}, {-9.0 / 50, &k5},
                            {2.0 / 55, &k6}});
    const State6 y4 =
        axpy(y, h * span, {{25.0 / 216, &k1}, {1408.0 / 2565, &k3}, {2197.0 / 4104, &k4}, {-1.0 / 5, &k5}});
    double err = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double sc = opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(y5[i] - y4[i]) / sc);
    }
    if (!std::isfinite(err) || !finite(y5)) err = 1e10;

    if (err <= 1.0) {
      u = hit ? target : u + h;
      y = y5;
      ++tr.steps;
      record(u, y);
      if (hit) ++next_stop;
    } else {
      ++tr.rejected;
    }
    const double factor = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < opts.min_step) {
      tr.complete = false;
      tr.truncation_reason = "step size underflow near a singularity";
      break;
    }
  }
  return tr;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t_re,t_im,xp_re,xp_im,xm_re,xm_im,z_re,z_im,constraint,energy_drift\n";
  os << std::setprecision(17);
  for (const auto& s : tr.samples) {
    os << s.t.real() << ',' << s.t.imag() << ',' << s.state.xp.real() << ',' << s.state.xp.imag() << ','
       << s.state.xm.real() << ',' << s.state.xm.imag() << ',' << s.state.z.real() << ',' << s.state.z.imag() << ','
       << s.constraint_drift << ',' << s.energy_drift << '\n';
  }
}

CartesianState series_state(const Expansion<Complex>& ex, Complex t, const EvalOptions& opts) {
  CartesianState s;
  s.xp = series_eval(ex.x_plus, t, opts);
  s.xm = series_eval(ex.x_minus, t, opts);
  s.z = series_eval(ex.z, t, opts);
  s.vp = series_eval(ex.x_plus.derivative(), t, opts);
  s.vm = series_eval(ex.x_minus.derivative(), t, opts);
  s.vz = series_eval(ex.z.derivative(), t, opts);
  return s;
}

}  // namespace atwood
