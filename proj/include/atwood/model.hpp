#ifndef ATWOOD_MODEL_HPP
#define ATWOOD_MODEL_HPP

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "atwood/kowalevski.hpp"

namespace atwood {

// Raised when a quantity that must be conserved (or an identity that must
// hold) is violated by a series.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularConfiguration : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// x+- = x +- i y; the constraint z^2 = x+ x- is reported, never enforced.
struct CartesianState {
  Complex xp, xm, z;
  Complex vp, vm, vz;

  Complex y() const { return Complex(0, -0.5) * (xp - xm); }
  Complex constraint() const { return z * z - xp * xm; }
};

// Real phase-space point with canonical momenta.
struct PhasePoint {
  double x = 0, y = 0, z = 0;
  double px = 0, py = 0, pz = 0;
};

Complex lambda_of(const CartesianState& s, const MachineParams& params);
Complex energy(const CartesianState& s, const MachineParams& params);
// Squared second invariant; defined for M/m = 3 only.
Complex second_invariant_sq(const CartesianState& s, const MachineParams& params);

// Four series in one family (x+, x-, z, lambda).
template <class T>
struct SeriesQuad {
  PuiseuxSeries<T> x_plus, x_minus, z, lambda;
};

template <class T>
SeriesQuad<T> series_of(const Expansion<T>& ex) {
  return {ex.x_plus, ex.x_minus, ex.z, ex.lambda};
}

// m x+'' + img - lambda x+, m x-'' - img - lambda x-, M z'' + Mg + lambda z,
// z^2 - x+ x-. Every known coefficient vanishes on an exact solution.
template <class T>
SeriesQuad<T> eom_residual(const SeriesQuad<T>& s, const MachineParams& params);

template <class T>
bool residual_vanishes(const SeriesQuad<T>& r) {
  return r.x_plus.is_zero() && r.x_minus.is_zero() && r.z.is_zero() && r.lambda.is_zero();
}

// Energy as a series in the branch variable.
template <class T>
PuiseuxSeries<T> energy_series(const SeriesQuad<T>& s, const MachineParams& params);
template <class T>
PuiseuxSeries<T> second_invariant_sq_series(const SeriesQuad<T>& s, const MachineParams& params);

// Constant term of a conserved series; throws IntegrityError if any other
// known coefficient is nonzero.
template <class T>
T conserved_value(const PuiseuxSeries<T>& s, const char* what);

template <class T>
T energy(const Expansion<T>& ex) {
  return conserved_value(energy_series(series_of(ex), ex.params), "energy");
}
template <class T>
T second_invariant_sq(const Expansion<T>& ex) {
  return conserved_value(second_invariant_sq_series(series_of(ex), ex.params), "second invariant");
}

// (x+, x-, z, lambda) -> (-x-, -x+, z, lambda).
template <class T>
SeriesQuad<T> mirror(const SeriesQuad<T>& s);
// t -> t / mu with mu = nu^k: x+- -> mu^2 x+-, z -> mu^2 z, lambda -> lambda / mu^2.
template <class T>
SeriesQuad<T> similarity(const SeriesQuad<T>& s, const Rational& nu);

// Reduced Hamiltonian in terms of the invariant angular functions.
double reduced_hamiltonian(const PhasePoint& p, const MachineParams& params);
// Polar Hamiltonian, with x = r sin(theta), y = -r cos(theta), r = z.
double polar_hamiltonian(const PhasePoint& p, const MachineParams& params);
// Canonical momenta from velocities (x dx + y dy = z dz assumed) in the gauge mu = 0.
PhasePoint phase_point(double x, double y, double z, double vx, double vy, double vz, const MachineParams& params);
// y A_y - x A_x + z A_z (vanishes when the constraint holds).
double angular_identity(const PhasePoint& p);

// Phase-space polynomials in slots x = 0, y = 1, z = 2, px = 3, py = 4, pz = 5.
namespace phase {
CoefficientPoly coordinate(int slot);
CoefficientPoly angular_x();
CoefficientPoly angular_y();
CoefficientPoly angular_z();
// {f, g} = sum_i df/dp_i dg/dq_i - df/dq_i dg/dp_i.
CoefficientPoly bracket(const CoefficientPoly& f, const CoefficientPoly& g);
}  // namespace phase

struct IntegratorOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  long max_steps = 1000000;
  double min_step = 1e-14;  // fraction of the path length
};

struct TrajectorySample {
  Complex t;
  CartesianState state;
  double constraint_drift;  // |z^2 - x+ x-|
  double energy_drift;      // |E - E(start)|
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool complete = true;
  std::string truncation_reason;
  long steps = 0;
  long rejected = 0;
};

// Adaptive RKF45 on the complexified system along the straight segment
// t0 -> t1 in the complex plane. Samples are recorded at accepted steps and
// at the requested output points (fractions of the segment in [0, 1]).
Trajectory integrate_complex(const CartesianState& initial, const MachineParams& params, Complex t0, Complex t1,
                             const IntegratorOptions& opts = {}, const std::vector<double>& outputs = {});

// Time derivative of the state under the equations of motion.
std::array<Complex, 6> equations_of_motion(const CartesianState& s, const MachineParams& params);

void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

// Positions and velocities of a numeric expansion at t on the principal branch.
CartesianState series_state(const Expansion<Complex>& ex, Complex t, const EvalOptions& opts = {});

}  // namespace atwood

#endif  // ATWOOD_MODEL_HPP
