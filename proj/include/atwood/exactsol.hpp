#ifndef ATWOOD_EXACTSOL_HPP
#define ATWOOD_EXACTSOL_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "atwood/kowalevski.hpp"
#include "atwood/model.hpp"

namespace atwood {

// Trigonometric (I = 0) solution of the M/m = 3 machine, parametrized by the
// modulus K and the energy E. Positions are rational in (U, K, E, g).
struct TrigParams {
  Complex K{2.0, 0.0};
  double E = 0.5;
  double g = 1.0;
  double m = 1.0;

  double omega() const;
  double alpha() const { return 2 * g / E; }
  Complex t_infinity() const;
  void validate() const;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// P(U) = (K^2 + 1)(U^2 - 1) - 4 i K U and C = 4 K E / (g (K^2 - 1)^2); then
// x+ = -C P / ((U^2-1)^2 U), x- = C P U^3 / (U^2-1)^2, z = i C P U / (U^2-1)^2,
// lambda = -m (3 omega^2 / 64 K^2)(K^2-1)^2 (K^2+1)(U^2-1)^5 / (P U^4).
template <class T>
struct TrigPositions {
  T x_plus, x_minus, z, lambda;
};

// T is Complex or GaussianRational (exact at rational K, E, g, U).
template <class T>
TrigPositions<T> trig_positions(const T& K, const T& E, const T& g, const T& m, const T& U);

struct TrigState {
  CartesianState state;
  Complex lambda;
  Complex t;
};

// Positions, lambda and analytic velocities (via dt/dU) at U.
TrigState trig_state(const TrigParams& params, Complex U);

Complex t_of_U(const TrigParams& params, Complex U);
// Principal square root of t / (t - t_inf), times sheet (+1 or -1).
Complex U_of_t(const TrigParams& params, Complex t, int sheet = 1);
// Uniformizer on the branch used by the t = 0 series: sqrt(t) / sqrt(t - t_inf)
// with principal roots.
Complex series_uniformizer(const TrigParams& params, Complex t);
// Closed-form state at time t on the series branch.
TrigState trig_state_at(const TrigParams& params, Complex t);

struct BridgeConstants {
  Complex b1, c1, d1;
  std::map<std::string, Complex> as_map() const { return {{"b1", b1}, {"c1", c1}, {"d1", d1}}; }
};

// Kowalevski constants of the integrable series that reproduce the closed form.
BridgeConstants bridge_constants(const TrigParams& params);

// Bridged series through n_terms coefficients. The time rescaling that sets
// b1 = 1 turns the bridge constants into Gaussian rationals, so the recursion
// runs exactly and only the final rescaling is done in floating point; this
// avoids the round-off growth of the float recursion at high order. Throws
// std::domain_error when K, E, g or m do not give rational rescaled constants.
struct BridgedSeries {
  Expansion<GaussianRational> rescaled;  // constants b1 = 1, c1 b1, d1 / b1^3
  Expansion<Complex> series;             // at the bridge constants
  Complex nu;                            // b1' = nu b1
};
BridgedSeries bridged_expansion(const TrigParams& params, int n_terms);

// CSV of (U, t, x+, x-, z, lambda) on the given U values.
void write_trig_grid_csv(std::ostream& os, const TrigParams& params, const std::vector<Complex>& us);

}  // namespace atwood

#endif  // ATWOOD_EXACTSOL_HPP
