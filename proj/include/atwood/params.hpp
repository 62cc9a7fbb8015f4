#ifndef ATWOOD_PARAMS_HPP
#define ATWOOD_PARAMS_HPP

#include <stdexcept>

#include "atwood/gaussian_rational.hpp"

namespace atwood {

// Swinging mass m, counterweight M, gravity g; all exact and positive.
struct MachineParams {
  Rational m = 1;
  Rational M = 3;
  Rational g = 1;

  static MachineParams with_ratio(const Rational& mass_ratio, const Rational& m = 1, const Rational& g = 1) {
    MachineParams p{m, mass_ratio * m, g};
    p.validate();
    return p;
  }

  Rational mass_ratio() const { return M / m; }

  void validate() const {
    if (sgn(m) <= 0 || sgn(M) <= 0 || sgn(g) <= 0) throw std::invalid_argument("masses and gravity must be positive");
  }
};

}  // namespace atwood

#endif  // ATWOOD_PARAMS_HPP
