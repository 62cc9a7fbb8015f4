#ifndef ATWOOD_TESTS_SUPPORT_HPP
#define ATWOOD_TESTS_SUPPORT_HPP

#include <complex>
#include <random>
#include <vector>

#include "atwood/coefficient_poly.hpp"
#include "atwood/kowalevski.hpp"

namespace support {

using atwood::CoefficientPoly;
using atwood::Complex;
using atwood::GaussianRational;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611);
  return gen;
}

inline GaussianRational small_gaussian(bool nonzero = false) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  for (;;) {
    GaussianRational v(atwood::make_rational(num(rng()), den(rng())), atwood::make_rational(num(rng()), den(rng())));
    if (!nonzero || !v.is_zero()) return v;
  }
}

// Random Laurent polynomial in three slots with exponents in [-2, 2].
inline CoefficientPoly small_poly(int terms = 4) {
  std::uniform_int_distribution<int> ex(-2, 2);
  CoefficientPoly p;
  for (int j = 0; j < terms; ++j) {
    atwood::Exponents e{};
    for (int s = 0; s < 3; ++s) e[s] = static_cast<std::int16_t>(ex(rng()));
    p += CoefficientPoly::monomial(e, small_gaussian());
  }
  return p;
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0;
  for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

inline atwood::LeadingBalance integrable() { return atwood::LeadingBalance::integrable(atwood::make_rational(-1, 2)); }

inline atwood::MachineParams params_for(const atwood::LeadingBalance& b, const atwood::Rational& m = 1,
                                        const atwood::Rational& g = 1) {
  return atwood::MachineParams::with_ratio(b.mass_ratio, m, g);
}

}  // namespace support

#endif  // ATWOOD_TESTS_SUPPORT_HPP
