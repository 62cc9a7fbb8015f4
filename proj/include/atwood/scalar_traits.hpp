#ifndef ATWOOD_SCALAR_TRAITS_HPP
#define ATWOOD_SCALAR_TRAITS_HPP

#include <cmath>
#include <complex>
#include <optional>

#include "atwood/coefficient_poly.hpp"
#include "atwood/gaussian_rational.hpp"

namespace atwood {

using Complex = std::complex<double>;

// Uniform access to the three coefficient fields used by the series code:
// symbolic (CoefficientPoly), exact numeric (GaussianRational) and floating
// (std::complex<double>).
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<CoefficientPoly> {
  static constexpr bool kExact = true;
  static CoefficientPoly from(const GaussianRational& c) { return CoefficientPoly(c); }
  static bool is_zero(const CoefficientPoly& v) { return v.is_zero(); }
  static std::optional<CoefficientPoly> inverse(const CoefficientPoly& v) { return v.inverse(); }
  // Pivot preference: units only.
  static double pivot_score(const CoefficientPoly& v) { return v.is_monomial() ? 1.0 : 0.0; }
  static void fma(CoefficientPoly& acc, const CoefficientPoly& x, const CoefficientPoly& y, bool negate) {
    acc.add_product(x, y, negate);
  }
};

template <>
struct ScalarTraits<GaussianRational> {
  static constexpr bool kExact = true;
  static GaussianRational from(const GaussianRational& c) { return c; }
  static bool is_zero(const GaussianRational& v) { return v.is_zero(); }
  static std::optional<GaussianRational> inverse(const GaussianRational& v) { return v.inverse(); }
  static double pivot_score(const GaussianRational& v) { return v.is_zero() ? 0.0 : 1.0; }
  static void fma(GaussianRational& acc, const GaussianRational& x, const GaussianRational& y, bool negate) {
    acc.add_mul(x, y, negate);
  }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool kExact = false;
  static Complex from(const GaussianRational& c) { return c.to_complex(); }
  static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
  static std::optional<Complex> inverse(const Complex& v) {
    if (is_zero(v)) return std::nullopt;
    return 1.0 / v;
  }
  static double pivot_score(const Complex& v) { return std::abs(v); }
  static void fma(Complex& acc, const Complex& x, const Complex& y, bool negate) {
    if (negate) {
      acc -= x * y;
    } else {
      acc += x * y;
    }
  }
};

inline Complex to_complex(const GaussianRational& v) { return v.to_complex(); }
inline Complex to_complex(const Complex& v) { return v; }

}  // namespace atwood

#endif  // ATWOOD_SCALAR_TRAITS_HPP
