#ifndef ATWOOD_COEFFICIENT_POLY_HPP
#define ATWOOD_COEFFICIENT_POLY_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atwood/gaussian_rational.hpp"

namespace atwood {

inline constexpr std::size_t kMaxConstants = 6;

// Exponent vector over the constant slots. Slot meaning (which named constant
// lives in slot j) is owned by whoever builds the polynomials, e.g. the
// constants registry of an expansion.
using Exponents = std::array<std::int16_t, kMaxConstants>;

class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Sparse Laurent polynomial in the free constants with Gaussian-rational
// coefficients. Zero coefficients are never stored.
class CoefficientPoly {
 public:
  using Terms = std::map<Exponents, GaussianRational>;

  CoefficientPoly() = default;
  CoefficientPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
  CoefficientPoly(long c) : CoefficientPoly(GaussianRational(c)) {}  // NOLINT

  static CoefficientPoly variable(std::size_t slot, int power = 1);
  static CoefficientPoly monomial(const Exponents& e, GaussianRational c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  // Coefficient of the exponent-free term.
  GaussianRational constant_term() const;

  // Only monomials are units of the Laurent ring.
  std::optional<CoefficientPoly> inverse() const;

  CoefficientPoly& operator+=(const CoefficientPoly& o);
  CoefficientPoly& operator-=(const CoefficientPoly& o);
  CoefficientPoly& operator*=(const CoefficientPoly& o);
  CoefficientPoly& operator*=(const GaussianRational& c);

  friend CoefficientPoly operator+(CoefficientPoly a, const CoefficientPoly& b) { return a += b; }
  friend CoefficientPoly operator-(CoefficientPoly a, const CoefficientPoly& b) { return a -= b; }
  friend CoefficientPoly operator*(const CoefficientPoly& a, const CoefficientPoly& b);
  friend CoefficientPoly operator*(CoefficientPoly a, const GaussianRational& c) { return a *= c; }
  friend CoefficientPoly operator*(const GaussianRational& c, CoefficientPoly a) { return a *= c; }
  // Division by a unit (monomial); throws DivisionByZero otherwise.
  friend CoefficientPoly operator/(const CoefficientPoly& a, const CoefficientPoly& b);
  CoefficientPoly operator-() const;
  // *this += x * y (or -= when negate), accumulating in place.
  void add_product(const CoefficientPoly& x, const CoefficientPoly& y, bool negate = false);

  friend bool operator==(const CoefficientPoly& a, const CoefficientPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const CoefficientPoly& a, const CoefficientPoly& b) { return !(a == b); }

  CoefficientPoly pow(int n) const;
  CoefficientPoly derivative(std::size_t slot) const;

  // Substitutes every slot by the given value; negative powers need nonzero values.
  GaussianRational evaluate(std::span<const GaussianRational> values) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> values) const;

  // Replaces selected slots by exact values, leaving the rest symbolic.
  CoefficientPoly substitute(std::size_t slot, const GaussianRational& value) const;

  int max_abs_exponent() const;
  std::string str(std::span<const std::string> names) const;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);
  Terms terms_;
};

Exponents add_exponents(const Exponents& a, const Exponents& b);

}  // namespace atwood

#endif  // ATWOOD_COEFFICIENT_POLY_HPP
