#ifndef ATWOOD_GAUSSIAN_RATIONAL_HPP
#define ATWOOD_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace atwood {

using Rational = mpq_class;

// Builds num/den in canonical form (coprime, positive denominator).
Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Exact complex number re + i*im with rational parts. mpq_class keeps both
// parts canonical after every arithmetic operation.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  // Empty for zero.
  std::optional<GaussianRational> inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  GaussianRational pow(int n) const;
  // this += x * y (or -= when negate), without temporaries.
  void add_mul(const GaussianRational& x, const GaussianRational& y, bool negate = false);

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

// Division that reports a zero divisor instead of throwing.
std::optional<GaussianRational> checked_div(const GaussianRational& a, const GaussianRational& b);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace atwood

#endif  // ATWOOD_GAUSSIAN_RATIONAL_HPP
