#include "atwood/gaussian_rational.hpp"

#include <sstream>

namespace atwood {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (sgn(q.get_den()) == 0) throw DivisionByZero();
  q.canonicalize();
  return q;
}

std::optional<GaussianRational> GaussianRational::inverse() const {
  if (is_zero()) return std::nullopt;
  if (is_real()) return GaussianRational(Rational(1) / re_);
  const Rational n = norm();
  return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  if (sgn(o.re_) == 0 && sgn(re_) == 0) {
    re_ = -(im_ * o.im_);
    im_ = 0;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  return *this;
}

void GaussianRational::add_mul(const GaussianRational& x, const GaussianRational& y, bool negate) {
  thread_local Rational t;
  const bool xr = sgn(x.re_) != 0, xi = sgn(x.im_) != 0;
  const bool yr = sgn(y.re_) != 0, yi = sgn(y.im_) != 0;
  auto acc = [&](Rational& target, const Rational& a, const Rational& b, bool minus) {
    mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    if (minus != negate) {
      mpq_sub(target.get_mpq_t(), target.get_mpq_t(), t.get_mpq_t());
    } else {
      mpq_add(target.get_mpq_t(), target.get_mpq_t(), t.get_mpq_t());
    }
  };
  if (xr && yr) acc(re_, x.re_, y.re_, false);
  if (xi && yi) acc(re_, x.im_, y.im_, true);
  if (xr && yi) acc(im_, x.re_, y.im_, false);
  if (xi && yr) acc(im_, x.im_, y.re_, false);
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  auto inv = o.inverse();
  if (!inv) throw DivisionByZero();
  return *this *= *inv;
}

GaussianRational GaussianRational::pow(int n) const {
  if (n < 0) {
    auto inv = inverse();
    if (!inv) throw DivisionByZero();
    return inv->pow(-n);
  }
  GaussianRational result(1);
  GaussianRational base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::string GaussianRational::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::optional<GaussianRational> checked_div(const GaussianRational& a, const GaussianRational& b) {
  auto inv = b.inverse();
  if (!inv) return std::nullopt;
  return a * *inv;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  if (z.is_real()) return os << z.real().get_str();
  if (sgn(z.real()) == 0) return os << z.imag().get_str() << "*i";
  os << "(" << z.real().get_str();
  if (sgn(z.imag()) > 0) os << "+";
  return os << z.imag().get_str() << "*i)";
}

}  // namespace atwood
