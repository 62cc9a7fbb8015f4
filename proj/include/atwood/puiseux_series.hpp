#ifndef ATWOOD_PUISEUX_SERIES_HPP
#define ATWOOD_PUISEUX_SERIES_HPP

#include <algorithm>
#include <climits>
#include <span>
#include <stdexcept>
#include <vector>

#include "atwood/scalar_traits.hpp"

namespace atwood {

// Truncated series sum_j c_j * t^((lead + j) / k) held in the branch variable
// tau = t^(1/k). Exponents are tracked as integer numerators over k.
//
// order() is the exclusive exponent bound up to which the series is known:
// every exponent in [lead, order) not covered by coeffs() is zero, nothing
// is known at or above order(). Exact (untruncated) series carry
// kExactOrder. The first stored coefficient is always nonzero.
template <class T>
class PuiseuxSeries {
 public:
  static constexpr int kExactOrder = INT_MAX / 4;
  using Traits = ScalarTraits<T>;

  PuiseuxSeries() = default;
  PuiseuxSeries(int k, int lead, std::vector<T> coeffs, int order)
      : k_(k), lead_(lead), coeffs_(std::move(coeffs)), order_(clamp(order)) {
    if (k_ <= 0) throw std::invalid_argument("branch denominator must be positive");
    normalize();
  }
  // Known through `count` terms starting at `lead`.
  static PuiseuxSeries truncated(int k, int lead, std::vector<T> coeffs) {
    const int n = static_cast<int>(coeffs.size());
    return PuiseuxSeries(k, lead, std::move(coeffs), lead + n);
  }
  static PuiseuxSeries constant(int k, const T& c) { return PuiseuxSeries(k, 0, {c}, kExactOrder); }
  static PuiseuxSeries zero(int k, int order = kExactOrder) { return PuiseuxSeries(k, order, {}, order); }

  int k() const { return k_; }
  int lead() const { return lead_; }
  int order() const { return order_; }
  bool exact() const { return order_ >= kExactOrder; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  // All known coefficients vanish.
  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!Traits::is_zero(c)) return false;
    }
    return true;
  }

  // Coefficient of t^(e/k); throws above the truncation order.
  T at(int e) const {
    if (e >= order_) throw std::out_of_range("exponent beyond truncation order");
    if (e < lead_ || e >= lead_ + static_cast<int>(coeffs_.size())) return Traits::from(GaussianRational());
    return coeffs_[e - lead_];
  }

  PuiseuxSeries truncate(int order) const {
    return PuiseuxSeries(k_, lead_, coeffs_, std::min(order, order_));
  }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(coeffs_.front()))>;
    std::vector<U> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return PuiseuxSeries<U>(k_, lead_, std::move(out), order_);
  }

  PuiseuxSeries operator-() const {
    return map([](const T& c) { return T(-c); });
  }

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) { return combine(a, b, false); }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return combine(a, b, true); }

  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const T& c) {
    return a.map([&](const T& v) { return T(v * c); });
  }
  friend PuiseuxSeries operator*(const T& c, const PuiseuxSeries& a) { return a * c; }

  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) { return multiply(a, b, -1); }

  // Cauchy product keeping at most `max_terms` terms (negative: all known).
  static PuiseuxSeries multiply(const PuiseuxSeries& a, const PuiseuxSeries& b, int max_terms) {
    check_same_k(a, b);
    // Zero series carry lead == order, which makes the generic bound right.
    const int lead = a.lead_ + b.lead_;
    int order = clamp(std::min(long(a.order_) + b.lead_, long(b.order_) + a.lead_));
    if (a.coeffs_.empty() || b.coeffs_.empty()) return zero(a.k_, max_terms >= 0 ? std::min(order, lead + max_terms) : order);
    const int full = static_cast<int>(a.coeffs_.size() + b.coeffs_.size()) - 1;
    int count = std::min(full, order - lead);
    if (max_terms >= 0) {
      count = std::min(count, max_terms);
      order = std::min(order, lead + max_terms);
    }
    std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)), Traits::from(GaussianRational()));
    const int na = static_cast<int>(a.coeffs_.size());
    const int nb = static_cast<int>(b.coeffs_.size());
    for (int n = 0; n < count; ++n) {
      T sum = Traits::from(GaussianRational());
      for (int i = std::max(0, n - nb + 1); i <= std::min(n, na - 1); ++i) {
        const T& x = a.coeffs_[i];
        const T& y = b.coeffs_[n - i];
        if (Traits::is_zero(x) || Traits::is_zero(y)) continue;
        Traits::fma(sum, x, y, false);
      }
      out[n] = std::move(sum);
    }
    return PuiseuxSeries(a.k_, lead, std::move(out), order);
  }

  // d/dt of the series: t^(e/k) -> (e/k) t^((e-k)/k).
  PuiseuxSeries derivative() const {
    std::vector<T> out;
    out.reserve(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      const long e = lead_ + static_cast<long>(j);
      out.push_back(coeffs_[j] * Traits::from(GaussianRational(make_rational(e, k_))));
    }
    return PuiseuxSeries(k_, lead_ - k_, std::move(out), exact() ? kExactOrder : order_ - k_);
  }

  // Multiplicative inverse; needs a unit leading coefficient. Exact inputs
  // must name how many terms to produce.
  PuiseuxSeries inverse(int max_terms = -1) const {
    if (coeffs_.empty()) throw DivisionByZero();
    auto inv0 = Traits::inverse(coeffs_.front());
    if (!inv0) throw DivisionByZero();
    int count = exact() ? max_terms : order_ - lead_;
    if (max_terms >= 0) count = std::min(count, max_terms);
    if (count < 0) throw std::invalid_argument("inverse of exact series needs a term count");
    std::vector<T> out;
    out.reserve(count);
    for (int n = 0; n < count; ++n) {
      if (n == 0) {
        out.push_back(*inv0);
        continue;
      }
      T sum = Traits::from(GaussianRational());
      for (int j = 1; j <= n && j < static_cast<int>(coeffs_.size()); ++j) {
        if (Traits::is_zero(coeffs_[j]) || Traits::is_zero(out[n - j])) continue;
        sum += coeffs_[j] * out[n - j];
      }
      out.push_back(T(-(sum * *inv0)));
    }
    return PuiseuxSeries(k_, -lead_, std::move(out), -lead_ + count);
  }

 private:
  static int clamp(long order) { return order >= kExactOrder ? kExactOrder : static_cast<int>(order); }

  static void check_same_k(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("series use different branch denominators");
  }

  static PuiseuxSeries combine(const PuiseuxSeries& a, const PuiseuxSeries& b, bool subtract) {
    check_same_k(a, b);
    const int order = std::min(a.order_, b.order_);
    if (a.coeffs_.empty() && b.coeffs_.empty()) return zero(a.k_, order);
    int lead = std::min(a.coeffs_.empty() ? INT_MAX : a.lead_, b.coeffs_.empty() ? INT_MAX : b.lead_);
    const long end_a = a.coeffs_.empty() ? lead : a.lead_ + long(a.coeffs_.size());
    const long end_b = b.coeffs_.empty() ? lead : b.lead_ + long(b.coeffs_.size());
    const long end = std::min<long>(std::max(end_a, end_b), order);
    if (end <= lead) return zero(a.k_, order);
    std::vector<T> out(static_cast<std::size_t>(end - lead), Traits::from(GaussianRational()));
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) {
      const long idx = a.lead_ + long(j) - lead;
      if (idx < long(out.size())) out[idx] += a.coeffs_[j];
    }
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const long idx = b.lead_ + long(j) - lead;
      if (idx >= long(out.size())) continue;
      if (subtract) {
        out[idx] -= b.coeffs_[j];
      } else {
        out[idx] += b.coeffs_[j];
      }
    }
    return PuiseuxSeries(a.k_, lead, std::move(out), order);
  }

  void normalize() {
    if (static_cast<long>(lead_) + long(coeffs_.size()) > order_) {
      coeffs_.resize(order_ > lead_ ? static_cast<std::size_t>(order_ - lead_) : 0);
    }
    std::size_t first = 0;
    while (first < coeffs_.size() && Traits::is_zero(coeffs_[first])) ++first;
    if (first == coeffs_.size()) {
      coeffs_.clear();
      lead_ = order_;
      return;
    }
    if (first > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
      lead_ += static_cast<int>(first);
    }
  }

  int k_ = 1;
  int lead_ = 0;
  std::vector<T> coeffs_;
  int order_ = kExactOrder;
};

using SymbolicSeries = PuiseuxSeries<CoefficientPoly>;
using ExactSeries = PuiseuxSeries<GaussianRational>;
using FloatSeries = PuiseuxSeries<Complex>;

// Cauchy product truncated to N terms.
template <class T>
PuiseuxSeries<T> series_mul(const PuiseuxSeries<T>& a, const PuiseuxSeries<T>& b, int n_terms) {
  return PuiseuxSeries<T>::multiply(a, b, n_terms);
}

class EvaluationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EvalOptions {
  // |t| must not exceed this; the caller supplies the convergence radius guard.
  double radius = 1e300;
  // Convention: the series variable is t + t0.
  Complex t0 = 0.0;
};

// Value at t on the principal branch tau = t^(1/k), arg tau in (-pi/k, pi/k].
Complex series_eval(const FloatSeries& s, Complex t, const EvalOptions& opts = {});
Complex series_eval(const ExactSeries& s, Complex t, const EvalOptions& opts = {});
Complex series_eval(const SymbolicSeries& s, std::span<const Complex> sigma, Complex t,
                    const EvalOptions& opts = {});

// Coefficient-field conversions between the three series flavours.
ExactSeries substitute(const SymbolicSeries& s, std::span<const GaussianRational> sigma);
FloatSeries substitute(const SymbolicSeries& s, std::span<const Complex> sigma);
FloatSeries to_float(const ExactSeries& s);

}  // namespace atwood

#endif  // ATWOOD_PUISEUX_SERIES_HPP
