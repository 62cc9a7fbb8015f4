#include "atwood/coefficient_poly.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

namespace atwood {

namespace {

constexpr int kExponentLimit = std::numeric_limits<std::int16_t>::max();

bool is_zero_exponents(const Exponents& e) {
  for (auto v : e) {
    if (v != 0) return false;
  }
  return true;
}

// Monomial multiplication shifts every key by the same vector, which keeps
// lexicographic order, so the result can be appended in order.
CoefficientPoly::Terms shift_terms(const CoefficientPoly::Terms& terms, const Exponents& shift,
                                   const GaussianRational& factor) {
  CoefficientPoly::Terms out;
  for (const auto& [e, c] : terms) out.emplace_hint(out.end(), add_exponents(e, shift), c * factor);
  return out;
}

}  // namespace

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t j = 0; j < kMaxConstants; ++j) {
    const int v = int(a[j]) + int(b[j]);
    if (std::abs(v) > kExponentLimit) throw ExponentOverflow("constant exponent out of range");
    out[j] = static_cast<std::int16_t>(v);
  }
  return out;
}

CoefficientPoly::CoefficientPoly(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

CoefficientPoly CoefficientPoly::variable(std::size_t slot, int power) {
  if (slot >= kMaxConstants) throw std::out_of_range("constant slot out of range");
  Exponents e{};
  e[slot] = static_cast<std::int16_t>(power);
  return monomial(e, GaussianRational(1));
}

CoefficientPoly CoefficientPoly::monomial(const Exponents& e, GaussianRational c) {
  CoefficientPoly p;
  if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
  return p;
}

bool CoefficientPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && is_zero_exponents(terms_.begin()->first));
}

GaussianRational CoefficientPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::optional<CoefficientPoly> CoefficientPoly::inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  Exponents neg{};
  for (std::size_t j = 0; j < kMaxConstants; ++j) neg[j] = static_cast<std::int16_t>(-e[j]);
  return monomial(neg, *c.inverse());
}

void CoefficientPoly::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CoefficientPoly& CoefficientPoly::operator+=(const CoefficientPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CoefficientPoly& CoefficientPoly::operator-=(const CoefficientPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CoefficientPoly& CoefficientPoly::operator*=(const CoefficientPoly& o) {
  *this = *this * o;
  return *this;
}

CoefficientPoly& CoefficientPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CoefficientPoly operator*(const CoefficientPoly& a, const CoefficientPoly& b) {
  CoefficientPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (b.is_monomial()) {
    out.terms_ = shift_terms(a.terms_, b.terms_.begin()->first, b.terms_.begin()->second);
    return out;
  }
  if (a.is_monomial()) {
    out.terms_ = shift_terms(b.terms_, a.terms_.begin()->first, a.terms_.begin()->second);
    return out;
  }
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

void CoefficientPoly::add_product(const CoefficientPoly& x, const CoefficientPoly& y, bool negate) {
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      auto [it, inserted] = terms_.try_emplace(add_exponents(ex, ey));
      it->second.add_mul(cx, cy, negate);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

CoefficientPoly operator/(const CoefficientPoly& a, const CoefficientPoly& b) {
  auto inv = b.inverse();
  if (!inv) throw DivisionByZero();
  return a * *inv;
}

CoefficientPoly CoefficientPoly::operator-() const {
  CoefficientPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

CoefficientPoly CoefficientPoly::pow(int n) const {
  if (n < 0) {
    auto inv = inverse();
    if (!inv) throw DivisionByZero();
    return inv->pow(-n);
  }
  CoefficientPoly result(1);
  CoefficientPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

CoefficientPoly CoefficientPoly::derivative(std::size_t slot) const {
  CoefficientPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[slot] == 0) continue;
    Exponents d = e;
    d[slot] = static_cast<std::int16_t>(d[slot] - 1);
    out.add_term(d, c * GaussianRational(long(e[slot])));
  }
  return out;
}

GaussianRational CoefficientPoly::evaluate(std::span<const GaussianRational> values) const {
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t j = 0; j < kMaxConstants; ++j) {
      if (e[j] == 0) continue;
      if (j >= values.size()) throw std::out_of_range("no value for constant slot");
      term *= values[j].pow(e[j]);
    }
    sum += term;
  }
  return sum;
}

std::complex<double> CoefficientPoly::evaluate(std::span<const std::complex<double>> values) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t j = 0; j < kMaxConstants; ++j) {
      if (e[j] == 0) continue;
      if (j >= values.size()) throw std::out_of_range("no value for constant slot");
      term *= std::pow(values[j], double(e[j]));
    }
    sum += term;
  }
  return sum;
}

CoefficientPoly CoefficientPoly::substitute(std::size_t slot, const GaussianRational& value) const {
  CoefficientPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    rest[slot] = 0;
    out.add_term(rest, c * value.pow(e[slot]));
  }
  return out;
}

int CoefficientPoly::max_abs_exponent() const {
  int m = 0;
  for (const auto& [e, c] : terms_) {
    for (auto v : e) m = std::max(m, std::abs(int(v)));
  }
  return m;
}

std::string CoefficientPoly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (std::size_t j = 0; j < kMaxConstants; ++j) {
      if (e[j] == 0) continue;
      const std::string name = j < names.size() ? names[j] : "k" + std::to_string(j);
      os << "*" << name;
      if (e[j] != 1) os << "^" << e[j];
    }
  }
  return os.str();
}

}  // namespace atwood
