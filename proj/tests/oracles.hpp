#ifndef ATWOOD_TESTS_ORACLES_HPP
#define ATWOOD_TESTS_ORACLES_HPP

// Published formulas, written out independently of the library so that the
// tests compare two separate routes.

#include <map>
#include <numeric>
#include <random>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atwood/kowalevski.hpp"
#include "atwood/poisson.hpp"

namespace oracle {

using atwood::CoefficientPoly;
using atwood::GaussianRational;
using atwood::Rational;

inline GaussianRational q(long n, long d = 1) { return GaussianRational(atwood::make_rational(n, d)); }
inline GaussianRational re(const Rational& x) { return GaussianRational(x); }
inline const GaussianRational I = GaussianRational::i();

// Named constants mapped to the slots of an expansion.
class Sym {
 public:
  explicit Sym(std::vector<std::string> names) : names_(std::move(names)) {}
  template <class E>
  static Sym of(const E& ex) {
    return Sym(ex.constant_names());
  }

  CoefficientPoly operator()(const std::string& name, int power = 1) const {
    return CoefficientPoly::variable(slot(name), power);
  }
  std::size_t slot(const std::string& name) const {
    for (std::size_t j = 0; j < names_.size(); ++j) {
      if (names_[j] == name) return j;
    }
    throw std::out_of_range("no constant " + name);
  }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
};

// Integrable family, first five coefficients of x+ (from t^-1/2) and x- (from t^3/2).
inline std::vector<CoefficientPoly> integrable_x_plus(const Sym& v, const Rational& g) {
  const auto b1 = v("b1"), c1 = v("c1"), d1 = v("d1");
  const auto G = re(g);
  return {
      d1 * d1 * v("b1", -1),
      I * G * q(1, 2) * d1 * d1 * v("b1", -2),
      q(-3) * c1 * d1 * d1 * v("b1", -2),
      (q(4) * I * c1 * d1 * d1 - q(7) * b1 * b1 * d1) * G * q(1, 5) * v("b1", -3),
      ((q(2) * c1 * d1 * d1 + I * b1 * b1 * d1) * G * G + q(12) * b1 * c1 * c1 * d1 * d1) * q(1, 8) * v("b1", -4),
  };
}

inline std::vector<CoefficientPoly> integrable_x_minus(const Sym& v, const Rational& g) {
  const auto b1 = v("b1"), c1 = v("c1"), d1 = v("d1");
  const auto G = re(g);
  return {
      b1,
      CoefficientPoly(I * G * q(1, 2)),
      c1,
      -(q(2) * I * c1 * d1 - b1 * b1) * G * q(1, 5) * v("b1", -1) * v("d1", -1),
      -((q(6) * c1 * d1 + q(3) * I * b1 * b1) * G * G - q(60) * b1 * c1 * c1 * d1) * q(1, 40) * v("b1", -2) *
          v("d1", -1),
  };
}

// (k, r) = (3, 4), coefficients of x+ from t^-4/3 and x- from t^2.
inline std::vector<CoefficientPoly> q34_x_plus(const Sym& v, const Rational& g, const Rational& m) {
  const auto c1 = v("c1"), c2 = v("c2"), d1 = v("d1");
  const auto G = re(g), M = re(m);
  const auto d2 = d1 * d1;
  const GaussianRational g3 = G * G * G, g4 = g3 * G, g5 = g4 * G;
  return {
      d2 * (q(10) * I / (q(9) * G)),
      CoefficientPoly(),
      d2 * c1 * c1 * (q(140) * I / (q(729) * g3)),
      d2 * c1.pow(3) * (q(14000) / (q(59049) * g4)),
      d2 * (q(1960) * I * M * c1.pow(4) - q(32805) * I * g4 * c2) * (GaussianRational(1) / (q(91854) * g5 * M)),
  };
}

inline std::vector<CoefficientPoly> q34_x_minus(const Sym& v, const Rational& g, const Rational& m) {
  const auto c1 = v("c1"), c2 = v("c2");
  const auto G = re(g), M = re(m);
  const GaussianRational g2 = G * G, g3 = g2 * G, g4 = g3 * G;
  return {
      CoefficientPoly(q(-9) * I * G / q(10)),
      c1,
      c1 * c1 * (q(7) * I / (q(30) * G)),
      c1.pow(3) * (q(14) / (q(243) * g2)),
      (q(96124) * I * M * c1.pow(4) - q(177147) * I * g4 * c2) * (GaussianRational(1) / (q(918540) * g3 * M)),
  };
}

inline CoefficientPoly integrable_energy(const Sym& v, const Rational& g, const Rational& m) {
  const auto b1 = v("b1"), c1 = v("c1"), d1 = v("d1");
  return -(re(m) / q(8)) * d1 * d1 * v("b1", -2) * (CoefficientPoly(re(g * g)) + q(32) * c1 * b1);
}

inline CoefficientPoly integrable_h2_sq(const Sym& v) {
  const auto b1 = v("b1"), c1 = v("c1"), d1 = v("d1");
  const auto f = b1 * b1 - q(2) * I * c1 * d1;
  return q(2) * I * d1.pow(5) * v("b1", -3) * f * f;
}

inline CoefficientPoly q34_energy(const Sym& v, const Rational& g, const Rational& m) {
  const auto c1 = v("c1"), c2 = v("c2"), d1 = v("d1");
  const GaussianRational g4 = re(g * g * g * g);
  return q(5) * d1 * d1 * (q(13412) * re(m) * c1.pow(4) - q(19683) * g4 * c2) * (GaussianRational(1) / (q(91854) * g4));
}

// det K(s) for the two families as polynomials in the leading constant d1.
inline CoefficientPoly integrable_det(int s, const CoefficientPoly& d1, const Rational& m) {
  const Rational S(s);
  return d1 * d1 * re(-m * m / 2 * (S + 2) * S * S * (S - 2));
}

inline CoefficientPoly q2_det(int s, int k, int r, const CoefficientPoly& d1, const Rational& m) {
  const Rational S(s), K(k), R(r);
  return d1 * d1 * re(-6 * m * m * (2 * K + R) / (K * K * K * K * (2 * K - R)) * S * (S + K) * (S - R) * (S + K - R));
}

// Elementary brackets as Laurent polynomials, keyed by ordered name pairs.
using BracketForms = std::map<std::pair<std::string, std::string>, CoefficientPoly>;

inline BracketForms integrable_brackets(const Sym& v, const Rational& g, const Rational& m) {
  const auto b1 = v("b1"), c1 = v("c1");
  const GaussianRational M = re(m), G2 = re(g * g);
  return {
      {{"t0", "d1"}, CoefficientPoly()},
      {{"t0", "b1"}, CoefficientPoly()},
      {{"t0", "c1"}, b1 * v("d1", -2) * (GaussianRational(1) / (q(4) * M))},
      {{"b1", "d1"}, b1 * v("d1", -1) * (GaussianRational(1) / (q(2) * M))},
      {{"c1", "d1"},
       (CoefficientPoly(G2) + q(16) * b1 * c1) * v("b1", -1) * v("d1", -1) * (GaussianRational(1) / (q(32) * M))},
      {{"c1", "b1"}, (CoefficientPoly(G2) + q(32) * b1 * c1) * v("d1", -2) * (GaussianRational(1) / (q(32) * M))},
  };
}

inline BracketForms q34_brackets(const Sym& v, const Rational& g, const Rational& m) {
  const auto c1 = v("c1"), c2 = v("c2");
  const GaussianRational M = re(m), G = re(g), g3 = G * G * G, g4 = g3 * G;
  return {
      {{"t0", "c1"}, CoefficientPoly()},
      {{"t0", "d1"}, CoefficientPoly()},
      {{"t0", "c2"}, v("d1", -2) * (q(14) / q(15))},
      {{"d1", "c1"}, v("d1", -1) * (I * q(3) * G / (q(20) * M))},
      {{"d1", "c2"}, c1.pow(3) * v("d1", -1) * (I * q(13412) / (q(32805) * g3))},
      {{"c1", "c2"},
       (q(13412) * M * c1.pow(4) - q(19683) * g4 * c2) * v("d1", -2) * (-I / (q(65610) * g3 * M))},
  };
}

// The alternative printed form of {c1, c2}: -i (7g / 25m) E / d1^4.
inline CoefficientPoly q34_c1c2_energy(const Sym& v, const Rational& g, const Rational& m) {
  return q34_energy(v, g, m) * v("d1", -4) * (-I * q(7) * re(g) / (q(25) * re(m)));
}

// Bracket of two functions of the constants (t0 never appears in them).
inline CoefficientPoly bracket(const CoefficientPoly& f, const CoefficientPoly& h, const Sym& v,
                               const BracketForms& forms) {
  CoefficientPoly out;
  for (const auto& [key, value] : forms) {
    if (key.first == "t0" || key.second == "t0" || value.is_zero()) continue;
    const std::size_t a = v.slot(key.first), b = v.slot(key.second);
    out += (f.derivative(a) * h.derivative(b) - f.derivative(b) * h.derivative(a)) * value;
  }
  return out;
}

inline CoefficientPoly lookup(const BracketForms& forms, const std::string& a, const std::string& b) {
  if (a == b) return CoefficientPoly();
  if (auto it = forms.find({a, b}); it != forms.end()) return it->second;
  if (auto it = forms.find({b, a}); it != forms.end()) return -it->second;
  throw std::out_of_range("no bracket {" + a + ", " + b + "}");
}

// {a, F} for a coordinate a and a function F of the constants.
inline CoefficientPoly bracket_with(const std::string& a, const CoefficientPoly& F, const Sym& v,
                                    const BracketForms& forms) {
  CoefficientPoly out;
  for (std::size_t j = 0; j < v.names().size(); ++j) {
    const auto dF = F.derivative(j);
    if (dF.is_zero()) continue;
    out += dF * lookup(forms, a, v.names()[j]);
  }
  return out;
}

// Cyclic Jacobi sums over all coordinate triples including t0.
inline std::vector<CoefficientPoly> jacobi_sums(const Sym& v, const BracketForms& forms) {
  std::vector<std::string> coords{"t0"};
  for (const auto& n : v.names()) coords.push_back(n);
  std::vector<CoefficientPoly> out;
  for (std::size_t a = 0; a < coords.size(); ++a) {
    for (std::size_t b = a + 1; b < coords.size(); ++b) {
      for (std::size_t c = b + 1; c < coords.size(); ++c) {
        const auto &A = coords[a], &B = coords[b], &C = coords[c];
        out.push_back(bracket_with(A, lookup(forms, B, C), v, forms) + bracket_with(B, lookup(forms, C, A), v, forms) +
                      bracket_with(C, lookup(forms, A, B), v, forms));
      }
    }
  }
  return out;
}

// W(3) for the r = k + 1 family with slots d1 = 0, c1 = 1.
inline CoefficientPoly w3(int k, const Rational& g, const Rational& m) {
  const Rational K(k), t = 3 * K + 1;
  const auto d1 = CoefficientPoly::variable(0), c1 = CoefficientPoly::variable(1);
  return c1.pow(3) * d1 * d1 *
         re(-m * (K - 2) * (K + 1) * (2 * K + 1) * t * t * t * t / (4 * g * g * K * K * K * K * K * (K + 2)));
}

// Reference covector U for K(r), r = k + 1, with d1 in slot 0.
inline std::array<CoefficientPoly, 4> covector(int k, const Rational& g, const Rational& m) {
  const Rational K(k);
  const auto d1 = CoefficientPoly::variable(0);
  return {CoefficientPoly(re(2 * g * g * K * K * K * K * K)), d1 * d1 * re((K + 1) * (3 * K + 1) * (3 * K + 1)),
          d1 * (I * re(g * K * K * (K - 1) * (3 * K + 1))),
          CoefficientPoly(I * re(-2 * m * g * K * (K + 1) * (2 * K + 1) * (3 * K + 1)))};
}

// Direct enumeration of the admissibility constraints.
inline std::vector<std::tuple<int, int, Rational>> brute_pairs(int k_max) {
  std::vector<std::tuple<int, int, Rational>> out;
  for (int k = 1; k <= k_max; ++k) {
    if (k % 2 == 0) continue;
    for (int rp = 1; rp < k; ++rp) {
      const int r = 2 * rp;
      if (2 * rp <= k || std::gcd(r, k) != 1) continue;
      out.emplace_back(k, r, atwood::make_rational(4 * (r + k), 2 * k - r));
    }
  }
  return out;
}

// Small random Gaussian rational with nonzero real part.
inline GaussianRational random_gaussian(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  long a = 0;
  while (a == 0) a = num(rng);
  return GaussianRational(atwood::make_rational(a, den(rng)), atwood::make_rational(num(rng), den(rng)));
}

inline Rational random_positive(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 5);
  return atwood::make_rational(num(rng), den(rng));
}

}  // namespace oracle

#endif  // ATWOOD_TESTS_ORACLES_HPP
