#include <doctest.h>

#include <sstream>

#include "atwood/kowalevski.hpp"
#include "atwood/serialize.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace atwood;
using oracle::I;
using oracle::q;

TEST_SUITE("exactnum") {
  TEST_CASE("gaussian rational examples") {
    CHECK((GaussianRational(1) + I) * (GaussianRational(1) - I) == GaussianRational(2));
    CHECK(q(3, 4) + q(1, 4) == GaussianRational(1));
    CHECK((q(-9, 10) * I) * (q(10, 9) * I) == GaussianRational(1));
  }

  TEST_CASE("canonical form") {
    const Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    const GaussianRational z = GaussianRational(make_rational(10, 4), make_rational(-9, 3)) * q(2, 5);
    CHECK(z.real().get_num() == 1);
    CHECK(z.real().get_den() == 1);
    CHECK(z.imag().get_num() == -6);
    CHECK(z.imag().get_den() == 5);
  }

  TEST_CASE("division by zero is reported") {
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), DivisionByZero);
    CHECK_FALSE(checked_div(GaussianRational(1), GaussianRational()).has_value());
    CHECK_FALSE(GaussianRational().inverse().has_value());
    CHECK_THROWS_AS(CoefficientPoly(1) / CoefficientPoly(), DivisionByZero);
    CHECK_THROWS_AS(CoefficientPoly(1) / (CoefficientPoly::variable(0) + CoefficientPoly(1)), DivisionByZero);
  }

  TEST_CASE("field axioms on random instances") {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = support::small_gaussian(true), b = support::small_gaussian(), c = support::small_gaussian();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * *a.inverse() == GaussianRational(1));
      CHECK((b / a) * a == b);
      GaussianRational acc = c;
      acc.add_mul(a, b);
      CHECK(acc == c + a * b);
      acc.add_mul(a, b, true);
      CHECK(acc == c);
    }
  }

  TEST_CASE("ring laws on Laurent polynomials") {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = support::small_poly(), b = support::small_poly(), c = support::small_poly();
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) - b == a);
      CoefficientPoly acc = c;
      acc.add_product(a, b);
      CHECK(acc == c + a * b);
      acc.add_product(a, b, true);
      CHECK(acc == c);
    }
  }

  TEST_CASE("no zero terms are stored") {
    const auto a = support::small_poly(5);
    CHECK((a - a).is_zero());
    CHECK((a - a).size() == 0);
    CHECK((a * GaussianRational()).is_zero());
    for (const auto& [e, c] : (a * a - a).terms()) CHECK_FALSE(c.is_zero());
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = support::small_poly(), b = support::small_poly();
      const std::vector<GaussianRational> sigma{support::small_gaussian(true), support::small_gaussian(true),
                                                support::small_gaussian(true)};
      CHECK((a * b).evaluate(sigma) == a.evaluate(sigma) * b.evaluate(sigma));
      CHECK((a + b).evaluate(sigma) == a.evaluate(sigma) + b.evaluate(sigma));
    }
  }

  TEST_CASE("monomials are the units") {
    const auto m = CoefficientPoly::variable(0, 3) * CoefficientPoly::variable(2, -2) * q(-2, 7);
    REQUIRE(m.inverse().has_value());
    CHECK(m * *m.inverse() == CoefficientPoly(1));
    CHECK_FALSE((m + CoefficientPoly(1)).inverse().has_value());
  }

  TEST_CASE("derivative and substitution") {
    const auto x = CoefficientPoly::variable(0), y = CoefficientPoly::variable(1);
    const auto p = x.pow(3) * y + CoefficientPoly::variable(0, -2);
    CHECK(p.derivative(0) == q(3) * x * x * y + q(-2) * CoefficientPoly::variable(0, -3));
    CHECK(p.substitute(1, q(2)) == q(2) * x.pow(3) + CoefficientPoly::variable(0, -2));
  }

  TEST_CASE("series product examples") {
    const auto a = ExactSeries::truncated(2, -1, {GaussianRational(1)});
    const auto b = ExactSeries::truncated(2, 3, {GaussianRational(1)});
    const auto ab = ExactSeries::multiply(ExactSeries(2, -1, {1}, ExactSeries::kExactOrder),
                                          ExactSeries(2, 3, {1}, ExactSeries::kExactOrder), 4);
    CHECK(ab.lead() == 2);
    CHECK(ab.at(2) == GaussianRational(1));
    CHECK(ab.at(3) == GaussianRational());
    CHECK((a * b).lead() == 2);
    CHECK(series_mul(a, ExactSeries::zero(2), 6).is_zero());
    CHECK_THROWS_AS(a * ExactSeries::truncated(3, 0, {GaussianRational(1)}), std::invalid_argument);
  }

  TEST_CASE("truncation order is carried") {
    const auto a = ExactSeries::truncated(3, -4, {1, 2, 3, 4});
    const auto b = ExactSeries::truncated(3, 6, {5, 6, 7});
    const auto ab = a * b;
    CHECK(ab.lead() == 2);
    CHECK(ab.order() == std::min(a.order() + b.lead(), b.order() + a.lead()));
    CHECK_THROWS_AS(ab.at(ab.order()), std::out_of_range);
  }

  TEST_CASE("x+ x- equals z squared for the (3,4) solution at order 6") {
    const auto bal = LeadingBalance::q2(3, 4);
    const auto ex = expand_symbolic(bal, support::params_for(bal), 6);
    const auto prod = series_mul(ex.x_plus, ex.x_minus, 6);
    // Independent z^2 by explicit Cauchy sums.
    const auto& zc = ex.z.coeffs();
    REQUIRE(zc.size() == 6);
    for (int n = 0; n < 6; ++n) {
      CoefficientPoly sq;
      for (int i = 0; i <= n; ++i) sq += zc[i] * zc[n - i];
      CHECK(prod.at(2 * ex.z.lead() + n) == sq);
    }
  }

  TEST_CASE("series evaluation examples") {
    const auto five = FloatSeries::constant(1, Complex(5.0));
    CHECK(std::abs(series_eval(five, 17.0) - 5.0) < 1e-15);
    const auto t32 = FloatSeries::truncated(2, 3, {Complex(1.0)});
    CHECK(std::abs(series_eval(t32, 4.0) - 8.0) < 1e-14);
    // Principal branch: (-4)^(3/2) = (2i)^3.
    CHECK(std::abs(series_eval(t32, -4.0) - Complex(0, -8)) < 1e-13);
    const auto inv = FloatSeries::truncated(2, -1, {Complex(1.0)});
    CHECK_THROWS_AS(series_eval(inv, 0.0), EvaluationError);
    CHECK_THROWS_AS(series_eval(t32, 4.0, {1.0}), EvaluationError);
    EvalOptions shifted;
    shifted.t0 = 3.0;
    CHECK(std::abs(series_eval(t32, 1.0, shifted) - 8.0) < 1e-14);
  }

  TEST_CASE("evaluation commutes with substitution") {
    const auto bal = support::integrable();
    const auto params = support::params_for(bal);
    const auto sym = expand_symbolic(bal, params, 12);
    const std::map<std::string, GaussianRational> values{{"b1", q(3, 2)}, {"c1", q(-1, 3) + I}, {"d1", q(2, 5)}};
    const auto exact = expand_exact(bal, params, 12, values);
    std::vector<GaussianRational> sigma(sym.constants.size());
    std::vector<Complex> sigma_f(sym.constants.size());
    for (const auto& [name, v] : values) {
      sigma[sym.constant_slot(name)] = v;
      sigma_f[sym.constant_slot(name)] = v.to_complex();
    }
    const auto sub = substitute(sym.x_plus, std::span<const GaussianRational>(sigma));
    CHECK(sub.coeffs() == exact.x_plus.coeffs());
    CHECK(substitute(sym.lambda, std::span<const GaussianRational>(sigma)).coeffs() == exact.lambda.coeffs());
    for (Complex t : {Complex(0.05, 0.01), Complex(-0.03, 0.02)}) {
      const Complex a = series_eval(sym.x_minus, sigma_f, t);
      const Complex b = series_eval(exact.x_minus, t);
      CHECK(std::abs(a - b) <= 1e-12 * std::abs(b));
    }
  }

  TEST_CASE("json round trip of series") {
    const auto bal = LeadingBalance::q2(3, 4);
    const auto ex = expand_symbolic(bal, support::params_for(bal), 8);
    const auto back = series_from_json(to_json(ex.x_plus));
    CHECK(back.k() == ex.x_plus.k());
    CHECK(back.lead() == ex.x_plus.lead());
    CHECK(back.order() == ex.x_plus.order());
    CHECK(back.coeffs() == ex.x_plus.coeffs());
    const auto j = to_json(ex.x_plus);
    CHECK(j["k"] == 3);
    CHECK(j["leading"] == -4);
    CHECK(j["coeffs"][0][0].contains("e"));
    CHECK(j["coeffs"][0][0]["c"].size() == 4);
    Rational huge(mpz_class("123456789012345678901234567891"), mpz_class(7));
    huge.canonicalize();
    const GaussianRational big(huge);
    CHECK(gaussian_from_json(to_json(big)) == big);
  }

  TEST_CASE("gaussian parsing") {
    CHECK(parse_gaussian("1/2+3i") == q(1, 2) + q(3) * I);
    CHECK(parse_gaussian("-i") == -I);
    CHECK(parse_gaussian("2-i/5") == q(2) - I * q(1, 5));
    CHECK(parse_gaussian("3+i/2") == q(3) + I * q(1, 2));
    CHECK(parse_gaussian(" -7/3 ") == q(-7, 3));
    CHECK_THROWS(parse_gaussian(""));
  }
}
