#ifndef ATWOOD_SERIALIZE_HPP
#define ATWOOD_SERIALIZE_HPP

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "atwood/kowalevski.hpp"

namespace atwood {

using Json = nlohmann::ordered_json;

// ["re_num", "re_den", "im_num", "im_den"] as exact integer strings.
Json to_json(const GaussianRational& v);
GaussianRational gaussian_from_json(const Json& j);

// List of {"e": exponent vector, "c": exact coefficient} monomials.
Json to_json(const CoefficientPoly& p);
CoefficientPoly poly_from_json(const Json& j);

// {k, leading, order, coeffs}; coeffs[j] is the coefficient of t^((leading + j) / k).
Json to_json(const PuiseuxSeries<CoefficientPoly>& s);
Json to_json(const PuiseuxSeries<GaussianRational>& s);
PuiseuxSeries<CoefficientPoly> series_from_json(const Json& j);

// Balance, parameters, constants registry, the four series and the resonance log.
template <class T>
Json expansion_to_json(const Expansion<T>& ex);

// Parses "3/2", "-i", "1/2+3i", "2-i/5" style Gaussian rationals.
GaussianRational parse_gaussian(const std::string& text);

// One row per coefficient: series, j, exponent numerator e over k, re, im.
struct CoefficientRow {
  std::string series;
  int j = 0;
  int exponent = 0;
  int k = 1;
  Complex value;
};
void write_coefficient_csv(std::ostream& os, const std::vector<std::string>& names,
                           const std::vector<PuiseuxSeries<Complex>>& series);
std::vector<CoefficientRow> read_coefficient_csv(std::istream& is);
// Coefficients of one series from parsed rows, in index order.
std::vector<Complex> coefficients_of(const std::vector<CoefficientRow>& rows, const std::string& series);

// %.17g formatting used by every CSV writer.
std::string format_double(double x);

}  // namespace atwood

#endif  // ATWOOD_SERIALIZE_HPP
