#ifndef ATWOOD_DIAGNOSTICS_HPP
#define ATWOOD_DIAGNOSTICS_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "atwood/puiseux_series.hpp"

namespace atwood {

struct DalembertOptions {
  // Compare a_n with a_{n+stride}; use 2 when one parity class of the
  // coefficients terminates.
  int stride = 1;
  // |a_n| below this fraction of its neighbours' magnitude counts as zero.
  double zero_threshold = 1e-9;
  double tail_fraction = 0.1;
};

struct RatioSequence {
  std::vector<int> n;                 // index of the lower coefficient
  std::vector<double> ratio;          // |a_m / a_n|^(1 / (m - n))
  std::vector<Complex> complex_ratio;  // (a_m / a_n) for m - n = stride, else the principal root
  std::vector<int> skipped;           // indices treated as zero
  double limit = 0.0;
  double uncertainty = 0.0;  // half-spread over the tail window
  // Intercept of ratio = L + B / n fitted over the tail window; removes the
  // leading 1/n approach of the ratios to their limit.
  double extrapolated = 0.0;
};

// 2 when one parity class of the upper half of the coefficients vanishes
// while the other does not, else 1.
int parity_stride(std::span<const Complex> coeffs, double zero_threshold = 1e-9);

RatioSequence dalembert(std::span<const Complex> coeffs, const DalembertOptions& opts = {});

struct ExponentOptions {
  int stride = 1;
  double zero_threshold = 1e-9;
  double tail_fraction = 0.1;
};

struct ExponentSequence {
  int residue_class = 0;
  std::vector<int> n;
  std::vector<double> minus_alpha;  // j^2 [b_{j-2} b_j / b_{j-1}^2 - 1]
  double alpha = 0.0;               // from the tail fit -alpha + c / j
  double exponent = 0.0;            // -1 - alpha
  double uncertainty = 0.0;
};

// Uses the residue class (mod stride) that does not terminate.
ExponentSequence exponent_estimate(std::span<const Complex> coeffs, const ExponentOptions& opts = {});

// Taylor coefficients of A'(tau) / A(tau) where the series is tau^lead A(tau).
// The result is known through tau^(size - 2).
template <class T>
std::vector<T> log_derivative(const PuiseuxSeries<T>& s);
std::vector<Complex> to_complex(std::span<const GaussianRational> v);

// Multiprecision complex value used by the Pade solve.
struct MpComplex {
  mpf_class re, im;
};

struct PadeApproximant {
  int requested_m = 0;
  int m = 0;  // numerator degree; the denominator has degree m + 1
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;  // denominator[0] = 1
  double condition = 0.0;            // estimate for the Toeplitz solve
  double scale = 1.0;                // variable rescaling used internally
  int precision_bits = 0;
  // Working-precision coefficients in w = z / scale.
  std::vector<MpComplex> scaled_numerator, scaled_denominator;
  std::vector<std::string> notes;

  Complex operator()(Complex z) const;
  // Taylor coefficients of the approximant through z^(count - 1).
  std::vector<Complex> taylor(int count) const;
};

// [m, m+1] approximant from coefficients c_0 .. c_{2m+1}. The Toeplitz system
// is solved with partial pivoting in precision_bits of mantissa; singular
// systems lower m until the solve is well posed.
PadeApproximant pade(std::span<const Complex> coeffs, int m, int precision_bits = 256);
PadeApproximant pade(std::span<const GaussianRational> coeffs, int m, int precision_bits = 256);

enum class PoleClass { kTrueBranchPoint, kFroissartArtifact, kUnclassified };
const char* pole_class_name(PoleClass c);

struct PoleEntry {
  Complex pole;
  Complex residue;
  PoleClass cls = PoleClass::kUnclassified;
  double paired_zero_distance = 0.0;
  double nearest_exponent = 0.0;  // closest of the expected exponents (true poles)
  double deviation = 0.0;
};

struct SingularityReport {
  std::vector<PoleEntry> entries;  // sorted by distance from the origin
  std::vector<Complex> zeros;

  std::vector<PoleEntry> true_poles() const;
};

struct ResidueOptions {
  double true_threshold = 0.5;
  double froissart_distance = 1e-4;
  std::vector<double> expected_exponents;
};

SingularityReport pole_residues(const PadeApproximant& p, const ResidueOptions& opts = {});

// Roots of sum_j c_j z^j by companion-matrix eigenvalues, refined by Newton
// steps.
std::vector<Complex> polynomial_roots(std::span<const Complex> c);

void write_ratio_csv(std::ostream& os, const std::vector<std::string>& names, const std::vector<RatioSequence>& seqs);
void write_exponent_csv(std::ostream& os, const std::vector<std::string>& names,
                        const std::vector<ExponentSequence>& seqs);
void write_singularity_csv(std::ostream& os, const SingularityReport& report);

}  // namespace atwood

#endif  // ATWOOD_DIAGNOSTICS_HPP
