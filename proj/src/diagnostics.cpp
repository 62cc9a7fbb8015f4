#include "atwood/diagnostics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

namespace atwood {

namespace {

using MatrixXc = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXc = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

// Indices whose coefficient is zero or round-off relative to its neighbours.
std::vector<bool> zero_mask(std::span<const Complex> c, double threshold) {
  const std::size_t n = c.size();
  std::vector<bool> zero(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::abs(c[j]);
    double nb = 0.0;
    if (j > 0) nb = std::max(nb, std::abs(c[j - 1]));
    if (j + 1 < n) nb = std::max(nb, std::abs(c[j + 1]));
    zero[j] = (a == 0.0) || (a < threshold * nb);
  }
  return zero;
}

std::size_t tail_start(std::size_t size, double fraction, std::size_t min_count) {
  std::size_t count = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(size)));
  count = std::clamp<std::size_t>(count, std::min(min_count, size), size);
  return size - count;
}

Complex horner(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
  return acc;
}

Complex horner_derivative(std::span<const Complex> c, Complex z) {
  Complex acc = 0.0;
  for (std::size_t j = c.size(); j-- > 1;) acc = acc * z + static_cast<double>(j) * c[j];
  return acc;
}

}  // namespace

int parity_stride(std::span<const Complex> c, double zero_threshold) {
  int zeros[2] = {0, 0};
  int total[2] = {0, 0};
  for (std::size_t n = std::max<std::size_t>(c.size() / 2, 1); n + 1 < c.size(); ++n) {
    const double scale = std::max(std::abs(c[n - 1]), std::abs(c[n + 1]));
    ++total[n % 2];
    zeros[n % 2] += std::abs(c[n]) <= zero_threshold * scale;
  }
  for (int p = 0; p < 2; ++p) {
    if (total[p] > 0 && zeros[p] == total[p] && zeros[1 - p] == 0) return 2;
  }
  return 1;
}

RatioSequence dalembert(std::span<const Complex> coeffs, const DalembertOptions& opts) {
  if (opts.stride < 1) throw std::invalid_argument("stride must be positive");
  const auto zero = zero_mask(coeffs, opts.zero_threshold);
  RatioSequence out;
  std::vector<int> nonzero;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (zero[j]) {
      out.skipped.push_back(static_cast<int>(j));
    } else {
      nonzero.push_back(static_cast<int>(j));
    }
  }
  if (nonzero.empty()) throw std::invalid_argument("all coefficients vanish");
  if (nonzero.size() < 10) throw std::invalid_argument("d'Alembert quotient needs at least 10 nonzero coefficients");

  for (std::size_t a = 0; a < nonzero.size(); ++a) {
    const int n = nonzero[a];
    for (std::size_t b = a + 1; b < nonzero.size(); ++b) {
      const int m = nonzero[b];
      if ((m - n) % opts.stride != 0) continue;
      const double gap = m - n;
      const Complex q = coeffs[m] / coeffs[n];
      out.n.push_back(n);
      out.ratio.push_back(std::pow(std::abs(q), 1.0 / gap));
      out.complex_ratio.push_back(gap == 1 ? q : std::pow(q, 1.0 / gap));
      break;
    }
  }
  if (out.ratio.empty()) throw std::invalid_argument("no coefficient pairs for the d'Alembert quotient");
  const std::size_t start = tail_start(out.ratio.size(), opts.tail_fraction, 1);
  double lo = out.ratio[start];
  double hi = lo;
  double sum = 0.0;
  for (std::size_t j = start; j < out.ratio.size(); ++j) {
    lo = std::min(lo, out.ratio[j]);
    hi = std::max(hi, out.ratio[j]);
    sum += out.ratio[j];
  }
  out.limit = sum / static_cast<double>(out.ratio.size() - start);
  out.uncertainty = 0.5 * (hi - lo);
  // Least squares fit ratio = L + B / n over the same window.
  const std::size_t fit_start = std::min(start, out.ratio.size() >= 3 ? out.ratio.size() - 3 : std::size_t{0});
  if (out.ratio.size() - fit_start >= 3) {
    Eigen::MatrixXd X(out.ratio.size() - fit_start, 2);
    Eigen::VectorXd y(out.ratio.size() - fit_start);
    for (std::size_t j = fit_start; j < out.ratio.size(); ++j) {
      X(j - fit_start, 0) = 1.0;
      X(j - fit_start, 1) = 1.0 / std::max(out.n[j], 1);
      y(j - fit_start) = out.ratio[j];
    }
    out.extrapolated = X.colPivHouseholderQr().solve(y)(0);
  } else {
    out.extrapolated = out.limit;
  }
  return out;
}

ExponentSequence exponent_estimate(std::span<const Complex> coeffs, const ExponentOptions& opts) {
  if (opts.stride < 1) throw std::invalid_argument("stride must be positive");
  const auto zero = zero_mask(coeffs, opts.zero_threshold);
  const int total = static_cast<int>(std::count(zero.begin(), zero.end(), false));
  if (total < 30) throw std::invalid_argument("exponent estimate needs at least 30 nonzero coefficients");

  // Pick the residue class that carries the asymptotics: most nonzero
  // entries, then the larger magnitude at its last entry.
  int best_class = 0;
  int best_count = -1;
  double best_mag = 0.0;
  for (int c = 0; c < opts.stride; ++c) {
    int count = 0;
    double mag = 0.0;
    for (std::size_t j = c; j < coeffs.size(); j += opts.stride) {
      if (zero[j]) continue;
      ++count;
      mag = std::abs(coeffs[j]);
    }
    if (count > best_count || (count == best_count && mag > best_mag)) {
      best_class = c;
      best_count = count;
      best_mag = mag;
    }
  }

  ExponentSequence out;
  out.residue_class = best_class;
  const int s = opts.stride;
  for (std::size_t j = best_class + 2 * s; j < coeffs.size(); j += s) {
    if (zero[j] || zero[j - s] || zero[j - 2 * s]) continue;
    const Complex r = coeffs[j - 2 * s] * coeffs[j] / (coeffs[j - s] * coeffs[j - s]);
    const double idx = static_cast<double>(j) / s;
    out.n.push_back(static_cast<int>(j));
    out.minus_alpha.push_back(idx * idx * (r.real() - 1.0));
  }
  if (out.minus_alpha.size() < 5) throw std::invalid_argument("too few consecutive nonzero coefficients");

  // Least squares fit y = A + B / j over the tail window.
  const std::size_t start = tail_start(out.minus_alpha.size(), opts.tail_fraction, 5);
  Eigen::MatrixXd X(out.minus_alpha.size() - start, 2);
  Eigen::VectorXd y(out.minus_alpha.size() - start);
  for (std::size_t j = start; j < out.minus_alpha.size(); ++j) {
    const double idx = static_cast<double>(out.n[j]) / s;
    X(j - start, 0) = 1.0;
    X(j - start, 1) = 1.0 / idx;
    y(j - start) = out.minus_alpha[j];
  }
  const Eigen::Vector2d fit = X.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd corrected = y - X.col(1) * fit(1);
  out.alpha = -fit(0);
  out.exponent = -1.0 - out.alpha;
  out.uncertainty = 0.5 * (corrected.maxCoeff() - corrected.minCoeff());
  return out;
}

template <class T>
std::vector<T> log_derivative(const PuiseuxSeries<T>& s) {
  using Tr = ScalarTraits<T>;
  const auto& a = s.coeffs();
  if (a.size() < 2) throw std::invalid_argument("log derivative needs at least two coefficients");
  auto inv0 = Tr::inverse(a.front());
  if (!inv0) throw DivisionByZero();
  const std::size_t n = a.size() - 1;
  std::vector<T> f(n, Tr::from(GaussianRational()));
  for (std::size_t j = 0; j < n; ++j) {
    T acc = a[j + 1] * Tr::from(GaussianRational(static_cast<long>(j + 1)));
    for (std::size_t i = 1; i <= j; ++i) {
      if (Tr::is_zero(a[i]) || Tr::is_zero(f[j - i])) continue;
      acc -= a[i] * f[j - i];
    }
    f[j] = acc * *inv0;
  }
  return f;
}

template std::vector<GaussianRational> log_derivative<GaussianRational>(const PuiseuxSeries<GaussianRational>&);
template std::vector<Complex> log_derivative<Complex>(const PuiseuxSeries<Complex>&);

std::vector<Complex> to_complex(std::span<const GaussianRational> v) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.to_complex());
  return out;
}

namespace {

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : old_(mpf_get_default_prec()) { mpf_set_default_prec(bits); }
  ~PrecisionScope() { mpf_set_default_prec(old_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mp_bitcnt_t old_;
};

MpComplex mp_of(Complex v) { return {mpf_class(v.real()), mpf_class(v.imag())}; }
MpComplex mp_of(const GaussianRational& v) { return {mpf_class(v.real()), mpf_class(v.imag())}; }
Complex to_double(const MpComplex& v) { return {v.re.get_d(), v.im.get_d()}; }

MpComplex operator+(const MpComplex& a, const MpComplex& b) { return {mpf_class(a.re + b.re), mpf_class(a.im + b.im)}; }
MpComplex operator-(const MpComplex& a, const MpComplex& b) { return {mpf_class(a.re - b.re), mpf_class(a.im - b.im)}; }
MpComplex operator*(const MpComplex& a, const MpComplex& b) {
  return {mpf_class(a.re * b.re - a.im * b.im), mpf_class(a.re * b.im + a.im * b.re)};
}
MpComplex scale_by(const MpComplex& a, const mpf_class& s) { return {mpf_class(a.re * s), mpf_class(a.im * s)}; }
mpf_class norm2(const MpComplex& a) { return mpf_class(a.re * a.re + a.im * a.im); }
bool is_zero(const MpComplex& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }
MpComplex inverse(const MpComplex& a) {
  const mpf_class n = norm2(a);
  return {mpf_class(a.re / n), mpf_class(-a.im / n)};
}
MpComplex operator/(const MpComplex& a, const MpComplex& b) { return a * inverse(b); }

MpComplex mp_horner(std::span<const MpComplex> c, const MpComplex& z) {
  MpComplex acc{0, 0};
  for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + c[j];
  return acc;
}

std::vector<MpComplex> mp_derivative(std::span<const MpComplex> c) {
  std::vector<MpComplex> d;
  for (std::size_t j = 1; j < c.size(); ++j) d.push_back(scale_by(c[j], mpf_class(static_cast<double>(j))));
  return d;
}

// Refines approximate roots of c simultaneously (Aberth iteration), which
// keeps the members of near-coincident pairs apart.
std::vector<MpComplex> refine_roots(std::span<const MpComplex> c, const std::vector<Complex>& guesses, int bits) {
  std::vector<MpComplex> z;
  for (const auto& g : guesses) z.push_back(mp_of(g));
  const auto dc = mp_derivative(c);
  mpf_class tol(1);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), bits * 2 / 3);
  for (int it = 0; it < 100; ++it) {
    mpf_class worst(0);
    for (std::size_t k = 0; k < z.size(); ++k) {
      const MpComplex d = mp_horner(dc, z[k]);
      if (is_zero(d)) continue;
      const MpComplex ratio = mp_horner(c, z[k]) / d;
      MpComplex sum{0, 0};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j == k) continue;
        const MpComplex diff = z[k] - z[j];
        if (!is_zero(diff)) sum = sum + inverse(diff);
      }
      const MpComplex den = MpComplex{1, 0} - ratio * sum;
      if (is_zero(den)) continue;
      const MpComplex step = ratio / den;
      z[k] = z[k] - step;
      const mpf_class size = norm2(step) / (mpf_class(1) + norm2(z[k]));
      if (size > worst) worst = size;
    }
    if (worst < tol * tol) break;
  }
  return z;
}

std::vector<Complex> to_double(const std::vector<MpComplex>& v) {
  std::vector<Complex> out;
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

PadeApproximant pade_mp(std::vector<MpComplex> c, int m, int bits) {
  PadeApproximant out;
  out.requested_m = m;
  out.precision_bits = bits;

  // Rescale z -> R w so that the coefficients are O(1); R from the ratio test.
  double R = 1.0;
  try {
    const auto ratios = dalembert(to_double(c));
    if (ratios.limit > 0 && std::isfinite(ratios.limit)) R = 1.0 / ratios.limit;
  } catch (const std::invalid_argument&) {
  }
  out.scale = R;
  {
    mpf_class rpow(1);
    const mpf_class r(R);
    for (auto& v : c) {
      v = scale_by(v, rpow);
      rpow *= r;
    }
  }
  mpf_class max_norm(0);
  for (const auto& v : c) max_norm = std::max(max_norm, norm2(v));
  // Pivots below 2^(-bits/2) of the largest coefficient count as zero.
  mpf_class pivot_floor(1);
  mpf_div_2exp(pivot_floor.get_mpf_t(), pivot_floor.get_mpf_t(), bits);
  pivot_floor *= max_norm;

  for (int mm = m; mm >= 0; --mm) {
    const int size = mm + 1;
    std::vector<std::vector<MpComplex>> A(size, std::vector<MpComplex>(size + 1, MpComplex{0, 0}));
    MatrixXc T(size, size);
    for (int i = 0; i < size; ++i) {
      const int n = mm + 1 + i;
      for (int j = 1; j <= size; ++j) {
        if (n - j >= 0) A[i][j - 1] = c[n - j];
        T(i, j - 1) = to_double(A[i][j - 1]);
      }
      A[i][size] = MpComplex{0, 0} - c[n];
    }
    bool singular = false;
    for (int col = 0; col < size && !singular; ++col) {
      int piv = col;
      for (int i = col + 1; i < size; ++i) {
        if (norm2(A[i][col]) > norm2(A[piv][col])) piv = i;
      }
      if (norm2(A[piv][col]) <= pivot_floor) {
        singular = true;
        break;
      }
      std::swap(A[piv], A[col]);
      const MpComplex inv = inverse(A[col][col]);
      for (int j = col; j <= size; ++j) A[col][j] = A[col][j] * inv;
      for (int i = col + 1; i < size; ++i) {
        if (is_zero(A[i][col])) continue;
        const MpComplex f = A[i][col];
        for (int j = col; j <= size; ++j) A[i][j] = A[i][j] - f * A[col][j];
      }
    }
    if (singular) {
      out.notes.push_back("singular Toeplitz system at M = " + std::to_string(mm) + ", reducing");
      continue;
    }
    std::vector<MpComplex> q(size + 1, MpComplex{0, 0});
    q[0] = MpComplex{1, 0};
    for (int i = size - 1; i >= 0; --i) {
      MpComplex acc = A[i][size];
      for (int j = i + 1; j < size; ++j) acc = acc - A[i][j] * q[j + 1];
      q[i + 1] = acc;
    }
    std::vector<MpComplex> p(mm + 1, MpComplex{0, 0});
    for (int n = 0; n <= mm; ++n) {
      for (int j = 0; j <= std::min(n, size); ++j) p[n] = p[n] + q[j] * c[n - j];
    }
    const Eigen::JacobiSVD<MatrixXc> svd(T);
    const auto& sv = svd.singularValues();
    out.condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
    out.m = mm;
    out.scaled_numerator = p;
    out.scaled_denominator = q;
    // Back to the original variable: coefficient n scales by R^-n.
    double inv = 1.0;
    for (int n = 0; n <= size; ++n) {
      if (n <= mm) out.numerator.push_back(to_double(p[n]) * inv);
      out.denominator.push_back(to_double(q[n]) * inv);
      inv /= R;
    }
    return out;
  }
  throw std::runtime_error("Pade approximant could not be built at any degree");
}

template <class T>
PadeApproximant pade_from(std::span<const T> coeffs, int m, int bits) {
  if (m < 0) throw std::invalid_argument("Pade degree must be nonnegative");
  if (bits < 53) throw std::invalid_argument("Pade precision must be at least 53 bits");
  if (static_cast<int>(coeffs.size()) < 2 * m + 2) {
    throw std::invalid_argument("[M, M+1] Pade approximant needs 2M + 2 coefficients");
  }
  const PrecisionScope scope(bits);
  std::vector<MpComplex> c;
  for (int n = 0; n < 2 * m + 2; ++n) c.push_back(mp_of(coeffs[n]));
  return pade_mp(std::move(c), m, bits);
}

}  // namespace

Complex PadeApproximant::operator()(Complex z) const {
  if (scaled_denominator.empty()) return horner(numerator, z) / horner(denominator, z);
  const PrecisionScope scope(precision_bits);
  const MpComplex w = mp_of(z / scale);
  return to_double(mp_horner(scaled_numerator, w) / mp_horner(scaled_denominator, w));
}

std::vector<Complex> PadeApproximant::taylor(int count) const {
  // Solve Q * f = P order by order with Q(0) = 1, in the rescaled variable
  // when the working-precision coefficients are available.
  if (scaled_denominator.empty()) {
    std::vector<Complex> f(count, 0.0);
    for (int n = 0; n < count; ++n) {
      Complex acc = n < static_cast<int>(numerator.size()) ? numerator[n] : Complex(0.0);
      for (int j = 1; j <= n && j < static_cast<int>(denominator.size()); ++j) acc -= denominator[j] * f[n - j];
      f[n] = acc;
    }
    return f;
  }
  const PrecisionScope scope(precision_bits);
  std::vector<MpComplex> f(count, MpComplex{0, 0});
  std::vector<Complex> out;
  double inv = 1.0;
  for (int n = 0; n < count; ++n) {
    MpComplex acc = n < static_cast<int>(scaled_numerator.size()) ? scaled_numerator[n] : MpComplex{0, 0};
    for (int j = 1; j <= n && j < static_cast<int>(scaled_denominator.size()); ++j) {
      acc = acc - scaled_denominator[j] * f[n - j];
    }
    f[n] = acc;
    out.push_back(to_double(acc) * inv);
    inv /= scale;
  }
  return out;
}

PadeApproximant pade(std::span<const Complex> coeffs, int m, int precision_bits) {
  return pade_from(coeffs, m, precision_bits);
}

PadeApproximant pade(std::span<const GaussianRational> coeffs, int m, int precision_bits) {
  return pade_from(coeffs, m, precision_bits);
}


const char* pole_class_name(PoleClass c) {
  switch (c) {
    case PoleClass::kTrueBranchPoint:
      return "true_branch_point";
    case PoleClass::kFroissartArtifact:
      return "froissart_artifact";
    case PoleClass::kUnclassified:
      return "unclassified";
  }
  return "?";
}

std::vector<PoleEntry> SingularityReport::true_poles() const {
  std::vector<PoleEntry> out;
  for (const auto& e : entries) {
    if (e.cls == PoleClass::kTrueBranchPoint) out.push_back(e);
  }
  return out;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> c) {
  std::size_t deg = c.size();
  while (deg > 0 && c[deg - 1] == Complex(0.0)) --deg;
  if (deg <= 1) return {};
  --deg;
  MatrixXc comp = MatrixXc::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
  const Eigen::ComplexEigenSolver<MatrixXc> es(comp, false);
  std::vector<Complex> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);
  const std::span<const Complex> poly = c.subspan(0, deg + 1);
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const Complex d = horner_derivative(poly, r);
      if (d == Complex(0.0)) break;
      const Complex step = horner(poly, r) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      r -= step;
    }
  }
  return roots;
}

SingularityReport pole_residues(const PadeApproximant& p, const ResidueOptions& opts) {
  const int bits = std::max(p.precision_bits, 256);
  const PrecisionScope scope(bits);
  // Work in the rescaled variable w = z / R, where the coefficients are balanced.
  const double R = p.scale;
  auto rescaled = [&](const std::vector<MpComplex>& mp, const std::vector<Complex>& plain) {
    if (!mp.empty()) return mp;
    std::vector<MpComplex> out;
    double rp = 1.0;
    for (const auto& v : plain) {
      out.push_back(mp_of(v * rp));
      rp *= R;
    }
    return out;
  };
  const auto qs = rescaled(p.scaled_denominator, p.denominator);
  const auto ps = rescaled(p.scaled_numerator, p.numerator);
  if (qs.empty()) throw std::invalid_argument("Pade denominator is empty");

  auto roots_of = [&](std::vector<MpComplex> c) {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
    const auto guesses = polynomial_roots(to_double(c));
    return refine_roots(std::span<const MpComplex>(c.data(), guesses.size() + 1), guesses, bits);
  };
  const auto dq = mp_derivative(qs);
  const mpf_class r(R);
  SingularityReport rep;
  for (const auto& w : roots_of(ps)) rep.zeros.push_back(to_double(scale_by(w, r)));
  for (const auto& w : roots_of(qs)) {
    PoleEntry e;
    e.pole = to_double(scale_by(w, r));
    // Residue in z: P(w) / (dQ/dw) * R.
    e.residue = to_double(scale_by(mp_horner(ps, w) / mp_horner(dq, w), r));
    e.paired_zero_distance = INFINITY;
    for (const auto& z : rep.zeros) e.paired_zero_distance = std::min(e.paired_zero_distance, std::abs(z - e.pole));
    if (std::abs(e.residue) >= opts.true_threshold) {
      e.cls = PoleClass::kTrueBranchPoint;
      double best = INFINITY;
      for (double x : opts.expected_exponents) {
        const double d = std::abs(e.residue - Complex(x, 0.0));
        if (d < best) {
          best = d;
          e.nearest_exponent = x;
          e.deviation = d;
        }
      }
    } else if (e.paired_zero_distance <= opts.froissart_distance) {
      e.cls = PoleClass::kFroissartArtifact;
    }
    rep.entries.push_back(e);
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const PoleEntry& a, const PoleEntry& b) { return std::abs(a.pole) < std::abs(b.pole); });
  return rep;
}


void write_ratio_csv(std::ostream& os, const std::vector<std::string>& names, const std::vector<RatioSequence>& seqs) {
  os << "series,n,ratio\n" << std::setprecision(17);
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    for (std::size_t j = 0; j < seqs[s].n.size(); ++j) os << names[s] << ',' << seqs[s].n[j] << ',' << seqs[s].ratio[j] << '\n';
  }
}

void write_exponent_csv(std::ostream& os, const std::vector<std::string>& names,
                        const std::vector<ExponentSequence>& seqs) {
  os << "series,n,minus_alpha\n" << std::setprecision(17);
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    for (std::size_t j = 0; j < seqs[s].n.size(); ++j) {
      os << names[s] << ',' << seqs[s].n[j] << ',' << seqs[s].minus_alpha[j] << '\n';
    }
  }
}

void write_singularity_csv(std::ostream& os, const SingularityReport& report) {
  os << "pole_re,pole_im,residue_re,residue_im,class,paired_zero_distance\n" << std::setprecision(17);
  for (const auto& e : report.entries) {
    os << e.pole.real() << ',' << e.pole.imag() << ',' << e.residue.real() << ',' << e.residue.imag() << ','
       << pole_class_name(e.cls) << ',' << e.paired_zero_distance << '\n';
  }
}

}  // namespace atwood
