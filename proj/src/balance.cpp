#include <numeric>

#include "atwood/kowalevski.hpp"

namespace atwood {

namespace {

long den_of(const Rational& q) { return q.get_den().get_si(); }
long num_of(const Rational& q) { return q.get_num().get_si(); }

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  Rational out(rn, rd);
  out.canonicalize();
  return out;
}

}  // namespace

LeadingBalance LeadingBalance::integrable(const Rational& p) {
  if (!(sgn(p) < 0 && p > -1)) throw std::invalid_argument("integrable branch needs -1 < p < 0");
  LeadingBalance b;
  b.family = BranchFamily::kIntegrable;
  b.p = p;
  b.q = 1 - p;
  b.mass_ratio = -4 * b.p * b.q;
  // z ~ t^(1/2) forces an even branch denominator.
  b.k = static_cast<int>(std::lcm(den_of(p), 2L));
  const Rational kr(b.k);
  b.r = static_cast<int>(num_of(Rational(-p * kr)));
  b.lead_x_plus = -b.r;
  b.lead_x_minus = static_cast<int>(num_of(Rational(b.q * kr)));
  b.lead_z = b.k / 2;
  b.lead_lambda = -2 * b.k;
  b.leading_constants = {"b1", "d1"};
  return b;
}

LeadingBalance LeadingBalance::q2(int k, int r) {
  if (!is_admissible(k, r)) throw std::invalid_argument("inadmissible (k, r)");
  LeadingBalance b;
  b.family = BranchFamily::kQ2;
  b.k = k;
  b.r = r;
  b.p = make_rational(-r, k);
  b.q = 2;
  b.mass_ratio = q2_mass_ratio(k, r);
  b.lead_x_plus = -r;
  b.lead_x_minus = 2 * k;
  b.lead_z = k - r / 2;
  b.lead_lambda = -2 * k;
  b.leading_constants = {"d1"};
  return b;
}

Rational q2_mass_ratio(int k, int r) { return make_rational(4L * (r + k), 2L * k - r); }

bool is_admissible(int k, int r) {
  if (k < 3 || k % 2 == 0 || r % 2 != 0) return false;
  if (std::gcd(r, k) != 1) return false;
  return k < r && r < 2 * k;
}

std::vector<AdmissiblePair> admissible_pairs(int k_max) {
  std::vector<AdmissiblePair> out;
  for (int k = 3; k <= k_max; k += 2) {
    for (int rp = k / 2 + 1; rp < k; ++rp) {
      const int r = 2 * rp;
      if (is_admissible(k, r)) out.push_back({k, r, q2_mass_ratio(k, r)});
    }
  }
  return out;
}

std::vector<LeadingBalance> leading_balance(const Rational& mass_ratio) {
  std::vector<LeadingBalance> out;
  if (sgn(mass_ratio) <= 0) return out;

  // (2p - 1)^2 = 1 + M/m with -1 < p < 0, i.e. M/m in ]0, 8[.
  if (mass_ratio < 8) {
    if (auto root = rational_sqrt(1 + mass_ratio)) {
      const Rational p = (1 - *root) / 2;
      out.push_back(LeadingBalance::integrable(p));
    }
  }

  // M/m = 4 (r + k) / (2k - r)  <=>  r / k = (2 M/m - 4) / (M/m + 4).
  Rational ratio = (2 * mass_ratio - 4) / (mass_ratio + 4);
  if (sgn(ratio) > 0 && ratio.get_num().fits_slong_p() && ratio.get_den().fits_slong_p()) {
    const long r = num_of(ratio);
    const long k = den_of(ratio);
    if (k < (1L << 20) && is_admissible(static_cast<int>(k), static_cast<int>(r))) {
      out.push_back(LeadingBalance::q2(static_cast<int>(k), static_cast<int>(r)));
    }
  }
  return out;
}

}  // namespace atwood
