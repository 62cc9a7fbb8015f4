#ifndef ATWOOD_KOWALEVSKI_HPP
#define ATWOOD_KOWALEVSKI_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "atwood/params.hpp"
#include "atwood/puiseux_series.hpp"

namespace atwood {

enum class BranchFamily {
  kIntegrable,  // p + q = 1, gravity absent from the leading balance
  kQ2,          // q = 2, p = -r/k
};

// Leading-order balance x+ ~ a1 t^p, x- ~ b1 t^q, z ~ d1 t^((p+q)/2),
// lambda ~ l1 t^-2. All exponents are stored as integer numerators over the
// branch denominator k (series variable tau = t^(1/k)).
struct LeadingBalance {
  BranchFamily family = BranchFamily::kIntegrable;
  Rational p;
  Rational q;
  Rational mass_ratio;
  int k = 2;
  int r = 1;  // -p * k
  int lead_x_plus = -1;
  int lead_x_minus = 3;
  int lead_z = 1;
  int lead_lambda = -4;
  // Constants fixed at leading order, in registry order.
  std::vector<std::string> leading_constants;

  static LeadingBalance integrable(const Rational& p);
  static LeadingBalance q2(int k, int r);

  // l1 / m = p (p - 1).
  Rational lambda_ratio() const { return p * (p - 1); }
  // Step indices where gravity forcing enters the A, B, D equations.
  int forcing_a() const { return 2 * k - lead_x_plus; }
  int forcing_b() const { return 2 * k - lead_x_minus; }
  int forcing_d() const { return 2 * k - lead_z; }
};

// All balances compatible with M/m. The integrable branch needs 1 + M/m to be
// a rational square (otherwise p is irrational and no Puiseux series exists);
// the q = 2 branch needs an admissible (k, r).
std::vector<LeadingBalance> leading_balance(const Rational& mass_ratio);

struct AdmissiblePair {
  int k;
  int r;
  Rational mass_ratio;
};

// M/m = 4 (r + k) / (2k - r).
Rational q2_mass_ratio(int k, int r);
bool is_admissible(int k, int r);
// k odd, r = 2r', k/2 < r' < k, gcd(r, k) = 1, k <= k_max; ordered by (k, r).
std::vector<AdmissiblePair> admissible_pairs(int k_max);

// Leading coefficients expressed in the field T.
template <class T>
struct LeadingData {
  T a1, b1, d1, l1;
};

enum class Component { kA = 0, kB = 1, kD = 2, kL = 3 };
const char* component_name(Component c);

template <class T>
using Vec4 = std::array<T, 4>;
template <class T>
using Mat4 = std::array<Vec4<T>, 4>;

// Linear operator of the coefficient recursion at step s, unknowns ordered
// (a, b, d, l).
template <class T>
struct KowalevskiMatrix {
  int s = 0;
  Mat4<T> entries;

  T determinant() const;  // cofactor expansion
  Mat4<T> adjugate() const;
};

// Diagonal entries alpha, beta, gamma of K(s) (exact rationals).
std::array<Rational, 3> kowalevski_diagonal(int s, const LeadingBalance& balance, const MachineParams& params);
// det K(s) = -d1^2 * resonance_polynomial(s).
Rational resonance_polynomial(int s, const LeadingBalance& balance, const MachineParams& params);

template <class T>
KowalevskiMatrix<T> kowalevski_matrix(int s, const LeadingBalance& balance, const MachineParams& params,
                                      const LeadingData<T>& lead);

// Symbolic matrix with the balance's leading constants in slots 0, 1, ...
KowalevskiMatrix<CoefficientPoly> kowalevski_matrix(int s, const LeadingBalance& balance,
                                                    const MachineParams& params);

// Published closed forms of det K(s) as polynomials in the leading constants:
// integrable -(m^2 d1^2 / 2)(s+2) s^2 (s-2); q = 2 branch
// -6 m^2 d1^2 (2k+r) / (k^4 (2k-r)) s (s+k)(s-r)(s+k-r).
CoefficientPoly closed_form_determinant(int s, const LeadingBalance& balance, const MachineParams& params);

// How free constants are injected at resonant steps: the right null vector is
// normalized so that the chosen component equals `scale`, and the particular
// solution has that component zero.
struct ConstantPolicy {
  std::vector<Component> preference{Component::kB};
  std::map<int, Component> at_step;
  std::vector<std::string> names;  // defaults c1, c2, ...
  GaussianRational scale = 1;

  // b-normalized everywhere.
  static ConstantPolicy b_normalized() { return {}; }
  // Reproduces the published parametrization: b-normalized, except that the
  // second resonance s = r of the q = 2 branch is l-normalized.
  static ConstantPolicy published(const LeadingBalance& balance);
  // b-normalized, except that s = r of the q = 2 branch is normalized on x+,
  // so c2 is the free t^(r/k) coefficient of x+ itself. This is the
  // parametrization under which the published Pade pole pattern appears.
  static ConstantPolicy x_plus_at_r(const LeadingBalance& balance);
};

struct ConstantEntry {
  std::string name;
  int step;  // 0 for leading-order constants
};

template <class T>
struct ResonanceRecord {
  int s = 0;
  Rational det_factor;  // det K(s) = -d1^2 * det_factor (zero here)
  Vec4<T> rhs;
  T compatibility;  // left null vector . rhs
  bool solvable = false;
  std::string constant;
  Component normalized = Component::kB;
  Vec4<T> null_vector;
};

template <class T>
struct Expansion {
  LeadingBalance balance;
  MachineParams params;
  int n_terms = 0;
  PuiseuxSeries<T> x_plus, x_minus, z, lambda;
  std::vector<ConstantEntry> constants;
  std::vector<ResonanceRecord<T>> resonance_log;
  std::vector<Vec4<T>> rhs;      // rhs[s], s = 1 .. n_terms - 1 (rhs[0] unused)
  std::vector<Vec4<T>> unknowns;  // (a, b, d, l)[s] for s = 0 .. n_terms - 1

  std::vector<std::string> constant_names() const;
  int constant_slot(const std::string& name) const;
  // Free constants plus the implicit time origin t0.
  int free_constant_count() const { return static_cast<int>(constants.size()) + 1; }
};

using PuiseuxSolution = Expansion<CoefficientPoly>;

class ObstructionError : public std::runtime_error {
 public:
  ObstructionError(int s, std::string compatibility, Complex value)
      : std::runtime_error("unsolvable resonance at s = " + std::to_string(s) + ": compatibility " + compatibility),
        s_(s),
        compatibility_(std::move(compatibility)),
        value_(value) {}
  int step() const { return s_; }
  const std::string& compatibility() const { return compatibility_; }
  Complex value() const { return value_; }

 private:
  int s_;
  std::string compatibility_;
  Complex value_;
};

// Solves the recursion for s = 1 .. n_terms - 1 so that every series carries
// n_terms coefficients. Constants named in `values` are substituted; any
// other constant stays symbolic (CoefficientPoly only; numeric fields need a
// value for every constant).
template <class T>
Expansion<T> expand(const LeadingBalance& balance, const MachineParams& params, int n_terms,
                    const ConstantPolicy& policy, const std::map<std::string, T>& values = {});

// Right-hand side (A, B, D, L) of step s from the solved unknowns[0 .. s-1].
template <class T>
Vec4<T> recursion_rhs(const LeadingBalance& balance, const MachineParams& params, const std::vector<Vec4<T>>& unknowns,
                      int s);

// Published parametrization convenience wrappers.
PuiseuxSolution expand_symbolic(const LeadingBalance& balance, const MachineParams& params, int n_terms);
Expansion<GaussianRational> expand_exact(const LeadingBalance& balance, const MachineParams& params, int n_terms,
                                         const std::map<std::string, GaussianRational>& values);
Expansion<Complex> expand_float(const LeadingBalance& balance, const MachineParams& params, int n_terms,
                                const std::map<std::string, Complex>& values);

struct ResonanceStructure {
  int k = 0;
  int r = 0;
  bool adjacent = false;  // r = k + 1: first index at s = 1, generic machinery
  std::vector<int> kowalevski_indices;  // {-k, 0, r-k, r}
  std::vector<int> predicted_nonzero_rhs;       // s = n (r-k), n >= 2, s <= r
  std::vector<int> predicted_nonzero_solution;  // s = n (r-k), n >= 1, s <= r
  std::vector<int> observed_nonzero_rhs;
  std::vector<int> observed_nonzero_solution;
  bool second_index_avoided = false;  // r is never a multiple of r-k
  bool confirmed = false;
};

ResonanceStructure resonance_structure(int k, int r, const MachineParams& params = {});

// Covector test for the r = k + 1 family.
struct CovectorReport {
  int k = 0;
  Vec4<CoefficientPoly> covector;
  bool annihilates = false;           // U . K(r) == 0 exactly
  std::map<int, CoefficientPoly> w;  // W(s) for s = 3 .. s_max
};

Vec4<CoefficientPoly> r_k1_covector(int k, const MachineParams& params);
CovectorReport covector_test(int k, const MachineParams& params, int s_max);
// Published W(3) closed form (slots: d1 = 0, c1 = 1).
CoefficientPoly w3_closed_form(int k, const MachineParams& params);
// Denominator 96 g^3 (k-1)^2 k^8 (k+2)^2 (k+3) of W(4).
Rational w4_denominator(int k, const MachineParams& params);
// P6(k) reconstructed from a computed W(4) = i m c1^4 d1^2 (k-3)(k+1)(2k+1)(3k+1)^4 P6 / den.
Rational w4_polynomial_value(int k, const MachineParams& params, const CoefficientPoly& w4);

}  // namespace atwood

#endif  // ATWOOD_KOWALEVSKI_HPP
