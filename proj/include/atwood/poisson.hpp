#ifndef ATWOOD_POISSON_HPP
#define ATWOOD_POISSON_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "atwood/model.hpp"

namespace atwood {

// Values of a constant assignment keyed by constant name.
using Assignment = std::map<std::string, GaussianRational>;

// The elementary brackets among t0 and the series constants at one point.
struct BracketTable {
  BranchFamily family = BranchFamily::kIntegrable;
  int k = 2;
  int r = 0;
  std::vector<std::string> coordinates;  // "t0" followed by the constant names
  Assignment sigma;
  std::map<std::pair<std::string, std::string>, GaussianRational> values;  // keys ordered as in coordinates
  int equations = 0;  // collected coefficient equations
  int rank = 0;

  // Antisymmetric lookup; {a, a} = 0.
  GaussianRational get(const std::string& a, const std::string& b) const;
};

// A_z = i (m / 2)(x+ x-' - x- x+') on series.
PuiseuxSeries<CoefficientPoly> angular_momentum_series(const PuiseuxSolution& sol);

// Solves {A_z, x+-} = +-i x+- for the six brackets among (t0, constants) at
// sigma. The series are taken in t + t0, so d/dt0 = d/dt. Every known
// coefficient of both identities is one linear equation; the system is solved
// exactly and the surplus equations must hold. Throws IntegrityError when the
// system is inconsistent or does not fix all brackets.
BracketTable solve_brackets(const PuiseuxSolution& sol, const Assignment& sigma);

// Brackets of the energy with every coordinate via the chain rule.
std::map<std::string, GaussianRational> hamiltonian_brackets(const PuiseuxSolution& sol, const BracketTable& table);

// Closed-form brackets as Laurent polynomials in the constants, using the
// slots of `sol` (integrable family and the (3,4) branch).
struct ClosedFormBrackets {
  std::vector<std::string> coordinates;
  std::map<std::pair<std::string, std::string>, CoefficientPoly> values;

  CoefficientPoly get(const std::string& a, const std::string& b) const;
};
ClosedFormBrackets closed_form_brackets(const PuiseuxSolution& sol);

// The second printed form of {c1, c2} for (3,4): -i (7g / 25m) E / d1^4.
CoefficientPoly c1c2_energy_form(const PuiseuxSolution& sol);

// Cyclic Jacobi sums over all coordinate triples, as polynomials in the constants.
std::vector<CoefficientPoly> jacobi_sums(const ClosedFormBrackets& brackets, const PuiseuxSolution& sol);
// Largest |Jacobi sum| over the assignments; exact zero expected.
GaussianRational jacobi_check(const ClosedFormBrackets& brackets, const PuiseuxSolution& sol,
                              const std::vector<Assignment>& grid);

// Evaluates a constant polynomial of `sol` at sigma.
GaussianRational evaluate_at(const CoefficientPoly& p, const PuiseuxSolution& sol, const Assignment& sigma);

void write_bracket_json(std::ostream& os, const BracketTable& table);

}  // namespace atwood

#endif  // ATWOOD_POISSON_HPP
