#ifndef APOLAR_CONTRACTION_HPP
#define APOLAR_CONTRACTION_HPP

#include "apolar/matrix.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

// Contraction action of the dual ring on polynomials: on monomials
//
//   x^a ∘ y^b = (prod_i b_i! / (b_i - a_i)!) * y^(b-a)   if a <= b,
//   x^a ∘ y^b = 0                                        otherwise,
//
// extended bilinearly; g acts as the constant-coefficient differential
// operator g(d/dy1, ..., d/dyn).  Both arguments live in the same number of
// variables.
Polynomial contract(const Polynomial& g, const Polynomial& f);

// Matrix of sigma |-> sigma ∘ f with sigma running over the monomials of
// `dual_chart` (one row each), coordinates of the result in `chart`.
Matrix action_on(const Polynomial& f, const DegreeChart& dual_chart,
                 const DegreeChart& chart);

// Matrix of mu |-> g ∘ mu with mu running over the monomials of `domain`
// (one row each), coordinates of the result in `codomain`.
Matrix operator_matrix(const Polynomial& g, const DegreeChart& domain,
                       const DegreeChart& codomain);

}  // namespace apolar

#endif  // APOLAR_CONTRACTION_HPP
