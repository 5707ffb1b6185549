#ifndef APOLAR_POINCARE_HPP
#define APOLAR_POINCARE_HPP

#include <string>
#include <vector>

#include "apolar/polynomial.hpp"
#include "apolar/power_series.hpp"
#include "apolar/rational_function.hpp"

namespace apolar {

// Result of testing F for the shape G + sum of pure squares: the base
// polynomial compressed to its own variables, the count of split-off square
// variables, and whether the split passed the dimension-count check that the
// reduction formula needs (h must equal H(1) - H(2)).
struct SplitReduction {
  bool split = false;
  Polynomial G;              // base polynomial in m variables (when split)
  int m = 0;                 // variable count of the base
  int h = 0;                 // number of split-off squares = H(1) - H(2)
  std::string reason;        // when !split: why the reduction was not applied
};

// Detect the split F = G + sum_{j in T} y_j^2 syntactically: T collects the
// variables that occur in F only as a pure square with coefficient 1.  The
// split is rejected (split = false, reason set) when T is empty, when the
// base vanishes or is degenerate in its own variables, or when |T| fails to
// equal H(1) - H(2) of the full algebra.
SplitReduction reduce_quadrics(const Polynomial& F);

// True when the annihilator of F is generated by a regular sequence, i.e.
// its minimal generator count equals the number of ambient variables.
bool is_complete_intersection(const Polynomial& F);

// Closed form and/or functional relation for the Betti series of the
// algebra of F, always accompanied by the resolution oracle up to pmax and
// a consistency verdict.
//
// A closed form is emitted only when the reduction chain is conclusive:
// the one-dimensional algebra, embedding dimension <= 1 (P = 1/(1-z)),
// a recognized complete intersection (P = 1/(1-z)^n), or a split with a
// one-variable base, whose socle/line reduction chain ends in embedding
// dimension 1 and yields P = 1/(1 - n*z + z^2).  A split with a base in
// m >= 2 variables yields the functional relation P = Q/(1 - h*z*Q); if
// the base is itself a complete intersection the relation closes to a
// rational function, otherwise both sides are compared as oracle
// truncations.  Inputs with no usable split report the oracle alone.
struct PoincarePrediction {
  bool has_closed_form = false;
  RationalFunction closed_form;
  std::string relation;      // empty when no reduction applies
  TruncatedSeries oracle;    // resolution oracle for the algebra of F
  bool has_base = false;     // a split produced a base algebra B
  TruncatedSeries base_oracle;  // resolution oracle for B (when has_base)
  bool consistent = false;   // prediction agrees with the oracle up to pmax
};

PoincarePrediction predict(const Polynomial& F, int pmax);

}  // namespace apolar

#endif  // APOLAR_POINCARE_HPP
