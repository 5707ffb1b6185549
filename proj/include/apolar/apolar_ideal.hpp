#ifndef APOLAR_APOLAR_IDEAL_HPP
#define APOLAR_APOLAR_IDEAL_HPP

#include <vector>

#include "apolar/inverse_system.hpp"
#include "apolar/polynomial.hpp"
#include "apolar/subspace.hpp"

namespace apolar {

// The annihilator ideal of F inside the dual ring, represented by its
// intersection with the polynomials of degree <= socle_degree + 1.  Every
// power of a variable beyond the socle degree annihilates F, so the ideal is
// determined by this truncation, and minimal generators can be read off from
// it.
struct ApolarIdeal {
  Polynomial F;
  int nvars = 0;
  int socle_degree = 0;  // s
  int bound = 0;         // s + 1

  DegreeChart chart;  // monomials of the dual ring up to degree `bound`
  Subspace truncated; // { g of degree <= bound : g ∘ F = 0 } in chart coords

  // Minimal generating set, read from the reduced basis of `truncated`:
  // certified against `ideal_span_upto` to generate the same truncated
  // ideal; degree-sorted, canonical for the chart order.
  std::vector<Polynomial> min_generators;

  // I ∩ S_{<=q} as a subspace of the same chart.
  Subspace upto(int q) const;
};

ApolarIdeal annihilator(const Polynomial& F);

// Common annihilated subspace { v in P_{<=bound} : g ∘ v = 0 for all g }.
Subspace perp(const std::vector<Polynomial>& gens, int nvars, int bound);

// Span of { truncation of m*g to degree <= bound } over generators g and
// monomials m — the degree-<=bound part of the ideal the generators generate.
Subspace ideal_span_upto(const std::vector<Polynomial>& gens, int nvars,
                         int bound);

// Degree-q pieces (q = 0..bound) of the ideal of lowest-degree forms of I:
// entry q is a subspace of S_q (ambient dim S_q).
std::vector<Subspace> leading_form_ideal(const ApolarIdeal& I);

// Degree-q pieces (q = 0..bound) of the annihilator of the top-form module:
// { g in S_q : g ∘ w = 0 for every top form w }.
std::vector<Subspace> annihilator_of_top_forms(const InverseSystem& sys,
                                               int bound);

}  // namespace apolar

#endif  // APOLAR_APOLAR_IDEAL_HPP
