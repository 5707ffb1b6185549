#ifndef APOLAR_INVERSE_SYSTEM_HPP
#define APOLAR_INVERSE_SYSTEM_HPP

#include <vector>

#include "apolar/polynomial.hpp"
#include "apolar/subspace.hpp"

namespace apolar {

// The cyclic inverse system generated by a single polynomial F: the span of
// all contractions x^a ∘ F, which is finite dimensional and closed under
// contraction.  Its dimension equals the length of the quotient of the dual
// ring by the annihilator of F.
struct InverseSystem {
  Polynomial F;
  int nvars = 0;
  int socle_degree = 0;  // top degree of F

  DegreeChart chart;  // coordinates for polynomials of degree <= socle_degree
  Subspace module;    // span{ x^a ∘ F } in chart coordinates

  // top_forms[q]: the degree-q part of the associated graded module — the
  // image of (module ∩ P_{<=q}) under projection to the degree-q
  // coordinates.  Ambient of entry q is dim P_q.
  std::vector<Subspace> top_forms;
  std::vector<int> hilbert;  // hilbert[q] = dim top_forms[q], q = 0..socle_degree

  std::size_t dim() const { return module.dim(); }
};

// Requires F != 0.
InverseSystem derivative_module(const Polynomial& F);

// Hilbert function (1, H(1), ..., H(s)) of the quotient by the annihilator.
std::vector<int> hilbert_function(const Polynomial& F);

// Top degree of F (the socle degree of the quotient algebra); F != 0.
int socle_degree(const Polynomial& F);

// Largest q with H(q) > 1, or 0 if there is none.
int capital_degree(const Polynomial& F);
int capital_degree(const std::vector<int>& hilbert);

// Stretched: capital degree <= 1, i.e. H(q) <= 1 for all q >= 2.
bool is_stretched(const Polynomial& F);

// True when H(1) equals the number of variables (no variable can be split
// off by a linear change of coordinates).
bool is_nondegenerate(const Polynomial& F);

}  // namespace apolar

#endif  // APOLAR_INVERSE_SYSTEM_HPP
