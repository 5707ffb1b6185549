#ifndef APOLAR_SPLITS_HPP
#define APOLAR_SPLITS_HPP

#include <vector>

#include "apolar/apolar_ideal.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

// Homogeneous witness sigma of the same degree as the top part of G with
// sigma ∘ G = 1.  Deterministic: built from the first monomial (chart order)
// of the top homogeneous component.  Requires G != 0.
Polynomial contraction_witness(const Polynomial& G);

// A decomposition of an annihilator into generators coming from a split of
// the generating polynomial, together with its certification: the listed
// generators generate the same truncated ideal as the direct annihilator,
// degree by degree up to socle degree + 1.
struct SplitCheck {
  Polynomial F;                        // the combined polynomial
  std::vector<Polynomial> generators;  // split description, in F's variables
  Polynomial sigma_g;                  // witness for the G block
  Polynomial sigma_h;                  // witness for the H block (zero when unused)
  bool equal = false;
  int first_mismatch = -1;  // smallest degree where the spans differ, or -1
};

// F = G + H with H supported on variables strictly beyond G's block.
// Generators: the two blockwise annihilators, the difference of the two
// contraction witnesses, and all products x_i x_j mixing the blocks.
// Both parts must be nonzero with no terms of degree < 2.
SplitCheck split_annihilator(const Polynomial& G, const Polynomial& H);

// F = G + y_{m+1}^2 + ... + y_n^2 for G in m variables, n > m.
// Generators: the annihilator of G, the quadrics x_j^2 - 2*sigma for each
// tail variable, and all products x_i x_j with j in the tail, i < j.
SplitCheck split_quadrics(const Polynomial& G, int total_vars);

}  // namespace apolar

#endif  // APOLAR_SPLITS_HPP
