#ifndef APOLAR_RESOLUTION_HPP
#define APOLAR_RESOLUTION_HPP

#include <vector>

#include "apolar/local_algebra.hpp"

namespace apolar {

// Betti numbers beta_0, ..., beta_pmax of the residue field over the given
// algebra, computed from first principles: starting from the minimal
// generators of the maximal ideal, each stage assembles the multiplication
// matrix of the induced map of free modules, takes its kernel, and reads the
// next Betti number and the next minimal generating set from the kernel
// modulo its product with the maximal ideal.  Pure linear algebra over the
// rationals; independent of any closed-form series prediction.
std::vector<long> betti_numbers(const FiniteLocalAlgebra& A, int pmax);

}  // namespace apolar

#endif  // APOLAR_RESOLUTION_HPP
