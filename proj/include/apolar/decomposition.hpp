#ifndef APOLAR_DECOMPOSITION_HPP
#define APOLAR_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "apolar/local_algebra.hpp"
#include "apolar/polynomial.hpp"

namespace apolar {

// Symmetric decomposition of the associated graded algebra of a Gorenstein
// local algebra with socle degree s.  Row a (a = 0..s-2; a single row when
// s <= 1) lists the Hilbert function of the a-th filtration quotient; each
// row is symmetric around (s-a)/2, rows a >= 1 start and end with zeros, and
// the columnwise sum reproduces the Hilbert function of the algebra.
struct SymmetricDecomposition {
  int socle_degree = 0;
  std::vector<std::vector<int>> rows;  // rows[a] has entries i = 0..s-a
  std::vector<int> total;              // Hilbert function of the algebra
  std::vector<int> f;                  // f[h-2] = f_h for h = 2..s

  std::string str() const;
};

// Decomposition computed from the filtration subspaces
// ((0 : m^{s+1-a-i}) ∩ m^i + m^{i+1}) / m^{i+1}.  Requires a Gorenstein
// algebra; every structural property of the table is re-checked and a
// violation aborts with a diagnostic.
SymmetricDecomposition symmetric_decomposition(const FiniteLocalAlgebra& A);
SymmetricDecomposition symmetric_decomposition(const Polynomial& F);

// Decomposition of the algebra built from the degree >= h part of F.  Rows
// a <= s-h agree with those of the algebra of F itself.
SymmetricDecomposition decomposition_of_tail(const Polynomial& F, int h);

}  // namespace apolar

#endif  // APOLAR_DECOMPOSITION_HPP
