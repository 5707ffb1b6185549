#ifndef APOLAR_RREF_HPP
#define APOLAR_RREF_HPP

#include <cstddef>
#include <vector>

#include "apolar/matrix.hpp"

namespace apolar {

// Row-echelon data.  `r` holds the nonzero rows; `pivots[i]` is the column of
// row i's leading entry, strictly increasing.
struct EchelonResult {
  Matrix r;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Forward elimination only (no clearing above pivots).  Deterministic: the
// pivot in each column is the candidate entry of smallest bit length, ties
// broken by lowest row index.  Rows are integer-scaled internally (Bareiss
// one-step fraction-free updates) and returned content-normalized with a
// positive leading entry, so the output is independent of thread count.
// Row updates run under OpenMP when enabled.
EchelonResult echelon(const Matrix& m);

// Full reduced row-echelon form: leading entries 1, zero everywhere else in
// pivot columns, zero rows dropped.  The RREF of a matrix is unique, so this
// is a canonical form of the row space.
EchelonResult rref(const Matrix& m);

// Serial reference implementation of rref(): textbook rational Gauss-Jordan
// with first-nonzero pivoting, no integer scaling, no parallelism.  Kept as
// an independent cross-check; must agree with rref() exactly.
EchelonResult rref_reference(const Matrix& m);

std::size_t rank(const Matrix& m);

// Canonical basis (RREF rows) of the right null space {v : m v = 0}.
Matrix kernel_basis(const Matrix& m);

// Basis of the right null space computed from an echelon form by
// back-substitution, one basis vector per free column (ascending).  Not in
// RREF; deterministic.  Cheaper than kernel_basis when canonical form is not
// required.
Matrix kernel_from_echelon(const EchelonResult& e, std::size_t cols);

// Expresses vectors in terms of a fixed matrix with independent rows:
// solve(w) returns c with c * v == w.  Built once (one augmented reduction),
// then each solve is a cheap elimination.
class RowSolver {
 public:
  explicit RowSolver(const Matrix& v);  // rows must be independent
  std::vector<Rational> solve(const std::vector<Rational>& w) const;
  bool in_row_space(const std::vector<Rational>& w) const;

 private:
  // reduced_ = [R | T] where R is the RREF of v and each row satisfies
  // R_k = T_k * v.
  std::size_t nrows_, ncols_;
  Matrix reduced_;
  std::vector<std::size_t> pivots_;

  bool reduce_coeffs(const std::vector<Rational>& w,
                     std::vector<Rational>& coeffs) const;
};

}  // namespace apolar

#endif  // APOLAR_RREF_HPP
