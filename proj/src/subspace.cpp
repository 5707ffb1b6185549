#include "apolar/subspace.hpp"

#include "apolar/errors.hpp"

namespace apolar {

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  EchelonResult e = rref(rows);
  s.basis_ = std::move(e.r);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient,
                        const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Subspace(ambient);
  Matrix m = Matrix::from_rows(rows);
  require(m.cols() == ambient, "span: row length differs from ambient");
  return span(m);
}

Subspace Subspace::full(std::size_t ambient) {
  return span(Matrix::identity(ambient));
}

Subspace Subspace::kernel_of(const Matrix& m) {
  Subspace s;
  s.ambient_ = m.cols();
  EchelonResult e = rref(kernel_from_echelon(echelon(m), m.cols()));
  s.basis_ = std::move(e.r);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
  require(v.size() == ambient_, "reduce: vector length differs from ambient");
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      const Rational& b = basis_.at(i, j);
      if (!b.is_zero()) v[j] -= f * b;
    }
  }
  return v;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  std::vector<Rational> r = reduce(v);
  for (const Rational& e : r)
    if (!e.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require(ambient_ == other.ambient_, "contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  require(a.ambient_ == b.ambient_, "subspace sum: ambient mismatch");
  return Subspace::span(Matrix::vstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_ == b.ambient_, "intersect: ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_);
  // x in A∩B  iff  x = u·basis(A) = w·basis(B); the pairs (u, w) form the
  // left kernel of [basis(A); -basis(B)], i.e. the right kernel of its
  // transpose.
  Matrix neg = b.basis_;
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < neg.cols(); ++j) neg.at(i, j) = -neg.at(i, j);
  Matrix stacked = Matrix::vstack(a.basis_, neg);
  Matrix pairs = kernel_from_echelon(echelon(stacked.transpose()), stacked.rows());
  Matrix u(pairs.rows(), a.dim());
  for (std::size_t i = 0; i < pairs.rows(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) u.at(i, j) = pairs.at(i, j);
  return span(u * a.basis_);
}

std::size_t Subspace::quotient_dim(const Subspace& sub) const {
  require(contains(sub), "quotient_dim: not a subspace");
  return dim() - sub.dim();
}

Subspace Subspace::coordinate_section(const std::vector<bool>& keep) const {
  require(keep.size() == ambient_, "coordinate_section: mask length mismatch");
  std::vector<std::size_t> dropped;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!keep[j]) dropped.push_back(j);
  if (dropped.empty() || dim() == 0) return *this;
  // Combinations u with u·basis vanishing on the dropped coordinates.
  Matrix restr(dim(), dropped.size());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dropped.size(); ++j)
      restr.at(i, j) = basis_.at(i, dropped[j]);
  Matrix u = kernel_from_echelon(echelon(restr.transpose()), dim());
  return span(u * basis_);
}

Subspace Subspace::coordinate_project(const std::vector<std::size_t>& coords) const {
  Matrix p(dim(), coords.size());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j) {
      require(coords[j] < ambient_, "coordinate_project: index out of range");
      p.at(i, j) = basis_.at(i, coords[j]);
    }
  return span(p);
}

}  // namespace apolar
