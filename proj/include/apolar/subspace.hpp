#ifndef APOLAR_SUBSPACE_HPP
#define APOLAR_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/rref.hpp"

namespace apolar {

// A linear subspace of k^ambient over the rationals, stored as its reduced
// row-echelon basis.  RREF is unique per row space, so equality of subspaces
// is literal equality of the stored matrices.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  // Row space of the given rows (zero rows welcome; they are dropped).
  static Subspace span(const Matrix& rows);
  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rational>>& rows);
  static Subspace full(std::size_t ambient);
  // Right null space {v : m v = 0} inside k^{m.cols()}.
  static Subspace kernel_of(const Matrix& m);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  // Remainder of v after eliminating this subspace's pivot coordinates;
  // zero iff v lies in the subspace.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  // Sum and intersection of subspaces of one ambient space.
  friend Subspace operator+(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);

  // dim(this / sub); requires sub to be contained in this.
  std::size_t quotient_dim(const Subspace& sub) const;

  // {v in this : v_j = 0 for every j with keep[j] == false}; same ambient.
  Subspace coordinate_section(const std::vector<bool>& keep) const;

  // Image of this subspace under projection onto the listed coordinates
  // (in the listed order); ambient becomes coords.size().
  Subspace coordinate_project(const std::vector<std::size_t>& coords) const;

 private:
  std::size_t ambient_;
  Matrix basis_;                     // RREF rows
  std::vector<std::size_t> pivots_;  // pivot column per basis row
};

}  // namespace apolar

#endif  // APOLAR_SUBSPACE_HPP
