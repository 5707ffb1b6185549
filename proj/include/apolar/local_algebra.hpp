#ifndef APOLAR_LOCAL_ALGEBRA_HPP
#define APOLAR_LOCAL_ALGEBRA_HPP

#include <vector>

#include "apolar/polynomial.hpp"
#include "apolar/subspace.hpp"

namespace apolar {

// A finite-dimensional local algebra over the rationals, given by a basis of
// monomial lifts, structure constants, and the images of the ring variables.
// Coordinate index 0 is always the unit.  Built either as the quotient of
// the dual polynomial ring by the annihilator of an inverse-system generator
// or as a quotient of another instance by an ideal.
class FiniteLocalAlgebra {
 public:
  static FiniteLocalAlgebra from_inverse_system(const Polynomial& F);

  int dim() const { return static_cast<int>(labels_.size()); }
  int nvars() const { return nvars_; }
  const std::vector<Monomial>& basis_labels() const { return labels_; }

  // Multiplication-by-basis-element matrices: mult_by(i) * coords(v) is
  // coords(e_i * v).  Symmetric in the sense mult_by(i)col(j) == mult_by(j)col(i).
  const Matrix& mult_by(std::size_t i) const { return mult_.at(i); }
  std::vector<Rational> multiply(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
  // d x d matrix of multiplication by the element with the given coords.
  Matrix mult_matrix(const std::vector<Rational>& el) const;
  const std::vector<Rational>& var_image(int i) const { return var_images_.at(i); }

  // Coordinates of the residue class of a polynomial in the ring variables
  // (e.g. x1^2*x2 - 3*x2), evaluated through the variable images.
  std::vector<Rational> ring_element(const Polynomial& g) const;

  Subspace maximal_ideal() const;
  Subspace ideal_power(int j) const;        // m^j; m^0 is the whole algebra
  Subspace power_annihilator(int j) const;  // (0 : m^j)
  Subspace socle() const { return power_annihilator(1); }
  Subspace ideal_generated_by(const std::vector<std::vector<Rational>>& elems) const;

  // Quotient by an ideal subspace (validated: contained in the maximal
  // ideal and closed under multiplication by the variables).
  FiniteLocalAlgebra quotient(const Subspace& ideal) const;
  FiniteLocalAlgebra quotient_by_elements(
      const std::vector<std::vector<Rational>>& elems) const;

  int socle_dimension() const { return static_cast<int>(socle().dim()); }
  bool is_gorenstein() const { return socle_dimension() == 1; }
  int embedding_dimension() const;
  std::vector<int> hilbert() const;  // dims of m^i / m^{i+1}
  int top_degree() const;            // largest i with m^i != 0

 private:
  FiniteLocalAlgebra() = default;
  void verify_structure() const;

  int nvars_ = 0;
  std::vector<Monomial> labels_;
  std::vector<Matrix> mult_;
  std::vector<std::vector<Rational>> var_images_;
};

}  // namespace apolar

#endif  // APOLAR_LOCAL_ALGEBRA_HPP
