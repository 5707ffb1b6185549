#ifndef APOLAR_MONOMIAL_HPP
#define APOLAR_MONOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Monomial in n variables, stored as its exponent vector.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}
  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
  static Monomial variable(int nvars, int i, int exp = 1);

  int nvars() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  // Componentwise <=, i.e. "this divides other".
  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& o) const;
  // Componentwise difference; requires o.divides(*this).
  Monomial divided_by(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }

  std::string str(char var = 'y') const;  // e.g. "y1^2*y3"
};

// Graded order: lower degree first; within a degree, lexicographically with
// earlier variables heavier, so for two variables the order of the quadrics
// is y1^2, y1*y2, y2^2.  Total degree 0 (the monomial 1) is index 0 of every
// chart built from this order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All monomials of exact degree d in n variables, ordered.
std::vector<Monomial> monomials_of_degree(int n, int d);

// Number of monomials of exact degree d / of degree <= d in n variables.
long dim_exact(int n, int d);
long dim_upto(int n, int d);

// Coordinate chart for the space of polynomials of degree <= maxdeg in
// nvars variables: a fixed ordered monomial basis with index lookup.
// Coordinates of subspaces of that space always use this ordering.
class DegreeChart {
 public:
  DegreeChart(int nvars, int maxdeg);

  int nvars() const { return n_; }
  int maxdeg() const { return maxdeg_; }
  std::size_t size() const { return mons_.size(); }
  const Monomial& monomial(std::size_t idx) const { return mons_.at(idx); }
  std::size_t index(const Monomial& m) const;  // invariant_error if absent
  bool contains(const Monomial& m) const;
  std::size_t degree_offset(int d) const;  // first index of the degree-d block
  std::size_t degree_size(int d) const;

 private:
  int n_, maxdeg_;
  std::vector<Monomial> mons_;
  std::map<Monomial, std::size_t, MonomialOrder> index_;
  std::vector<std::size_t> offsets_;
};

}  // namespace apolar

#endif  // APOLAR_MONOMIAL_HPP
