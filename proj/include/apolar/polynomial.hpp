#ifndef APOLAR_POLYNOMIAL_HPP
#define APOLAR_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

namespace apolar {

// Polynomial with exact rational coefficients in a fixed number of
// variables.  Terms are kept in the graded monomial order; zero
// coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Polynomial() : n_(0) {}
  explicit Polynomial(int nvars) : n_(nvars) {}
  static Polynomial monomial(const Monomial& m, const Rational& c = Rational(1L));
  static Polynomial variable(int nvars, int i, int exp = 1);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the highest / lowest term; -1 for the zero polynomial.
  int degree() const;
  int order() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const { return *this * Rational(-1L); }
  bool operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial homogeneous_component(int d) const;
  Polynomial truncate_above(int d) const;  // keep degrees <= d
  Polynomial tail_from(int h) const;       // keep degrees >= h
  // Same terms viewed in a larger variable ring (new_n >= nvars).
  Polynomial extend_vars(int new_n) const;

  // Coefficient vector in the chart's order (chart must cover degree()).
  std::vector<Rational> coords(const DegreeChart& chart) const;
  static Polynomial from_coords(const DegreeChart& chart,
                                const std::vector<Rational>& v);

  // Canonical printing: terms in descending monomial order, "*" between
  // coefficient and variables, unit coefficients elided, e.g.
  // "y1^3 - 3*y2^2 + 1/2*y3".  The zero polynomial prints "0".
  std::string str(char var = 'y') const;

 private:
  int n_;
  TermMap terms_;
};

}  // namespace apolar

#endif  // APOLAR_POLYNOMIAL_HPP
