#include "apolar/contraction.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

// prod_i b_i! / (b_i - a_i)!  for a <= b componentwise.
Int falling_factor(const Monomial& a, const Monomial& b) {
  Int f = 1;
  for (std::size_t i = 0; i < a.e.size(); ++i)
    for (int k = b.e[i]; k > b.e[i] - a.e[i]; --k) f *= k;
  return f;
}

}  // namespace

Polynomial contract(const Polynomial& g, const Polynomial& f) {
  require(g.nvars() == f.nvars(), "contract: variable count mismatch");
  Polynomial out(f.nvars());
  for (const auto& [a, ca] : g.terms())
    for (const auto& [b, cb] : f.terms()) {
      if (!a.divides(b)) continue;
      out.add_term(b.divided_by(a), ca * cb * Rational(falling_factor(a, b)));
    }
  return out;
}

Matrix action_on(const Polynomial& f, const DegreeChart& dual_chart,
                 const DegreeChart& chart) {
  Matrix m(dual_chart.size(), chart.size());
  for (std::size_t i = 0; i < dual_chart.size(); ++i) {
    Polynomial img = contract(Polynomial::monomial(dual_chart.monomial(i)), f);
    for (const auto& [mon, c] : img.terms()) m.at(i, chart.index(mon)) = c;
  }
  return m;
}

Matrix operator_matrix(const Polynomial& g, const DegreeChart& domain,
                       const DegreeChart& codomain) {
  Matrix m(domain.size(), codomain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    Polynomial img = contract(g, Polynomial::monomial(domain.monomial(i)));
    for (const auto& [mon, c] : img.terms()) m.at(i, codomain.index(mon)) = c;
  }
  return m;
}

}  // namespace apolar
