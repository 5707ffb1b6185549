#include "apolar/local_algebra.hpp"

#include <random>

#include "apolar/contraction.hpp"
#include "apolar/errors.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/rref.hpp"

namespace apolar {

namespace {

std::vector<Rational> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Rational> v(n);
  v[k] = 1;
  return v;
}

}  // namespace

FiniteLocalAlgebra FiniteLocalAlgebra::from_inverse_system(const Polynomial& F) {
  InverseSystem sys = derivative_module(F);
  const int n = sys.nvars;
  const std::size_t d = sys.dim();

  // Greedy monomial basis: walk the dual monomials in chart order and keep
  // those whose contraction against F is independent of what came before.
  // The first pick is always the unit (1 ∘ F = F != 0).
  DegreeChart dual(n, sys.socle_degree);
  std::vector<Monomial> labels;
  Matrix picked(0, sys.chart.size());
  Subspace running(sys.chart.size());
  for (std::size_t i = 0; i < dual.size() && labels.size() < d; ++i) {
    Polynomial img = contract(Polynomial::monomial(dual.monomial(i)), F);
    if (img.is_zero()) continue;
    std::vector<Rational> v = img.coords(sys.chart);
    if (running.contains(v)) continue;
    picked.append_row(v);
    running = Subspace::span(picked);
    labels.push_back(dual.monomial(i));
  }
  require(labels.size() == d, "algebra: monomial basis incomplete");

  // phi: (dual ring mod annihilator) -> module, g + Ann |-> g ∘ F is an
  // isomorphism, so expanding contractions over the picked rows yields the
  // structure constants.
  RowSolver solver(picked);
  FiniteLocalAlgebra A;
  A.nvars_ = n;
  A.labels_ = std::move(labels);
  A.mult_.assign(d, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Monomial prod = A.labels_[i].times(A.labels_[j]);
      std::vector<Rational> c(d);
      if (prod.degree() <= sys.socle_degree) {
        Polynomial img = contract(Polynomial::monomial(prod), F);
        if (!img.is_zero()) c = solver.solve(img.coords(sys.chart));
      }
      for (std::size_t k = 0; k < d; ++k) {
        A.mult_[i].at(k, j) = c[k];
        A.mult_[j].at(k, i) = c[k];
      }
    }
  A.var_images_.reserve(n);
  for (int i = 0; i < n; ++i) {
    Polynomial img = contract(Polynomial::variable(n, i), F);
    A.var_images_.push_back(img.is_zero() ? std::vector<Rational>(d)
                                          : solver.solve(img.coords(sys.chart)));
  }
  A.verify_structure();
  return A;
}

void FiniteLocalAlgebra::verify_structure() const {
  const std::size_t d = labels_.size();
  require(d > 0 && labels_[0].is_one(), "algebra: missing unit");
  // Unit acts as identity.
  for (std::size_t j = 0; j < d; ++j)
    require(mult_[0].row(j) == unit_vector(d, j), "algebra: unit is not neutral");
  // Associativity on basis triples: full check for small algebras, else all
  // variable pairs against the basis plus seeded random triples.
  auto assoc = [&](const std::vector<Rational>& a, const std::vector<Rational>& b,
                   const std::vector<Rational>& c) {
    require(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)),
            "algebra: associativity violated");
  };
  if (d <= 10) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        for (std::size_t k = j; k < d; ++k)
          assoc(unit_vector(d, i), unit_vector(d, j), unit_vector(d, k));
  } else {
    for (const auto& x : var_images_)
      for (const auto& y : var_images_)
        for (std::size_t k = 0; k < d; ++k) assoc(x, y, unit_vector(d, k));
    std::mt19937_64 rng(0xa1b2c3d4u);
    for (int t = 0; t < 60; ++t)
      assoc(unit_vector(d, rng() % d), unit_vector(d, rng() % d),
            unit_vector(d, rng() % d));
  }
}

std::vector<Rational> FiniteLocalAlgebra::multiply(
    const std::vector<Rational>& a, const std::vector<Rational>& b) const {
  const std::size_t d = labels_.size();
  require(a.size() == d && b.size() == d, "algebra: bad coordinate length");
  std::vector<Rational> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    const Matrix& mi = mult_[i];
    for (std::size_t k = 0; k < d; ++k) {
      Rational acc;
      for (std::size_t j = 0; j < d; ++j) {
        if (b[j].is_zero()) continue;
        const Rational& m = mi.at(k, j);
        if (!m.is_zero()) acc += m * b[j];
      }
      if (!acc.is_zero()) out[k] += a[i] * acc;
    }
  }
  return out;
}

Matrix FiniteLocalAlgebra::mult_matrix(const std::vector<Rational>& el) const {
  const std::size_t d = labels_.size();
  require(el.size() == d, "algebra: bad coordinate length");
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (el[i].is_zero()) continue;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) {
        const Rational& v = mult_[i].at(k, j);
        if (!v.is_zero()) m.at(k, j) += el[i] * v;
      }
  }
  return m;
}

std::vector<Rational> FiniteLocalAlgebra::ring_element(const Polynomial& g) const {
  const std::size_t d = labels_.size();
  require(g.nvars() <= nvars_, "ring element: too many variables");
  std::vector<Rational> out(d);
  for (const auto& [mon, coef] : g.terms()) {
    std::vector<Rational> acc = unit_vector(d, 0);
    for (int i = 0; i < mon.nvars(); ++i)
      for (int t = 0; t < mon.e[i]; ++t) acc = multiply(acc, var_images_[i]);
    for (std::size_t k = 0; k < d; ++k) out[k] += coef * acc[k];
  }
  return out;
}

Subspace FiniteLocalAlgebra::maximal_ideal() const {
  const std::size_t d = labels_.size();
  Matrix rows(0, d);
  for (std::size_t k = 1; k < d; ++k) rows.append_row(unit_vector(d, k));
  return Subspace::span(rows.rows() ? rows : Matrix(0, d));
}

Subspace FiniteLocalAlgebra::ideal_power(int j) const {
  require(j >= 0, "ideal power: negative exponent");
  const std::size_t d = labels_.size();
  if (j == 0) return Subspace::full(d);
  Subspace power = maximal_ideal();
  for (int t = 1; t < j && power.dim() > 0; ++t) {
    Matrix rows(0, d);
    for (std::size_t a = 0; a < power.dim(); ++a) {
      std::vector<Rational> w = power.basis().row(a);
      // m * w with m ranging over the maximal ideal's basis (the non-unit
      // basis vectors): rows k >= 1 of the multiplication matrix columns.
      Matrix mw = mult_matrix(w);
      for (std::size_t k = 1; k < d; ++k) {
        std::vector<Rational> prod(d);
        for (std::size_t r = 0; r < d; ++r) prod[r] = mw.at(r, k);
        rows.append_row(prod);
      }
    }
    power = Subspace::span(rows.rows() ? rows : Matrix(0, d));
  }
  return power;
}

Subspace FiniteLocalAlgebra::power_annihilator(int j) const {
  require(j >= 0, "power annihilator: negative exponent");
  const std::size_t d = labels_.size();
  Subspace power = ideal_power(j);
  if (power.dim() == 0) return Subspace::full(d);
  Matrix stacked(0, d);
  for (std::size_t t = 0; t < power.dim(); ++t)
    stacked = Matrix::vstack(stacked, mult_matrix(power.basis().row(t)));
  return Subspace::kernel_of(stacked);
}

Subspace FiniteLocalAlgebra::ideal_generated_by(
    const std::vector<std::vector<Rational>>& elems) const {
  const std::size_t d = labels_.size();
  Matrix rows(0, d);
  for (const auto& el : elems) {
    Matrix me = mult_matrix(el);
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<Rational> prod(d);
      for (std::size_t r = 0; r < d; ++r) prod[r] = me.at(r, k);
      rows.append_row(prod);
    }
  }
  return Subspace::span(rows.rows() ? rows : Matrix(0, d));
}

FiniteLocalAlgebra FiniteLocalAlgebra::quotient(const Subspace& ideal) const {
  const std::size_t d = labels_.size();
  require(ideal.ambient() == d, "quotient: ambient mismatch");
  require(maximal_ideal().contains(ideal), "quotient: ideal contains a unit");
  // Closure under the algebra generators (variables) makes it an ideal.
  for (std::size_t t = 0; t < ideal.dim(); ++t)
    for (int a = 0; a < nvars_; ++a)
      require(ideal.contains(multiply(var_images_[a], ideal.basis().row(t))),
              "quotient: subspace is not an ideal");

  // Surviving coordinates: those that are not pivots of the ideal.
  std::vector<std::size_t> keep;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < d; ++c) {
      if (pi < ideal.pivots().size() && ideal.pivots()[pi] == c) { ++pi; continue; }
      keep.push_back(c);
    }
  }
  const std::size_t nd = keep.size();
  auto project = [&](const std::vector<Rational>& v) {
    std::vector<Rational> red = ideal.reduce(v);
    std::vector<Rational> out(nd);
    for (std::size_t t = 0; t < nd; ++t) out[t] = red[keep[t]];
    return out;
  };

  FiniteLocalAlgebra Q;
  Q.nvars_ = nvars_;
  for (std::size_t t = 0; t < nd; ++t) Q.labels_.push_back(labels_[keep[t]]);
  Q.mult_.assign(nd, Matrix(nd, nd));
  for (std::size_t i = 0; i < nd; ++i)
    for (std::size_t j = i; j < nd; ++j) {
      std::vector<Rational> prod =
          project(multiply(unit_vector(d, keep[i]), unit_vector(d, keep[j])));
      for (std::size_t k = 0; k < nd; ++k) {
        Q.mult_[i].at(k, j) = prod[k];
        Q.mult_[j].at(k, i) = prod[k];
      }
    }
  for (int a = 0; a < nvars_; ++a) Q.var_images_.push_back(project(var_images_[a]));
  Q.verify_structure();
  return Q;
}

FiniteLocalAlgebra FiniteLocalAlgebra::quotient_by_elements(
    const std::vector<std::vector<Rational>>& elems) const {
  return quotient(ideal_generated_by(elems));
}

int FiniteLocalAlgebra::embedding_dimension() const {
  return static_cast<int>(maximal_ideal().dim() - ideal_power(2).dim());
}

std::vector<int> FiniteLocalAlgebra::hilbert() const {
  std::vector<int> h;
  Subspace prev = ideal_power(0);
  for (int i = 1;; ++i) {
    Subspace cur = ideal_power(i);
    h.push_back(static_cast<int>(prev.dim() - cur.dim()));
    if (cur.dim() == 0) break;
    prev = cur;
  }
  return h;
}

int FiniteLocalAlgebra::top_degree() const {
  return static_cast<int>(hilbert().size()) - 1;
}

}  // namespace apolar
