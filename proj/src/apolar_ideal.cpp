#include "apolar/apolar_ideal.hpp"

#include <algorithm>

#include "apolar/contraction.hpp"
#include "apolar/errors.hpp"

namespace apolar {

Subspace ApolarIdeal::upto(int q) const {
  std::vector<bool> keep(chart.size(), false);
  for (std::size_t j = 0; j < chart.size(); ++j)
    if (chart.monomial(j).degree() <= q) keep[j] = true;
  return truncated.coordinate_section(keep);
}

ApolarIdeal annihilator(const Polynomial& F) {
  if (F.is_zero()) throw input_error("annihilator: F must be nonzero");
  const int n = F.nvars();
  const int s = F.degree();
  const int bound = s + 1;
  ApolarIdeal I{F, n, s, bound, DegreeChart(n, bound), Subspace(), {}};

  // g = sum_sigma c_sigma * sigma annihilates F iff the coefficient vector
  // lies in the left kernel of the action matrix sigma |-> sigma ∘ F.
  DegreeChart target(n, s);
  Matrix act = action_on(F, I.chart, target);
  I.truncated = Subspace::kernel_of(act.transpose());

  // Minimal generators: reduced-basis rows of the truncation that survive
  // modulo the span of { truncate(x_i * f) : f in the truncation }.  The
  // pivot columns of that product span mark the redundant rows.
  Matrix products(0, I.chart.size());
  for (std::size_t r = 0; r < I.truncated.dim(); ++r) {
    Polynomial f = Polynomial::from_coords(I.chart, I.truncated.basis().row(r));
    for (int i = 0; i < n; ++i) {
      Polynomial xif =
          (f * Polynomial::variable(n, i)).truncate_above(bound);
      if (!xif.is_zero()) products.append_row(xif.coords(I.chart));
    }
  }
  Subspace product_span = Subspace::span(products);
  require(I.truncated.contains(product_span),
          "annihilator: ideal not closed under multiplication");
  std::vector<std::size_t> ppiv = product_span.pivots();
  for (std::size_t r = 0; r < I.truncated.dim(); ++r) {
    std::size_t piv = I.truncated.pivots()[r];
    if (std::find(ppiv.begin(), ppiv.end(), piv) != ppiv.end()) continue;
    I.min_generators.push_back(
        Polynomial::from_coords(I.chart, I.truncated.basis().row(r)));
  }
  // Reduced-basis rows are pivot-ordered, which is not quite degree-ordered
  // for inhomogeneous rows; sort by top degree, keeping the chart order
  // within a degree.
  std::stable_sort(I.min_generators.begin(), I.min_generators.end(),
                   [](const Polynomial& a, const Polynomial& b) {
                     return a.degree() < b.degree();
                   });
  return I;
}

Subspace perp(const std::vector<Polynomial>& gens, int nvars, int bound) {
  require(bound >= 0, "perp: negative bound");
  DegreeChart chart(nvars, bound);
  Matrix stacked(0, chart.size());
  for (const Polynomial& g : gens) {
    require(g.nvars() == nvars, "perp: generator variable count mismatch");
    if (g.is_zero()) continue;
    stacked = Matrix::vstack(stacked, operator_matrix(g, chart, chart).transpose());
  }
  if (stacked.rows() == 0) return Subspace::full(chart.size());
  return Subspace::kernel_of(stacked);
}

Subspace ideal_span_upto(const std::vector<Polynomial>& gens, int nvars,
                         int bound) {
  DegreeChart chart(nvars, bound);
  Matrix rows(0, chart.size());
  for (const Polynomial& g : gens) {
    require(g.nvars() == nvars, "ideal span: generator variable count mismatch");
    if (g.is_zero()) continue;
    for (std::size_t j = 0; j < chart.size(); ++j) {
      if (chart.monomial(j).degree() + g.order() > bound) continue;
      Polynomial prod =
          (g * Polynomial::monomial(chart.monomial(j))).truncate_above(bound);
      if (!prod.is_zero()) rows.append_row(prod.coords(chart));
    }
  }
  Subspace s = Subspace::span(rows);
  return s.ambient() == chart.size() ? s : Subspace(chart.size());
}

std::vector<Subspace> leading_form_ideal(const ApolarIdeal& I) {
  std::vector<Subspace> out;
  out.reserve(I.bound + 1);
  for (int q = 0; q <= I.bound; ++q) {
    // Elements with no terms of degree < q, projected to their degree-q part.
    std::vector<bool> keep(I.chart.size(), false);
    for (std::size_t j = 0; j < I.chart.size(); ++j)
      if (I.chart.monomial(j).degree() >= q) keep[j] = true;
    Subspace high = I.truncated.coordinate_section(keep);
    std::vector<std::size_t> block(I.chart.degree_size(q));
    for (std::size_t j = 0; j < block.size(); ++j)
      block[j] = I.chart.degree_offset(q) + j;
    out.push_back(high.coordinate_project(block));
  }
  return out;
}

std::vector<Subspace> annihilator_of_top_forms(const InverseSystem& sys,
                                               int bound) {
  std::vector<Subspace> out;
  out.reserve(bound + 1);
  for (int q = 0; q <= bound; ++q) {
    DegreeChart sq(sys.nvars, q);
    const std::size_t block = sq.degree_size(q);
    const std::size_t off = sq.degree_offset(q);
    Matrix stacked(0, block);
    for (int j = 0; j <= sys.socle_degree; ++j) {
      const Subspace& tf = sys.top_forms[j];
      if (tf.dim() == 0 || j < q) continue;
      DegreeChart pj(sys.nvars, j), pout(sys.nvars, j - q);
      for (std::size_t w = 0; w < tf.dim(); ++w) {
        Polynomial wpoly(sys.nvars);
        for (std::size_t c = 0; c < tf.ambient(); ++c) {
          const Rational& v = tf.basis().at(w, c);
          if (!v.is_zero())
            wpoly.add_term(pj.monomial(pj.degree_offset(j) + c), v);
        }
        // Rows of sigma |-> sigma ∘ w over the degree-q dual monomials.
        Matrix rows(block, pout.size());
        for (std::size_t t = 0; t < block; ++t) {
          Polynomial img = contract(
              Polynomial::monomial(sq.monomial(off + t)), wpoly);
          for (const auto& [mon, c] : img.terms())
            rows.at(t, pout.index(mon)) = c;
        }
        stacked = Matrix::vstack(stacked, rows.transpose());
      }
    }
    if (stacked.rows() == 0)
      out.push_back(Subspace::full(block));
    else
      out.push_back(Subspace::kernel_of(stacked));
  }
  return out;
}

}  // namespace apolar
