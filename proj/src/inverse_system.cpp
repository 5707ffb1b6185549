#include "apolar/inverse_system.hpp"

#include "apolar/contraction.hpp"
#include "apolar/errors.hpp"

namespace apolar {

InverseSystem derivative_module(const Polynomial& F) {
  if (F.is_zero()) throw input_error("inverse system: F must be nonzero");
  const int n = F.nvars();
  const int s = F.degree();
  InverseSystem sys{F, n, s, DegreeChart(n, s), Subspace(), {}, {}};

  // Span of all contractions x^a ∘ F, |a| <= s.  (Higher degrees kill F.)
  Matrix rows(0, sys.chart.size());
  DegreeChart dual(n, s);
  for (std::size_t i = 0; i < dual.size(); ++i) {
    Polynomial img = contract(Polynomial::monomial(dual.monomial(i)), F);
    if (!img.is_zero()) rows.append_row(img.coords(sys.chart));
  }
  sys.module = Subspace::span(rows);

  // Degree filtration: top_forms[q] = top parts of elements of degree <= q.
  sys.top_forms.reserve(s + 1);
  sys.hilbert.reserve(s + 1);
  std::vector<bool> keep(sys.chart.size(), false);
  for (int q = 0; q <= s; ++q) {
    for (std::size_t j = sys.chart.degree_offset(q);
         j < sys.chart.degree_offset(q + 1); ++j)
      keep[j] = true;
    Subspace upto_q = sys.module.coordinate_section(keep);
    std::vector<std::size_t> block(sys.chart.degree_size(q));
    for (std::size_t j = 0; j < block.size(); ++j)
      block[j] = sys.chart.degree_offset(q) + j;
    sys.top_forms.push_back(upto_q.coordinate_project(block));
    sys.hilbert.push_back(static_cast<int>(sys.top_forms.back().dim()));
  }
  return sys;
}

std::vector<int> hilbert_function(const Polynomial& F) {
  return derivative_module(F).hilbert;
}

int socle_degree(const Polynomial& F) {
  if (F.is_zero()) throw input_error("socle degree: F must be nonzero");
  return F.degree();
}

int capital_degree(const std::vector<int>& hilbert) {
  int c = 0;
  for (std::size_t q = 0; q < hilbert.size(); ++q)
    if (hilbert[q] > 1) c = static_cast<int>(q);
  return c;
}

int capital_degree(const Polynomial& F) {
  return capital_degree(hilbert_function(F));
}

bool is_stretched(const Polynomial& F) { return capital_degree(F) <= 1; }

bool is_nondegenerate(const Polynomial& F) {
  std::vector<int> h = hilbert_function(F);
  return h.size() > 1 && h[1] == F.nvars();
}

}  // namespace apolar
