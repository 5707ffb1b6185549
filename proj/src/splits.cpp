#include "apolar/splits.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

// Re-index the variables of p by adding `offset`, in a ring with new_n
// variables.
Polynomial shift_vars(const Polynomial& p, int offset, int new_n) {
  Polynomial out(new_n);
  for (const auto& [m, c] : p.terms()) {
    Monomial big = Monomial::one(new_n);
    for (int i = 0; i < m.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      require(i + offset < new_n, "shift_vars: index out of range");
      big.e[i + offset] = m.e[i];
    }
    out.add_term(big, c);
  }
  return out;
}

// Restrict p, supported on variables offset..offset+k-1, to a k-variable ring.
Polynomial compress_vars(const Polynomial& p, int offset, int k) {
  Polynomial out(k);
  for (const auto& [m, c] : p.terms()) {
    Monomial small = Monomial::one(k);
    for (int i = 0; i < m.nvars(); ++i) {
      if (m.e[i] == 0) continue;
      require(i >= offset && i < offset + k,
              "compress_vars: term outside the variable block");
      small.e[i - offset] = m.e[i];
    }
    out.add_term(small, c);
  }
  return out;
}

void certify(SplitCheck& chk, int nvars, int bound) {
  ApolarIdeal direct = annihilator(chk.F);
  Subspace rhs = ideal_span_upto(chk.generators, nvars, bound);
  chk.equal = (rhs == direct.truncated);
  if (!chk.equal) {
    for (int q = 0; q <= bound && chk.first_mismatch < 0; ++q) {
      std::vector<bool> keep(direct.chart.size(), false);
      for (std::size_t j = 0; j < direct.chart.size(); ++j)
        if (direct.chart.monomial(j).degree() <= q) keep[j] = true;
      if (rhs.coordinate_section(keep) != direct.truncated.coordinate_section(keep))
        chk.first_mismatch = q;
    }
  }
}

}  // namespace

Polynomial contraction_witness(const Polynomial& G) {
  if (G.is_zero()) throw input_error("contraction witness: zero polynomial");
  Polynomial top = G.homogeneous_component(G.degree());
  const auto& [alpha, c] = *top.terms().begin();
  Int fact = 1;
  for (int e : alpha.e) fact *= factorial(e);
  return Polynomial::monomial(alpha, Rational(Int(1), fact) / c);
}

SplitCheck split_annihilator(const Polynomial& G, const Polynomial& H) {
  if (G.is_zero() || G.order() < 2)
    throw input_error("split: G must be nonzero with all terms of degree >= 2");
  if (H.is_zero() || H.order() < 2)
    throw input_error("split: H must be nonzero with all terms of degree >= 2");
  const int m = G.nvars();
  const int n = std::max(m, H.nvars());
  for (const auto& [mon, c] : H.terms())
    for (int i = 0; i < std::min(m, mon.nvars()); ++i)
      if (mon.e[i] != 0)
        throw input_error(
            "split: H must use only variables beyond G's block (index > " +
            std::to_string(m) + ")");
  require(H.nvars() > m, "split: H has no variables beyond G's block");

  SplitCheck chk;
  chk.F = G.extend_vars(n) + H.extend_vars(n);
  // Blockwise annihilators, computed in their own blocks.
  for (const Polynomial& g : annihilator(G).min_generators)
    chk.generators.push_back(g.extend_vars(n));
  Polynomial Hc = compress_vars(H, m, n - m);
  for (const Polynomial& g : annihilator(Hc).min_generators)
    chk.generators.push_back(shift_vars(g, m, n));
  // Witness difference and the mixed products.
  chk.sigma_g = contraction_witness(G).extend_vars(n);
  chk.sigma_h = shift_vars(contraction_witness(Hc), m, n);
  chk.generators.push_back(chk.sigma_g - chk.sigma_h);
  for (int i = 0; i < m; ++i)
    for (int j = m; j < n; ++j)
      chk.generators.push_back(Polynomial::variable(n, i) *
                               Polynomial::variable(n, j));
  certify(chk, n, chk.F.degree() + 1);
  return chk;
}

SplitCheck split_quadrics(const Polynomial& G, int total_vars) {
  if (G.is_zero() || G.order() < 2)
    throw input_error("split: G must be nonzero with all terms of degree >= 2");
  const int m = G.nvars();
  const int n = total_vars;
  if (n <= m)
    throw input_error("split: need at least one extra square variable");

  SplitCheck chk;
  chk.F = G.extend_vars(n);
  for (int j = m; j < n; ++j)
    chk.F += Polynomial::variable(n, j, 2);
  for (const Polynomial& g : annihilator(G).min_generators)
    chk.generators.push_back(g.extend_vars(n));
  chk.sigma_g = contraction_witness(G).extend_vars(n);
  for (int j = m; j < n; ++j)
    chk.generators.push_back(Polynomial::variable(n, j, 2) -
                             chk.sigma_g * Rational(2L));
  for (int j = m; j < n; ++j)
    for (int i = 0; i < j; ++i)
      chk.generators.push_back(Polynomial::variable(n, i) *
                               Polynomial::variable(n, j));
  certify(chk, n, chk.F.degree() + 1);
  return chk;
}

}  // namespace apolar
