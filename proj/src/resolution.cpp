#include "apolar/resolution.hpp"

#include <cstddef>
#include <vector>

#include "apolar/errors.hpp"
#include "apolar/matrix.hpp"
#include "apolar/subspace.hpp"

namespace apolar {

namespace {

// Rows of `space` whose pivot column is not a pivot column of `sub`.
// For sub contained in space the pivot sets nest, so these rows represent a
// basis of space/sub; with sub = m*space they are a minimal generating set.
std::vector<std::vector<Rational>> complement_rows(const Subspace& space,
                                                   const Subspace& sub) {
  std::vector<bool> taken(space.ambient(), false);
  for (std::size_t p : sub.pivots()) taken[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < space.dim(); ++i)
    if (!taken[space.pivots()[i]]) out.push_back(space.basis().row(i));
  require(out.size() == space.dim() - sub.dim(),
          "resolution: pivot sets of module and its radical layer do not nest");
  return out;
}

std::vector<Rational> matvec(const Matrix& m, const std::vector<Rational>& v,
                             std::size_t offset) {
  std::vector<Rational> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (v[offset + j].is_zero()) continue;
      acc += m.at(i, j) * v[offset + j];
    }
    out[i] = acc;
  }
  return out;
}

bool zero_slice(const std::vector<Rational>& v, std::size_t from,
                std::size_t len) {
  for (std::size_t j = 0; j < len; ++j)
    if (!v[from + j].is_zero()) return false;
  return true;
}

}  // namespace

std::vector<long> betti_numbers(const FiniteLocalAlgebra& A, int pmax) {
  if (pmax < 0) throw input_error("betti_numbers: pmax must be >= 0");
  const std::size_t d = static_cast<std::size_t>(A.dim());
  std::vector<long> beta{1};
  if (pmax == 0) return beta;

  // Minimal generators of the maximal ideal: a basis modulo its square.
  std::vector<std::vector<Rational>> gens =
      complement_rows(A.maximal_ideal(), A.ideal_power(2));
  beta.push_back(static_cast<long>(gens.size()));

  // Multiplication matrices of the ring variables, for forming m * kernel.
  std::vector<Matrix> varmat;
  varmat.reserve(A.nvars());
  for (int i = 0; i < A.nvars(); ++i)
    varmat.push_back(A.mult_matrix(A.var_image(i)));

  std::size_t c = 1;  // rank of the free module the generators live in
  for (int p = 2; p <= pmax; ++p) {
    const std::size_t r = gens.size();
    if (r == 0) {
      beta.push_back(0);
      continue;
    }

    // The map A^r -> A^c sending e_t to gens[t], as a matrix over the field:
    // block (b, t) is multiplication by component b of generator t.
    Matrix phi(c * d, r * d);
    for (std::size_t t = 0; t < r; ++t) {
      for (std::size_t b = 0; b < c; ++b) {
        if (zero_slice(gens[t], b * d, d)) continue;
        std::vector<Rational> comp(gens[t].begin() + b * d,
                                   gens[t].begin() + (b + 1) * d);
        Matrix mb = A.mult_matrix(comp);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            phi.at(b * d + i, t * d + j) = mb.at(i, j);
      }
    }

    // Syzygies of the generators, then their own minimal generators.
    Subspace K = Subspace::kernel_of(phi);
    std::vector<std::vector<Rational>> scaled;
    scaled.reserve(K.dim() * A.nvars());
    for (std::size_t v = 0; v < K.dim(); ++v) {
      std::vector<Rational> row = K.basis().row(v);
      for (int i = 0; i < A.nvars(); ++i) {
        std::vector<Rational> prod;
        prod.reserve(r * d);
        for (std::size_t t = 0; t < r; ++t) {
          std::vector<Rational> block = matvec(varmat[i], row, t * d);
          prod.insert(prod.end(), block.begin(), block.end());
        }
        scaled.push_back(std::move(prod));
      }
    }
    Subspace mK = Subspace::span(r * d, scaled);
    beta.push_back(static_cast<long>(K.dim() - mK.dim()));
    gens = complement_rows(K, mK);
    c = r;
  }
  return beta;
}

}  // namespace apolar
