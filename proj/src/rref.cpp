#include "apolar/rref.hpp"

#include <utility>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

using ZRow = std::vector<mpz_class>;

std::size_t bit_length(const mpz_class& z) {
  return mpz_sizeinbase(z.get_mpz_t(), 2);
}

// Divide a row by the gcd of its entries and flip signs so the leading
// nonzero entry is positive.  No-op on zero rows.
void normalize_int_row(ZRow& row) {
  int lead = 0;
  mpz_class g = 0;
  for (const mpz_class& e : row) {
    if (sgn(e) == 0) continue;
    if (lead == 0) lead = sgn(e);
    if (g != 1) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 1 && lead != 0) break;
  }
  if (lead == 0) return;
  if (lead < 0) g = -g;
  if (g != 1)
    for (mpz_class& e : row) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

// Clear denominators: returns the row scaled to a primitive integer vector
// (positive leading entry).  Row scaling does not change the row space.
ZRow integer_row(const Matrix& m, std::size_t i) {
  mpz_class l = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int d = m.at(i, j).den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  ZRow row(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Rational& q = m.at(i, j);
    mpz_class scale;
    mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
    row[j] = q.num() * scale;
  }
  normalize_int_row(row);
  return row;
}

// Fraction-free forward elimination (one-step Bareiss updates), returning
// the integer echelon rows and pivot columns.  Pivot choice: smallest bit
// length, then lowest row index — deterministic and independent of the
// OpenMP schedule, since each row update only reads the shared pivot row.
std::pair<std::vector<ZRow>, std::vector<std::size_t>> forward_eliminate(
    const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<ZRow> z(nr);
  for (std::size_t i = 0; i < nr; ++i) z[i] = integer_row(m, i);

  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t done = 0;
  for (std::size_t c = 0; c < nc && done < nr; ++c) {
    std::size_t best = nr;
    std::size_t best_bits = 0;
    for (std::size_t r = done; r < nr; ++r) {
      if (sgn(z[r][c]) == 0) continue;
      std::size_t b = bit_length(z[r][c]);
      if (best == nr || b < best_bits) { best = r; best_bits = b; }
    }
    if (best == nr) continue;
    std::swap(z[done], z[best]);
    const ZRow& prow = z[done];
    const mpz_class& pv = prow[c];

#pragma omp parallel for schedule(dynamic)
    for (long i = static_cast<long>(done) + 1; i < static_cast<long>(nr); ++i) {
      ZRow& row = z[i];
      mpz_class t;
      const mpz_class mult = row[c];
      if (sgn(mult) == 0) {
        // Bareiss still rescales untouched rows: entry -> entry * pv / prev.
        for (std::size_t j = c; j < nc; ++j) {
          if (sgn(row[j]) == 0) continue;
          mpz_mul(t.get_mpz_t(), row[j].get_mpz_t(), pv.get_mpz_t());
          mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
      } else {
        for (std::size_t j = c + 1; j < nc; ++j) {
          mpz_mul(t.get_mpz_t(), row[j].get_mpz_t(), pv.get_mpz_t());
          mpz_submul(t.get_mpz_t(), mult.get_mpz_t(), prow[j].get_mpz_t());
          mpz_divexact(row[j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        row[c] = 0;
      }
    }
    prev = pv;
    pivots.push_back(c);
    ++done;
  }
  z.resize(done);
  return {std::move(z), std::move(pivots)};
}

}  // namespace

EchelonResult echelon(const Matrix& m) {
  auto [z, pivots] = forward_eliminate(m);
  EchelonResult out;
  out.pivots = pivots;
  Matrix r(z.size(), m.cols());
  for (std::size_t i = 0; i < z.size(); ++i) {
    normalize_int_row(z[i]);
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(z[i][j]) != 0) r.at(i, j) = Rational(Int(z[i][j]));
  }
  out.r = std::move(r);
  return out;
}

EchelonResult rref(const Matrix& m) {
  auto [z, pivots] = forward_eliminate(m);
  const std::size_t rank = z.size(), nc = m.cols();
  // Normalize pivots to 1, then clear above each pivot, bottom-up.  The
  // bottom-up order guarantees every pivot row is fully reduced before use.
  Matrix r(rank, nc);
  for (std::size_t i = 0; i < rank; ++i) {
    Rational pv{Int(z[i][pivots[i]])};
    for (std::size_t j = pivots[i]; j < nc; ++j)
      if (sgn(z[i][j]) != 0) r.at(i, j) = Rational(Int(z[i][j])) / pv;
  }
  for (std::size_t ri = rank; ri-- > 0;) {
    const std::size_t pc = pivots[ri];
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(ri); ++i) {
      Rational f = r.at(i, pc);
      if (f.is_zero()) continue;
      r.at(i, pc) = Rational();
      for (std::size_t j = pc + 1; j < nc; ++j) {
        const Rational& e = r.at(ri, j);
        if (!e.is_zero()) r.at(i, j) -= f * e;
      }
    }
  }
  EchelonResult out;
  out.r = std::move(r);
  out.pivots = std::move(pivots);
  return out;
}

EchelonResult rref_reference(const Matrix& m) {
  Matrix w = m;
  const std::size_t nr = w.rows(), nc = w.cols();
  std::vector<std::size_t> pivots;
  std::size_t done = 0;
  for (std::size_t c = 0; c < nc && done < nr; ++c) {
    std::size_t pr = nr;
    for (std::size_t i = done; i < nr; ++i)
      if (!w.at(i, c).is_zero()) { pr = i; break; }
    if (pr == nr) continue;
    if (pr != done)
      for (std::size_t j = 0; j < nc; ++j) std::swap(w.at(pr, j), w.at(done, j));
    Rational pv = w.at(done, c);
    for (std::size_t j = c; j < nc; ++j) w.at(done, j) /= pv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == done) continue;
      Rational f = w.at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < nc; ++j) w.at(i, j) -= f * w.at(done, j);
    }
    pivots.push_back(c);
    ++done;
  }
  EchelonResult out;
  Matrix r(done, nc);
  for (std::size_t i = 0; i < done; ++i)
    for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = w.at(i, j);
  out.r = std::move(r);
  out.pivots = std::move(pivots);
  return out;
}

std::size_t rank(const Matrix& m) { return echelon(m).rank(); }

Matrix kernel_from_echelon(const EchelonResult& e, std::size_t cols) {
  const std::size_t rk = e.rank();
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pi < rk && e.pivots[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  Matrix k(free_cols.size(), cols);
#pragma omp parallel for schedule(dynamic)
  for (long fi = 0; fi < static_cast<long>(free_cols.size()); ++fi) {
    const std::size_t f = free_cols[fi];
    // Solve for the pivot coordinates by back-substitution with this free
    // coordinate set to 1 and all other free coordinates 0.
    std::vector<Rational> v(rk);  // v[t] = value at pivot column t
    for (std::size_t r = rk; r-- > 0;) {
      Rational s;
      if (f >= e.pivots[r]) s += e.r.at(r, f);
      for (std::size_t t = r + 1; t < rk; ++t) {
        if (v[t].is_zero()) continue;
        const Rational& c = e.r.at(r, e.pivots[t]);
        if (!c.is_zero()) s += c * v[t];
      }
      if (!s.is_zero()) v[r] = -s / e.r.at(r, e.pivots[r]);
    }
    k.at(fi, f) = 1;
    for (std::size_t t = 0; t < rk; ++t)
      if (!v[t].is_zero()) k.at(fi, e.pivots[t]) = v[t];
  }
  return k;
}

Matrix kernel_basis(const Matrix& m) {
  if (m.cols() == 0) return Matrix(0, 0);
  EchelonResult e = echelon(m);
  Matrix k = kernel_from_echelon(e, m.cols());
  return rref(k).r;
}

RowSolver::RowSolver(const Matrix& v) : nrows_(v.rows()), ncols_(v.cols()) {
  Matrix aug(nrows_, ncols_ + nrows_);
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t j = 0; j < ncols_; ++j) aug.at(i, j) = v.at(i, j);
    aug.at(i, ncols_ + i) = 1;
  }
  EchelonResult e = rref(aug);
  require(e.rank() == nrows_, "row solver: rows are dependent");
  // All pivots must land in the original columns.
  for (std::size_t p : e.pivots)
    require(p < ncols_, "row solver: rows are dependent");
  reduced_ = std::move(e.r);
  pivots_ = std::move(e.pivots);
}

bool RowSolver::reduce_coeffs(const std::vector<Rational>& w,
                              std::vector<Rational>& coeffs) const {
  require(w.size() == ncols_, "row solver: vector length mismatch");
  std::vector<Rational> rem = w;
  coeffs.assign(nrows_, Rational());
  for (std::size_t k = 0; k < nrows_; ++k) {
    const Rational a = rem[pivots_[k]];
    if (a.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ncols_; ++j) {
      const Rational& r = reduced_.at(k, j);
      if (!r.is_zero()) rem[j] -= a * r;
    }
    // Accumulate a * T_k into the result.
    for (std::size_t t = 0; t < nrows_; ++t) {
      const Rational& u = reduced_.at(k, ncols_ + t);
      if (!u.is_zero()) coeffs[t] += a * u;
    }
  }
  for (const Rational& e : rem)
    if (!e.is_zero()) return false;
  return true;
}

std::vector<Rational> RowSolver::solve(const std::vector<Rational>& w) const {
  std::vector<Rational> c;
  require(reduce_coeffs(w, c), "row solver: vector outside the row space");
  return c;
}

bool RowSolver::in_row_space(const std::vector<Rational>& w) const {
  std::vector<Rational> c;
  return reduce_coeffs(w, c);
}

}  // namespace apolar
