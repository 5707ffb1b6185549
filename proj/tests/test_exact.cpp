#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "apolar/matrix.hpp"
#include "apolar/rational.hpp"
#include "apolar/rref.hpp"
#include "apolar/subspace.hpp"

using namespace apolar;

namespace {

// Deterministic random matrix with small rational entries and plenty of
// zeros (the shape our elimination actually sees).
Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint64_t pick = rng() % 10;
      if (pick < 4) continue;  // leave zero
      long num = static_cast<long>(rng() % 13) - 6;
      long den = (rng() % 4 == 0) ? static_cast<long>(rng() % 3) + 2 : 1;
      m.at(i, j) = Rational(Int(num), Int(den));
    }
  return m;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> v(n);
  for (auto& e : v) e = Rational(static_cast<long>(rng() % 9) - 4);
  return v;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(Rational(Int(2), Int(6)) == Rational(Int(1), Int(3)));
  CHECK(Rational(Int(2), Int(6)).num() == 1);
  CHECK(Rational(Int(2), Int(6)).den() == 3);
  CHECK(Rational(Int(1), Int(-2)).den() == 2);
  CHECK(Rational(Int(1), Int(-2)).str() == "-1/2");
  CHECK(Rational(Int(-4), Int(-2)).str() == "2");
  CHECK(Rational(0L).is_zero());
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), invariant_error);
}

TEST_CASE("rational arithmetic") {
  Rational a(Int(1), Int(2)), b(Int(1), Int(3));
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(a > b);
  Rational z;
  CHECK_THROWS_AS(a / z, invariant_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("-7/14").str() == "-1/2");
  CHECK(Rational::parse("+3/9").str() == "1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), input_error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), input_error);
  CHECK_THROWS_AS(Rational::parse("a"), input_error);
  CHECK_THROWS_AS(Rational::parse(""), input_error);
  CHECK_THROWS_AS(Rational::parse("1/"), input_error);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(3, 2) == 3);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(50, 25) == Int("126410606437752"));
}

TEST_CASE("matrix basics") {
  Matrix id = Matrix::identity(3);
  CHECK(id.at(1, 1) == Rational(1L));
  CHECK(id.at(0, 1).is_zero());
  Matrix m(2, 2);
  m.append_row({Rational(5L), Rational(6L)});
  CHECK(m.rows() == 3);
  CHECK(m.at(2, 1) == Rational(6L));
  Matrix v = Matrix::vstack(Matrix::identity(2), Matrix(1, 2));
  CHECK(v.rows() == 3);
  CHECK_THROWS_AS(Matrix::vstack(Matrix::identity(2), Matrix::identity(3)),
                  invariant_error);
}

TEST_CASE("matrix product and transpose") {
  Matrix m = Matrix::from_rows({{Rational(1L), Rational(2L)},
                                {Rational(3L), Rational(4L)}});
  Matrix t = m.transpose();
  CHECK(t.at(0, 1) == Rational(3L));
  Matrix p = m * t;
  CHECK(p.at(0, 0) == Rational(5L));
  CHECK(p.at(1, 0) == Rational(11L));
  CHECK(p.at(1, 1) == Rational(25L));
}

TEST_CASE("rref of known matrix") {
  // [[2,4],[1,2]] has rank 1, RREF [[1,2]].
  Matrix m = Matrix::from_rows({{Rational(2L), Rational(4L)},
                                {Rational(1L), Rational(2L)}});
  EchelonResult e = rref(m);
  CHECK(e.rank() == 1);
  CHECK(e.r.at(0, 0) == Rational(1L));
  CHECK(e.r.at(0, 1) == Rational(2L));
}

TEST_CASE("kernel of known matrix") {
  Matrix m = Matrix::from_rows({{Rational(1L), Rational(1L)}});
  Matrix k = kernel_basis(m);
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == Rational(1L));
  CHECK(k.at(0, 1) == Rational(-1L));
}

TEST_CASE("parallel rref agrees with serial reference on random matrices") {
  std::mt19937_64 rng(20260819u);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    Matrix m = random_matrix(rng, rows, cols);
    EchelonResult fast = rref(m);
    EchelonResult ref = rref_reference(m);
    CHECK(fast.pivots == ref.pivots);
    CHECK(fast.r == ref.r);
    // echelon() has the same row space and pivots.
    EchelonResult ech = echelon(m);
    CHECK(ech.pivots == ref.pivots);
    // RREF is idempotent.
    EchelonResult again = rref(fast.r);
    CHECK(again.r == fast.r);
  }
}

TEST_CASE("kernel rows annihilate the matrix") {
  std::mt19937_64 rng(7u);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 10;
    Matrix m = random_matrix(rng, rows, cols);
    Matrix k = kernel_basis(m);
    CHECK(k.rows() == cols - rank(m));
    for (std::size_t i = 0; i < k.rows(); ++i) {
      Matrix prod = m * Matrix::from_rows({k.row(i)}).transpose();
      for (std::size_t r = 0; r < prod.rows(); ++r)
        CHECK(prod.at(r, 0).is_zero());
    }
  }
}

TEST_CASE("subspace span canonicalization") {
  // Two generating sets of the same plane give identical bases.
  Subspace a = Subspace::span(2, {{Rational(1L), Rational(1L)},
                                  {Rational(2L), Rational(2L)}});
  Subspace b = Subspace::span(2, {{Rational(3L), Rational(3L)}});
  CHECK(a == b);
  CHECK(a.dim() == 1);
  CHECK(Subspace::full(3).dim() == 3);
  CHECK(Subspace(4).dim() == 0);
}

TEST_CASE("subspace membership and reduce") {
  Subspace s = Subspace::span(3, {{Rational(1L), Rational(0L), Rational(1L)},
                                  {Rational(0L), Rational(1L), Rational(1L)}});
  CHECK(s.contains({Rational(1L), Rational(1L), Rational(2L)}));
  CHECK(!s.contains({Rational(0L), Rational(0L), Rational(1L)}));
  CHECK(is_zero_vector(s.reduce({Rational(2L), Rational(-1L), Rational(1L)})));
}

TEST_CASE("sum and intersection dimension formula") {
  std::mt19937_64 rng(99u);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + rng() % 6;
    Subspace u = Subspace::span(random_matrix(rng, 1 + rng() % 4, n));
    Subspace w = Subspace::span(random_matrix(rng, 1 + rng() % 4, n));
    Subspace s = u + w;
    Subspace i = Subspace::intersect(u, w);
    CHECK(s.dim() + i.dim() == u.dim() + w.dim());
    CHECK(s.contains(u));
    CHECK(s.contains(w));
    CHECK(u.contains(i));
    CHECK(w.contains(i));
    CHECK(s.quotient_dim(u) == s.dim() - u.dim());
  }
}

TEST_CASE("kernel_of as subspace") {
  std::mt19937_64 rng(4242u);
  Matrix m = random_matrix(rng, 4, 7);
  Subspace k = Subspace::kernel_of(m);
  CHECK(k.ambient() == 7);
  CHECK(k.dim() == 7 - rank(m));
  for (std::size_t i = 0; i < k.dim(); ++i) {
    Matrix prod = m * Matrix::from_rows({k.basis().row(i)}).transpose();
    for (std::size_t r = 0; r < prod.rows(); ++r)
      CHECK(prod.at(r, 0).is_zero());
  }
}

TEST_CASE("coordinate section and projection") {
  // Plane {(a, b, a+b)}; section with coordinate 2 dropped is the line b = -a.
  Subspace s = Subspace::span(3, {{Rational(1L), Rational(0L), Rational(1L)},
                                  {Rational(0L), Rational(1L), Rational(1L)}});
  Subspace sec = s.coordinate_section({true, true, false});
  CHECK(sec.dim() == 1);
  CHECK(sec.contains({Rational(1L), Rational(-1L), Rational(0L)}));
  Subspace proj = s.coordinate_project({0, 1});
  CHECK(proj.ambient() == 2);
  CHECK(proj.dim() == 2);
  // Projection of the section drops the zeroed coordinate faithfully.
  Subspace secproj = sec.coordinate_project({0, 1});
  CHECK(secproj.dim() == 1);
}

TEST_CASE("quotient_dim checks containment") {
  Subspace u = Subspace::span(2, {{Rational(1L), Rational(0L)}});
  Subspace w = Subspace::span(2, {{Rational(0L), Rational(1L)}});
  CHECK_THROWS_AS(u.quotient_dim(w), invariant_error);
}

TEST_CASE("reduce against subspace is linear over random vectors") {
  std::mt19937_64 rng(55u);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 3 + rng() % 5;
    Subspace s = Subspace::span(random_matrix(rng, 2, n));
    std::vector<Rational> v = random_vector(rng, n);
    std::vector<Rational> w = random_vector(rng, n);
    std::vector<Rational> sum(n);
    for (std::size_t j = 0; j < n; ++j) sum[j] = v[j] + w[j];
    std::vector<Rational> rv = s.reduce(v), rw = s.reduce(w), rs = s.reduce(sum);
    for (std::size_t j = 0; j < n; ++j) CHECK(rs[j] == rv[j] + rw[j]);
  }
}
