#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "apolar/apolar_ideal.hpp"
#include "apolar/contraction.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/parse.hpp"
#include "apolar/random_inputs.hpp"
#include "apolar/splits.hpp"

using namespace apolar;

namespace {

bool annihilates(const Polynomial& g, const Polynomial& f) {
  return contract(g, f).is_zero();
}

// The two generator lists generate the same ideal up to the given degree.
bool same_ideal(const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b, int nvars, int bound) {
  return ideal_span_upto(a, nvars, bound) == ideal_span_upto(b, nvars, bound);
}

}  // namespace

TEST_CASE("contraction on monomials") {
  Polynomial F = parse_polynomial("y1^3 + y2^2");
  CHECK(contract(parse_polynomial("y1", 2), F) ==
        parse_polynomial("3*y1^2", 2));
  CHECK(contract(parse_polynomial("y2", 2), F) == parse_polynomial("2*y2", 2));
  CHECK(contract(parse_polynomial("y1*y2", 2), F).is_zero());
  CHECK(contract(parse_polynomial("y1^2", 2), F) == parse_polynomial("6*y1", 2));
  // x^a ∘ y^a = a!
  Polynomial m = parse_polynomial("y1^2*y2^3");
  Polynomial c = contract(m, m);
  CHECK(c.degree() == 0);
  CHECK(c.coeff(Monomial::one(2)) == Rational(12L));
}

TEST_CASE("contraction composes multiplicatively") {
  Rng rng(31u);
  for (int t = 0; t < 12; ++t) {
    int n = 1 + static_cast<int>(rng.next(3));
    Polynomial f = random_socle_generator(rng, n, 4);
    Polynomial g = random_homogeneous(rng, n, 1 + static_cast<int>(rng.next(2)));
    Polynomial h = random_homogeneous(rng, n, 1 + static_cast<int>(rng.next(2)));
    CHECK(contract(g, contract(h, f)) == contract(g * h, f));
    CHECK(contract(g + h, f) == contract(g, f) + contract(h, f));
  }
}

TEST_CASE("derivative module of y1^3 + y2^2") {
  Polynomial F = parse_polynomial("y1^3 + y2^2");
  InverseSystem sys = derivative_module(F);
  CHECK(sys.dim() == 5);
  CHECK(sys.hilbert == std::vector<int>{1, 2, 1, 1});
  // The module is spanned by F, y1^2, y2, y1, 1.
  DegreeChart chart(2, 3);
  CHECK(sys.module.contains(F.coords(chart)));
  CHECK(sys.module.contains(parse_polynomial("y1^2", 2).coords(chart)));
  CHECK(sys.module.contains(parse_polynomial("y2", 2).coords(chart)));
  CHECK(sys.module.contains(parse_polynomial("y1", 2).coords(chart)));
  CHECK(!sys.module.contains(parse_polynomial("y2^2", 2).coords(chart)));
}

TEST_CASE("inverse system is closed under contraction") {
  Rng rng(77u);
  for (int t = 0; t < 6; ++t) {
    int n = 2 + static_cast<int>(rng.next(2));
    Polynomial F = random_socle_generator(rng, n, 3 + static_cast<int>(rng.next(2)));
    InverseSystem sys = derivative_module(F);
    for (std::size_t r = 0; r < sys.module.dim(); ++r) {
      Polynomial el = Polynomial::from_coords(sys.chart, sys.module.basis().row(r));
      for (int i = 0; i < n; ++i) {
        Polynomial de = contract(Polynomial::variable(n, i), el);
        if (de.is_zero()) continue;
        CHECK(sys.module.contains(de.coords(sys.chart)));
      }
    }
  }
}

TEST_CASE("frozen Hilbert functions") {
  CHECK(hilbert_function(parse_polynomial("y1^3 + y2^2 + y3^2")) ==
        std::vector<int>{1, 3, 1, 1});
  CHECK(hilbert_function(parse_polynomial("y1^4 + y2^2")) ==
        std::vector<int>{1, 2, 1, 1, 1});
  CHECK(hilbert_function(parse_polynomial("y1^3 + y2^3")) ==
        std::vector<int>{1, 2, 2, 1});
  CHECK(hilbert_function(parse_polynomial("y1^2 + y2^2")) ==
        std::vector<int>{1, 2, 1});
}

TEST_CASE("degree invariants") {
  CHECK(socle_degree(parse_polynomial("y1^3 + y2^2")) == 3);
  CHECK(capital_degree(parse_polynomial("y1^3 + y2^2")) == 1);
  CHECK(capital_degree(parse_polynomial("y1^3 + y2^3")) == 2);
  // One variable cubic: H = (1,1,1,1), no value above 1.
  CHECK(capital_degree(parse_polynomial("y1^3")) == 0);
  CHECK(is_stretched(parse_polynomial("y1^4 + y2^2")));
  CHECK(!is_stretched(parse_polynomial("y1^3 + y2^3")));
  CHECK(is_nondegenerate(parse_polynomial("y1^3 + y2^2")));
  CHECK(!is_nondegenerate(parse_polynomial("y1^3", 2)));
}

TEST_CASE("annihilator of y1^3 + y2^2") {
  Polynomial F = parse_polynomial("y1^3 + y2^2");
  ApolarIdeal I = annihilator(F);
  CHECK(I.socle_degree == 3);
  CHECK(I.bound == 4);
  // dim S_{<=4} - dim A = 15 - 5 = 10.
  CHECK(I.truncated.dim() == 10);
  REQUIRE(I.min_generators.size() == 2);
  CHECK(I.min_generators[0] == parse_polynomial("y1*y2"));
  CHECK(I.min_generators[1] == parse_polynomial("y2^2 - 1/3*y1^3"));
  for (const Polynomial& g : I.min_generators) CHECK(annihilates(g, F));
  // Same ideal as the reference presentation (x1*x2, x1^3 - 3*x2^2).
  CHECK(same_ideal(I.min_generators,
                   {parse_polynomial("y1*y2"), parse_polynomial("y1^3 - 3*y2^2")},
                   2, 4));
}

TEST_CASE("annihilator of y1^2 + y2^2") {
  Polynomial F = parse_polynomial("y1^2 + y2^2");
  ApolarIdeal I = annihilator(F);
  CHECK(derivative_module(F).dim() == 4);
  REQUIRE(I.min_generators.size() == 2);
  CHECK(same_ideal(I.min_generators,
                   {parse_polynomial("y1*y2"), parse_polynomial("y1^2 - y2^2")},
                   2, 3));
  for (const Polynomial& g : I.min_generators) CHECK(annihilates(g, F));
}

TEST_CASE("perp frozen values") {
  Subspace p1 = perp({parse_polynomial("y1^2", 2), parse_polynomial("y2", 2)}, 2, 3);
  CHECK(p1.dim() == 2);
  DegreeChart chart(2, 3);
  CHECK(p1.contains(Polynomial::variable(2, 0).coords(chart)));  // y1
  Polynomial one(2);
  one.add_term(Monomial::one(2), Rational(1L));
  CHECK(p1.contains(one.coords(chart)));

  Subspace p2 = perp({parse_polynomial("y1*y2"), parse_polynomial("y1^2 - y2^2")},
                     2, 2);
  CHECK(p2.dim() == 4);
  DegreeChart c2(2, 2);
  CHECK(p2.contains(parse_polynomial("y1^2 + y2^2").coords(c2)));
  CHECK(!p2.contains(parse_polynomial("y1^2 - y2^2").coords(c2)));
}

TEST_CASE("macaulay round trip on small examples") {
  Rng rng(2026u);
  for (int t = 0; t < 8; ++t) {
    int n = 1 + static_cast<int>(rng.next(3));
    int s = 2 + static_cast<int>(rng.next(3));
    Polynomial F = random_socle_generator(rng, n, s);
    InverseSystem sys = derivative_module(F);
    ApolarIdeal I = annihilator(F);
    Subspace back = perp(I.min_generators, n, sys.socle_degree);
    CHECK(back == sys.module);
  }
}

TEST_CASE("leading forms of the annihilator match the top-form annihilator") {
  Rng rng(404u);
  for (int t = 0; t < 6; ++t) {
    int n = 1 + static_cast<int>(rng.next(3));
    int s = 2 + static_cast<int>(rng.next(3));
    Polynomial F = random_socle_generator(rng, n, s);
    InverseSystem sys = derivative_module(F);
    ApolarIdeal I = annihilator(F);
    std::vector<Subspace> lhs = leading_form_ideal(I);
    std::vector<Subspace> rhs = annihilator_of_top_forms(sys, I.bound);
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t q = 0; q < lhs.size(); ++q) CHECK(lhs[q] == rhs[q]);
    // Graded Hilbert identity: H(q) = dim S_q - dim (leading forms)_q.
    for (int q = 0; q <= sys.socle_degree; ++q)
      CHECK(sys.hilbert[q] ==
            dim_exact(n, q) - static_cast<long>(lhs[q].dim()));
  }
}

TEST_CASE("contraction witness") {
  CHECK(contraction_witness(parse_polynomial("y1^3")) ==
        parse_polynomial("1/6*y1^3"));
  CHECK(contraction_witness(parse_polynomial("y2^2")) ==
        parse_polynomial("1/2*y2^2"));
  Rng rng(12u);
  for (int t = 0; t < 10; ++t) {
    int n = 1 + static_cast<int>(rng.next(3));
    Polynomial G = random_socle_generator(rng, n, 2 + static_cast<int>(rng.next(3)));
    Polynomial sigma = contraction_witness(G);
    Polynomial r = contract(sigma, G);
    CHECK(r.degree() == 0);
    CHECK(r.coeff(Monomial::one(n)) == Rational(1L));
  }
}

TEST_CASE("split of y1^3 + y2^2 matches the direct annihilator") {
  SplitCheck chk = split_annihilator(parse_polynomial("y1^3"),
                                     parse_polynomial("y2^2"));
  CHECK(chk.equal);
  CHECK(chk.first_mismatch == -1);
  CHECK(chk.sigma_g == parse_polynomial("1/6*y1^3", 2));
  CHECK(chk.sigma_h == parse_polynomial("1/2*y2^2"));
  CHECK(chk.F == parse_polynomial("y1^3 + y2^2"));
}

TEST_CASE("split with quadric tail") {
  SplitCheck chk = split_quadrics(parse_polynomial("y1^3"), 3);
  CHECK(chk.equal);
  CHECK(chk.F == parse_polynomial("y1^3 + y2^2 + y3^2"));
  CHECK(hilbert_function(chk.F) == std::vector<int>{1, 3, 1, 1});
  // x2^2 - 2*sigma with sigma = x1^3/6.
  bool found = false;
  for (const Polynomial& g : chk.generators)
    if (g == parse_polynomial("y2^2 - 1/3*y1^3", 3)) found = true;
  CHECK(found);
}

TEST_CASE("split rejects bad blocks") {
  CHECK_THROWS_AS(split_annihilator(parse_polynomial("y1^3"),
                                    parse_polynomial("y1^2")),
                  input_error);
  CHECK_THROWS_AS(split_annihilator(parse_polynomial("y1^3"),
                                    parse_polynomial("y2", 2)),
                  input_error);
  CHECK_THROWS_AS(split_quadrics(parse_polynomial("y1^3"), 1), input_error);
}

TEST_CASE("random splits certify") {
  Rng rng(9090u);
  for (int t = 0; t < 6; ++t) {
    int m = 1 + static_cast<int>(rng.next(2));
    int extra = 1 + static_cast<int>(rng.next(2));
    Polynomial G = random_socle_generator(rng, m, 2 + static_cast<int>(rng.next(2)));
    Polynomial H0 = random_socle_generator(rng, extra, 2 + static_cast<int>(rng.next(2)));
    // Move H into the variable block after G's.
    Polynomial H(m + extra);
    for (const auto& [mon, c] : H0.terms()) {
      Monomial big = Monomial::one(m + extra);
      for (int i = 0; i < extra; ++i) big.e[m + i] = mon.e[i];
      H.add_term(big, c);
    }
    SplitCheck chk = split_annihilator(G, H);
    CHECK(chk.equal);
    SplitCheck qchk = split_quadrics(G, m + 1 + static_cast<int>(rng.next(2)));
    CHECK(qchk.equal);
  }
}
