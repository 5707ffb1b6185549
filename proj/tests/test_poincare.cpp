#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "apolar/apolar_ideal.hpp"
#include "apolar/classify.hpp"
#include "apolar/errors.hpp"
#include "apolar/inverse_system.hpp"
#include "apolar/parse.hpp"
#include "apolar/poincare.hpp"
#include "apolar/random_inputs.hpp"

using namespace apolar;

namespace {

TruncatedSeries ts(std::vector<long> c) {
  TruncatedSeries out;
  out.c.assign(c.begin(), c.end());
  return out;
}

}  // namespace

TEST_CASE("peeling unit squares off a socle generator") {
  // One cube plus two squares: base is the cube alone, in one variable.
  SplitReduction r = reduce_quadrics(parse_polynomial("y1^3 + y2^2 + y3^2"));
  REQUIRE(r.split);
  CHECK(r.G.str() == "y1^3");
  CHECK(r.G.nvars() == 1);
  CHECK(r.m == 1);
  CHECK(r.h == 2);

  // Two cubes plus one square.
  r = reduce_quadrics(parse_polynomial("y1^3 + y2^3 + y3^2"));
  REQUIRE(r.split);
  CHECK(r.G.str() == "y1^3 + y2^3");
  CHECK(r.m == 2);
  CHECK(r.h == 1);

  // Mixed degrees in the base are fine.
  r = reduce_quadrics(parse_polynomial("y1^4 + y2^3 + y3^2"));
  REQUIRE(r.split);
  CHECK(r.G.str() == "y1^4 + y2^3");
  CHECK(r.m == 2);
  CHECK(r.h == 1);

  // The order of the terms does not matter.
  r = reduce_quadrics(parse_polynomial("y2^2 + y1^4"));
  REQUIRE(r.split);
  CHECK(r.G.str() == "y1^4");
  CHECK(r.m == 1);
  CHECK(r.h == 1);
}

TEST_CASE("splits that must be rejected") {
  // No square at all.
  SplitReduction r = reduce_quadrics(parse_polynomial("y1^3 + y2^3"));
  CHECK(!r.split);
  CHECK(r.reason == "no tail variable occurs purely as a unit square");

  // A square with a non-unit coefficient does not qualify.
  r = reduce_quadrics(parse_polynomial("y1^3 + 2*y3^2"));
  CHECK(!r.split);
  CHECK(r.reason == "no tail variable occurs purely as a unit square");

  // Removing the squares must leave something.
  r = reduce_quadrics(parse_polynomial("y2^2"));
  CHECK(!r.split);
  CHECK(r.reason == "base polynomial vanishes after removing the squares");

  // With several squares and nothing else, one square stays as the base.
  r = reduce_quadrics(parse_polynomial("y1^2 + y2^2 + y3^2"));
  REQUIRE(r.split);
  CHECK(r.G.str() == "y1^2");
  CHECK(r.m == 1);
  CHECK(r.h == 2);

  // A base that collapses onto fewer directions than its variable support.
  r = reduce_quadrics(
      parse_polynomial("y1^3 + 3*y1^2*y2 + 3*y1*y2^2 + y2^3 + y3^2"));
  CHECK(!r.split);
  CHECK(r.reason == "base polynomial is degenerate in its own variables");

  // The square of y3 is absorbed by y1*y2 up to a change of coordinates:
  // H drops by two between degrees 1 and 2, so one split square cannot
  // account for the difference and the reduction must refuse.
  r = reduce_quadrics(parse_polynomial("y1*y2 + y3^2"));
  CHECK(!r.split);
  CHECK(r.reason == "square count does not match H(1) - H(2)");
}

TEST_CASE("complete intersection detection") {
  CHECK(is_complete_intersection(parse_polynomial("y1^2 + y2^2")));
  CHECK(is_complete_intersection(parse_polynomial("y1*y2*y3")));
  CHECK(is_complete_intersection(parse_polynomial("y1^4 + y2^3")));
  CHECK(is_complete_intersection(parse_polynomial("y1^5")));
  // Three cubes in three variables need five annihilator generators.
  Polynomial F = parse_polynomial("y1^3 + y2^3 + y3^3");
  CHECK(!is_complete_intersection(F));
  CHECK(annihilator(F).min_generators.size() == 5);
  // A pile of three squares is not: five annihilator generators again.
  Polynomial S = parse_polynomial("y1^2 + y2^2 + y3^2");
  CHECK(!is_complete_intersection(S));
  CHECK(annihilator(S).min_generators.size() == 5);
}

TEST_CASE("closed forms for one-dimensional and one-variable algebras") {
  Polynomial one = Polynomial::monomial(Monomial::one(1));
  PoincarePrediction p = predict(one, 4);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1");
  CHECK(p.oracle == ts({1, 0, 0, 0, 0}));
  CHECK(p.consistent);

  p = predict(parse_polynomial("y1^3"), 6);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1/(1 - z)");
  CHECK(p.oracle == ts({1, 1, 1, 1, 1, 1, 1}));
  CHECK(p.consistent);
}

TEST_CASE("closed forms for complete intersections") {
  PoincarePrediction p = predict(parse_polynomial("y1^2 + y2^2"), 6);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1/(1 - 2*z + z^2)");
  CHECK(p.oracle == ts({1, 2, 3, 4, 5, 6, 7}));
  CHECK(p.consistent);

  p = predict(parse_polynomial("y1*y2*y3"), 6);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1/(1 - 3*z + 3*z^2 - z^3)");
  CHECK(p.oracle == ts({1, 3, 6, 10, 15, 21, 28}));
  CHECK(p.consistent);
}

TEST_CASE("closed form after peeling squares down to one variable") {
  // One cube plus two squares: the chain of reductions ends at a line and
  // the full series only remembers the embedding dimension.
  PoincarePrediction p = predict(parse_polynomial("y1^3 + y2^2 + y3^2"), 6);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1/(1 - 3*z + z^2)");
  CHECK(p.oracle == ts({1, 3, 8, 21, 55, 144, 377}));
  CHECK(p.consistent);

  // Nothing but squares: one of them is kept as the base.
  p = predict(parse_polynomial("y1^2 + y2^2 + y3^2"), 4);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1/(1 - 3*z + z^2)");
  CHECK(p.oracle == ts({1, 3, 8, 21, 55}));
  CHECK(p.consistent);

  p = predict(parse_polynomial("y1^2 + y2^2 + y3^2 + y4^2"), 4);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1/(1 - 4*z + z^2)");
  CHECK(p.oracle == ts({1, 4, 15, 56, 209}));
  CHECK(p.consistent);
}

TEST_CASE("closed form through a complete-intersection base") {
  PoincarePrediction p = predict(parse_polynomial("y1^4 + y2^3 + y3^2"), 6);
  REQUIRE(p.has_closed_form);
  CHECK(p.closed_form.str() == "1/(1 - 3*z + z^2)");
  REQUIRE(p.has_base);
  CHECK(p.base_oracle == ts({1, 2, 3, 4, 5, 6, 7}));
  CHECK(p.oracle == ts({1, 3, 8, 21, 55, 144, 377}));
  CHECK(p.consistent);
}

TEST_CASE("relation without a closed form when the base is not a complete intersection") {
  // Four cubes plus a square: the base needs nine annihilator generators in
  // four variables, so only the denominator relation is predicted and both
  // sides are compared as independently computed truncations.
  Polynomial F = parse_polynomial("y1^3 + y2^3 + y3^3 + y4^3 + y5^2");
  PoincarePrediction p = predict(F, 4);
  CHECK(!p.has_closed_form);
  REQUIRE(p.has_base);
  CHECK(!p.relation.empty());
  CHECK(p.oracle == ts({1, 5, 24, 115, 551}));
  CHECK(p.base_oracle == ts({1, 4, 15, 56, 209}));
  CHECK(p.consistent);
}

TEST_CASE("no reduction available: only the oracle is reported") {
  Polynomial F = parse_polynomial("y1^3 + y2^3 + y3^3");
  PoincarePrediction p = predict(F, 3);
  CHECK(!p.has_closed_form);
  CHECK(!p.has_base);
  CHECK(p.relation.empty());
  CHECK(p.consistent);  // nothing to compare
  // The second step of the resolution counts the annihilator generators
  // plus one extra column per coordinate pair.
  long mu = static_cast<long>(annihilator(F).min_generators.size());
  CHECK(p.oracle.c[0] == 1);
  CHECK(p.oracle.c[1] == 3);
  CHECK(p.oracle.c[2] == mu + 3);
}

TEST_CASE("prediction input errors") {
  CHECK_THROWS_AS(predict(Polynomial(), 3), input_error);
  CHECK_THROWS_AS(predict(parse_polynomial("y1^2"), -1), input_error);
}

TEST_CASE("verdicts from a bare Hilbert sequence") {
  // Constant column of fours closed by a one.
  TheoremVerdict v = classify({1, 5, 4, 4, 1});
  CHECK(v.column_then_one);
  CHECK(v.m == 4);
  CHECK(v.c == 3);
  CHECK(v.dim == 15);
  CHECK(v.cdeg == 3);
  CHECK(v.small_h2_small_dim);
  CHECK(v.small_h2_cdeg3);
  CHECK(v.constant_column);
  CHECK(!v.f3_known);
  CHECK(v.f3 == -1);

  // Longer column of threes; the dimension and cdeg push two flags over.
  v = classify({1, 6, 3, 3, 3, 1, 1});
  CHECK(v.column_then_one);
  CHECK(v.m == 3);
  CHECK(v.c == 4);
  CHECK(v.dim == 18);
  CHECK(v.cdeg == 4);
  CHECK(!v.small_h2_small_dim);
  CHECK(!v.small_h2_cdeg3);
  CHECK(v.constant_column);

  // H(2) = 1: the column condition is met outright.
  v = classify({1, 2, 1});
  CHECK(v.column_then_one);
  CHECK(v.c == 1);
  CHECK(v.cdeg == 1);
  CHECK(v.constant_column);

  // A column of height five fails every smallness test.
  v = classify({1, 4, 5, 1});
  CHECK(!v.column_then_one);
  CHECK(!v.small_h2_small_dim);
  CHECK(!v.small_h2_cdeg3);
  CHECK(!v.constant_column);

  // Not constant between 2 and cdeg.
  v = classify({1, 3, 3, 2, 1});
  CHECK(!v.column_then_one);
  CHECK(v.cdeg == 3);
  CHECK(!v.constant_column);
  CHECK(v.small_h2_cdeg3);
}

TEST_CASE("verdict input validation") {
  CHECK_THROWS_AS(classify(std::vector<int>{1, 2, 5}), input_error);
  CHECK_THROWS_AS(classify(std::vector<int>{2, 1}), input_error);
  CHECK_THROWS_AS(classify(std::vector<int>{}), input_error);
  CHECK_THROWS_AS(classify({1, 2, 1}, 5), input_error);
  CHECK_NOTHROW(classify({1, 2, 1}, 4));
  CHECK_THROWS_AS(classify(Polynomial()), input_error);
}

TEST_CASE("verdicts from a socle generator include the row sums") {
  TheoremVerdict v = classify(parse_polynomial("y1^2 + y2^3"));
  CHECK(v.f3_known);
  CHECK(v.f3 == 1);
  CHECK(v.small_f3);
  CHECK(v.dim == 5);

  v = classify(parse_polynomial("y1*y2*y3"));
  CHECK(v.f3_known);
  CHECK(v.f3 == 3);
  CHECK(v.small_f3);
  CHECK(v.dim == 8);
}

TEST_CASE("third Hilbert value against the long decomposition rows") {
  // Two quartic powers: every row condition is met and the single long row
  // carries the whole bound.
  CHECK(third_hilbert_bound_holds(parse_polynomial("y1^4 + y2^4")));
  CHECK(third_hilbert_bound_holds(parse_polynomial("y1^4 + y2^4 + y3^2")));

  // Constant column too short.
  CHECK_THROWS_AS(third_hilbert_bound_holds(parse_polynomial("y1^3 + y2^2")),
                  input_error);
  // H(3) too large: all quadruple products of six variables.
  Polynomial e4 = parse_polynomial(
      "y1*y2*y3*y4 + y1*y2*y3*y5 + y1*y2*y3*y6 + y1*y2*y4*y5 + y1*y2*y4*y6 + "
      "y1*y2*y5*y6 + y1*y3*y4*y5 + y1*y3*y4*y6 + y1*y3*y5*y6 + y1*y4*y5*y6 + "
      "y2*y3*y4*y5 + y2*y3*y4*y6 + y2*y3*y5*y6 + y2*y4*y5*y6 + y3*y4*y5*y6");
  CHECK(hilbert_function(e4)[3] == 6);
  CHECK_THROWS_AS(third_hilbert_bound_holds(e4), input_error);
}

TEST_CASE("third Hilbert bound on seeded random instances") {
  Rng rng(0xc1a551f7u);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 8; ++trial) {
    int nvars = 2 + static_cast<int>(rng.int_in(0, 1));
    int sdeg = 4 + static_cast<int>(rng.int_in(0, 1));
    Polynomial F = random_socle_generator(rng, nvars, sdeg);
    std::vector<int> H = hilbert_function(F);
    int cdeg = 0;
    for (int i = 0; i < static_cast<int>(H.size()); ++i)
      if (H[i] > 1) cdeg = i;
    if (cdeg != 3 || H[3] > 5) continue;
    CHECK(third_hilbert_bound_holds(F));
    ++checked;
  }
  CHECK(checked > 0);
}
