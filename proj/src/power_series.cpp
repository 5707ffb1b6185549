#include "apolar/power_series.hpp"

#include <sstream>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

// num/(den + scale * z^shift * num), the shared shape of all four transforms.
RationalFunction shifted_transform(const RationalFunction& p, const Int& scale,
                                   int shift) {
  std::vector<Int> den = p.den();
  const std::vector<Int>& num = p.num();
  if (den.size() < num.size() + shift) den.resize(num.size() + shift, Int(0));
  for (std::size_t i = 0; i < num.size(); ++i) den[i + shift] += scale * num[i];
  return RationalFunction(num, den);
}

TruncatedSeries shifted_transform(const TruncatedSeries& p, const Int& scale,
                                  int shift) {
  if (p.c.empty()) throw input_error("series transform: empty series");
  // denominator 1 + scale * z^shift * P, truncated to the same order
  TruncatedSeries den;
  den.c.assign(p.c.size(), Int(0));
  den.c[0] = 1;
  for (std::size_t i = 0; i + shift < p.c.size(); ++i)
    den.c[i + shift] += scale * p.c[i];
  return p.mul(den.inverse());
}

}  // namespace

std::string TruncatedSeries::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out << ", ";
    out << c[i];
  }
  out << ")";
  return out.str();
}

TruncatedSeries TruncatedSeries::mul(const TruncatedSeries& o) const {
  if (c.empty() || o.c.empty())
    throw input_error("series multiplication: empty series");
  std::size_t n = std::min(c.size(), o.c.size());
  TruncatedSeries out;
  out.c.assign(n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) out.c[i + j] += c[i] * o.c[j];
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c.empty() || c[0] != 1)
    throw input_error("series inverse: constant term must be 1");
  TruncatedSeries out;
  out.c.assign(c.size(), Int(0));
  out.c[0] = 1;
  for (std::size_t t = 1; t < c.size(); ++t) {
    Int acc = 0;
    for (std::size_t i = 1; i <= t; ++i) acc += c[i] * out.c[t - i];
    out.c[t] = -acc;
  }
  return out;
}

TruncatedSeries series_of(const RationalFunction& rf, int pmax) {
  if (pmax < 0) throw input_error("series_of: pmax must be >= 0");
  TruncatedSeries out;
  out.c = rf.series(pmax);
  return out;
}

TruncatedSeries socle_formula(const TruncatedSeries& p) {
  return shifted_transform(p, Int(1), 2);
}

TruncatedSeries socle_inverse(const TruncatedSeries& p) {
  return shifted_transform(p, Int(-1), 2);
}

RationalFunction socle_formula(const RationalFunction& p) {
  return shifted_transform(p, Int(1), 2);
}

RationalFunction socle_inverse(const RationalFunction& p) {
  return shifted_transform(p, Int(-1), 2);
}

TruncatedSeries quotient_formula(const TruncatedSeries& p, int h) {
  if (h < 0) throw input_error("quotient transform: h must be >= 0");
  return shifted_transform(p, Int(-h), 1);
}

TruncatedSeries quotient_inverse(const TruncatedSeries& p, int h) {
  if (h < 0) throw input_error("quotient transform: h must be >= 0");
  return shifted_transform(p, Int(h), 1);
}

RationalFunction quotient_formula(const RationalFunction& p, int h) {
  if (h < 0) throw input_error("quotient transform: h must be >= 0");
  return shifted_transform(p, Int(-h), 1);
}

RationalFunction quotient_inverse(const RationalFunction& p, int h) {
  if (h < 0) throw input_error("quotient transform: h must be >= 0");
  return shifted_transform(p, Int(h), 1);
}

}  // namespace apolar
