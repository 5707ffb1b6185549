#include "apolar/rational_function.hpp"

#include <sstream>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

using ZPoly = std::vector<Int>;  // coefficient list, index = power of z

void strip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  strip(out);
  return out;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  strip(out);
  return out;
}

ZPoly neg(ZPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

Int content(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly divide_exact(const ZPoly& p, const Int& d) {
  ZPoly out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), d.get_mpz_t());
  return out;
}

// Remainder of c*a modulo b for the smallest power c of b's leading
// coefficient that keeps the division integral (pseudo-remainder).
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const Int lead = b.back();
  while (a.size() >= b.size()) {
    Int top = a.back();
    for (auto& c : a) c *= lead;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
    strip(a);
    Int g = content(a);
    if (g > 1) a = divide_exact(a, g);
    if (a.empty()) break;
  }
  return a;
}

ZPoly poly_gcd(ZPoly a, ZPoly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Int g = content(a);
  if (g > 1) a = divide_exact(a, g);
  if (a.back() < 0) a = neg(a);
  return a;
}

// Exact polynomial division, only called when the divisor divides evenly.
ZPoly divide_poly(ZPoly a, const ZPoly& b) {
  require(!b.empty(), "polynomial division by zero");
  ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
  while (a.size() >= b.size()) {
    require(mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t()),
            "polynomial division is not exact");
    Int c;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    strip(a);
    if (a.empty()) break;
  }
  require(a.empty(), "polynomial division left a remainder");
  strip(q);
  return q;
}

}  // namespace

RationalFunction::RationalFunction(std::vector<Int> num, std::vector<Int> den) {
  strip(num);
  strip(den);
  if (den.empty() || den[0] == 0)
    throw input_error("rational function: denominator must be nonzero at z = 0");
  if (num.empty()) {
    num_ = {};
    den_ = {Int(1)};
    return;
  }
  ZPoly g = poly_gcd(num, den);
  if (g.size() > 1 || (g.size() == 1 && g[0] > 1)) {
    num = divide_poly(std::move(num), g);
    den = divide_poly(std::move(den), g);
  }
  Int c = content(num);
  Int cd = content(den);
  mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cd.get_mpz_t());
  if (c > 1) {
    num = divide_exact(num, c);
    den = divide_exact(den, c);
  }
  if (den[0] < 0) {
    num = neg(std::move(num));
    den = neg(std::move(den));
  }
  require(den[0] == 1, "rational function: denominator constant term is not 1");
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::constant(long c) {
  return RationalFunction({Int(c)}, {Int(1)});
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(add(mul(num_, o.den_), mul(o.num_, den_)),
                          mul(den_, o.den_));
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(add(mul(num_, o.den_), neg(mul(o.num_, den_))),
                          mul(den_, o.den_));
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(mul(num_, o.num_), mul(den_, o.den_));
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw input_error("rational function: division by zero");
  return RationalFunction(mul(num_, o.den_), mul(den_, o.num_));
}

std::vector<Int> RationalFunction::series(int pmax) const {
  if (pmax < 0) throw input_error("series: negative truncation order");
  // den_[0] = 1, so c_t = num_t - sum_{i>=1} den_i * c_{t-i}.
  std::vector<Int> c(static_cast<std::size_t>(pmax) + 1, Int(0));
  for (int t = 0; t <= pmax; ++t) {
    Int v = t < static_cast<int>(num_.size()) ? num_[t] : Int(0);
    for (int i = 1; i <= t && i < static_cast<int>(den_.size()); ++i)
      v -= den_[i] * c[t - i];
    c[t] = v;
  }
  return c;
}

std::string RationalFunction::str() const {
  auto poly_str = [](const ZPoly& p) {
    if (p.empty()) return std::string("0");
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      Int a = p[i];
      if (first) {
        if (a < 0) out << "-";
      } else {
        out << (a < 0 ? " - " : " + ");
      }
      Int mag = abs(a);
      if (mag != 1 || i == 0) out << mag.get_str();
      if (i >= 1) {
        if (mag != 1) out << "*";
        out << "z";
        if (i >= 2) out << "^" << i;
      }
      first = false;
    }
    if (first) return std::string("0");
    return out.str();
  };
  if (is_zero()) return "0";
  std::string n = poly_str(num_);
  if (den_.size() == 1) return n;
  bool paren_num = num_.size() > 1;
  std::ostringstream out;
  if (paren_num)
    out << "(" << n << ")";
  else
    out << n;
  out << "/(" << poly_str(den_) << ")";
  return out.str();
}

}  // namespace apolar
