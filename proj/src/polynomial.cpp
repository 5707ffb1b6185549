#include "apolar/polynomial.hpp"

#include "apolar/errors.hpp"

namespace apolar {

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i, int exp) {
  return monomial(Monomial::variable(nvars, i, exp));
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int Polynomial::order() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  require(m.nvars() == n_, "polynomial: monomial has wrong variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require(n_ == o.n_, "polynomial sum: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require(n_ == o.n_, "polynomial difference: variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require(n_ == o.n_, "polynomial product: variable count mismatch");
  Polynomial p(n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) p.add_term(ma.times(mb), ca * cb);
  return p;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial p(n_);
  if (c.is_zero()) return p;
  for (const auto& [m, q] : terms_) p.add_term(m, q * c);
  return p;
}

Polynomial Polynomial::homogeneous_component(int d) const {
  Polynomial p(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) p.add_term(m, c);
  return p;
}

Polynomial Polynomial::truncate_above(int d) const {
  Polynomial p(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) p.add_term(m, c);
  return p;
}

Polynomial Polynomial::tail_from(int h) const {
  Polynomial p(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() >= h) p.add_term(m, c);
  return p;
}

Polynomial Polynomial::extend_vars(int new_n) const {
  require(new_n >= n_, "extend_vars: cannot shrink variable count");
  Polynomial p(new_n);
  for (const auto& [m, c] : terms_) {
    Monomial big = Monomial::one(new_n);
    for (int i = 0; i < n_; ++i) big.e[i] = m.e[i];
    p.add_term(big, c);
  }
  return p;
}

std::vector<Rational> Polynomial::coords(const DegreeChart& chart) const {
  require(chart.nvars() == n_, "coords: chart variable count mismatch");
  require(degree() <= chart.maxdeg(), "coords: chart too small");
  std::vector<Rational> v(chart.size());
  for (const auto& [m, c] : terms_) v[chart.index(m)] = c;
  return v;
}

Polynomial Polynomial::from_coords(const DegreeChart& chart,
                                   const std::vector<Rational>& v) {
  require(v.size() == chart.size(), "from_coords: length mismatch");
  Polynomial p(chart.nvars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) p.add_term(chart.monomial(i), v[i]);
  return p;
}

std::string Polynomial::str(char var) const {
  if (terms_.empty()) return "0";
  // Display order: highest degree first; within a degree keep the chart
  // order (earlier variables first), e.g. "y1^2 + y1*y2 + y2^2".
  std::vector<const TermMap::value_type*> disp;
  disp.reserve(terms_.size());
  for (int d = degree(); d >= 0; --d)
    for (const auto& term : terms_)
      if (term.first.degree() == d) disp.push_back(&term);
  std::string s;
  for (const auto* tp : disp) {
    const Monomial& m = tp->first;
    Rational c = tp->second;
    bool negative = c.sign() < 0;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    if (m.is_one()) {
      s += c.str();
    } else if (c.is_one()) {
      s += m.str(var);
    } else {
      s += c.str() + "*" + m.str(var);
    }
  }
  return s;
}

}  // namespace apolar
