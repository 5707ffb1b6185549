#include "apolar/monomial.hpp"

#include <algorithm>

#include "apolar/errors.hpp"

namespace apolar {

Monomial Monomial::variable(int nvars, int i, int exp) {
  require(0 <= i && i < nvars, "monomial: variable index out of range");
  Monomial m = one(nvars);
  m.e[i] = exp;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  require(e.size() == other.e.size(), "monomial: variable count mismatch");
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > other.e[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& o) const {
  require(e.size() == o.e.size(), "monomial: variable count mismatch");
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  require(o.divides(*this), "monomial: not divisible");
  Monomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
  return r;
}

std::string Monomial::str(char var) const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += var;
    s += std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Within a degree: earlier variables heavier, i.e. compare exponent
  // vectors lexicographically, larger first.
  const std::size_t len = std::max(a.e.size(), b.e.size());
  for (std::size_t i = 0; i < len; ++i) {
    int ea = i < a.e.size() ? a.e[i] : 0;
    int eb = i < b.e.size() ? b.e[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  require(n >= 1 && d >= 0, "monomials_of_degree: bad arguments");
  std::vector<Monomial> out;
  std::vector<int> cur(n, 0);
  // Recursive descent, first variable's exponent from d down to 0.
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == n - 1) {
      cur[var] = rem;
      out.emplace_back(cur);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      cur[var] = k;
      self(self, var + 1, rem - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

long dim_exact(int n, int d) {
  if (d < 0) return 0;
  return binomial(n + d - 1, d).get_si();
}

long dim_upto(int n, int d) {
  if (d < 0) return 0;
  return binomial(n + d, d).get_si();
}

DegreeChart::DegreeChart(int nvars, int maxdeg) : n_(nvars), maxdeg_(maxdeg) {
  require(nvars >= 1 && maxdeg >= 0, "chart: bad arguments");
  offsets_.resize(maxdeg + 2, 0);
  for (int d = 0; d <= maxdeg; ++d) {
    offsets_[d] = mons_.size();
    for (Monomial& m : monomials_of_degree(nvars, d)) {
      index_[m] = mons_.size();
      mons_.push_back(std::move(m));
    }
  }
  offsets_[maxdeg + 1] = mons_.size();
}

std::size_t DegreeChart::index(const Monomial& m) const {
  auto it = index_.find(m);
  require(it != index_.end(), "chart: monomial not in chart");
  return it->second;
}

bool DegreeChart::contains(const Monomial& m) const {
  return index_.find(m) != index_.end();
}

std::size_t DegreeChart::degree_offset(int d) const {
  require(0 <= d && d <= maxdeg_ + 1, "chart: degree out of range");
  return offsets_[d];
}

std::size_t DegreeChart::degree_size(int d) const {
  if (d < 0 || d > maxdeg_) return 0;
  return offsets_[d + 1] - offsets_[d];
}

}  // namespace apolar
