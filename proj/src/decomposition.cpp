#include "apolar/decomposition.hpp"

#include <sstream>

#include "apolar/errors.hpp"
#include "apolar/inverse_system.hpp"

namespace apolar {

std::string SymmetricDecomposition::str() const {
  std::ostringstream out;
  out << "socle degree " << socle_degree << "\n";
  for (std::size_t a = 0; a < rows.size(); ++a) {
    out << "Q(" << a << "):";
    for (int v : rows[a]) out << ' ' << v;
    out << "\n";
  }
  out << "H:";
  for (int v : total) out << ' ' << v;
  out << "\n";
  for (std::size_t h = 0; h < f.size(); ++h)
    out << (h ? ", " : "") << "f_" << h + 2 << " = " << f[h];
  if (!f.empty()) out << "\n";
  return out.str();
}

SymmetricDecomposition symmetric_decomposition(const FiniteLocalAlgebra& A) {
  if (!A.is_gorenstein())
    throw input_error("symmetric decomposition requires a Gorenstein algebra");
  const int s = A.top_degree();

  std::vector<Subspace> power, colon;  // m^i and (0 : m^j), indices 0..s+1
  for (int i = 0; i <= s + 1; ++i) {
    power.push_back(A.ideal_power(i));
    colon.push_back(A.power_annihilator(i));
  }
  // Dimension of ((0 : m^{s+1-a-i}) ∩ m^i + m^{i+1}) / m^{i+1}.
  auto filtration_dim = [&](int a, int i) -> int {
    Subspace slice = Subspace::intersect(colon[s + 1 - a - i], power[i]) + power[i + 1];
    return static_cast<int>(slice.dim() - power[i + 1].dim());
  };

  SymmetricDecomposition dec;
  dec.socle_degree = s;
  dec.total = A.hilbert();
  const int last_row = s >= 2 ? s - 2 : 0;
  for (int a = 0; a <= last_row; ++a) {
    std::vector<int> row(s - a + 1);
    for (int i = 0; i <= s - a; ++i)
      row[i] = filtration_dim(a, i) - filtration_dim(a + 1, i);
    dec.rows.push_back(std::move(row));
  }
  for (int h = 2; h <= s; ++h) {
    int fh = 0;
    for (int a = 0; a <= s - h; ++a) fh += dec.rows[a][1];
    dec.f.push_back(fh);
  }

  // Re-check every structural property of the table before handing it out.
  for (int i = 0; i <= s; ++i) {
    int sum = 0;
    for (const auto& row : dec.rows)
      if (i < static_cast<int>(row.size())) sum += row[i];
    require(sum == dec.total[i], "decomposition: rows do not sum to the Hilbert function");
  }
  for (std::size_t a = 0; a < dec.rows.size(); ++a) {
    const auto& row = dec.rows[a];
    for (std::size_t i = 0; i < row.size(); ++i) {
      require(row[i] >= 0, "decomposition: negative row entry");
      require(row[i] == row[row.size() - 1 - i], "decomposition: row not symmetric");
    }
    if (a >= 1)
      require(row.front() == 0 && row.back() == 0,
              "decomposition: row beyond the first must vanish at its ends");
  }
  return dec;
}

SymmetricDecomposition symmetric_decomposition(const Polynomial& F) {
  FiniteLocalAlgebra A = FiniteLocalAlgebra::from_inverse_system(F);
  SymmetricDecomposition dec = symmetric_decomposition(A);
  // The first row is the Hilbert function of the graded algebra of the top
  // homogeneous component.
  Polynomial top = F.homogeneous_component(F.degree());
  require(dec.rows[0] == hilbert_function(top),
          "decomposition: first row differs from the top-component Hilbert function");
  return dec;
}

SymmetricDecomposition decomposition_of_tail(const Polynomial& F, int h) {
  Polynomial tail = F.tail_from(h);
  if (tail.is_zero()) throw input_error("tail is zero: no component of degree >= " +
                                        std::to_string(h));
  return symmetric_decomposition(tail);
}

}  // namespace apolar
