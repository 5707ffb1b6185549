#ifndef APOLAR_POWER_SERIES_HPP
#define APOLAR_POWER_SERIES_HPP

#include <string>
#include <vector>

#include "apolar/rational_function.hpp"

namespace apolar {

// Exact truncated power series c_0 + c_1 z + ... + c_pmax z^pmax.
struct TruncatedSeries {
  std::vector<Int> c;

  int pmax() const { return static_cast<int>(c.size()) - 1; }
  bool operator==(const TruncatedSeries& o) const { return c == o.c; }
  bool operator!=(const TruncatedSeries& o) const { return c != o.c; }
  std::string str() const;  // "(1, 3, 9, 27)"

  TruncatedSeries mul(const TruncatedSeries& o) const;  // truncated to min order
  TruncatedSeries inverse() const;                      // needs c_0 = 1
};

TruncatedSeries series_of(const RationalFunction& rf, int pmax);

// Betti-series transform for passing to/from the quotient by the socle:
// forward maps the series of C/Soc(C) to the series of C (Gorenstein C,
// embedding dimension >= 2); inverse undoes it.
//   forward: P -> P/(1 + z^2 P)        inverse: P -> P/(1 - z^2 P)
TruncatedSeries socle_formula(const TruncatedSeries& p);
TruncatedSeries socle_inverse(const TruncatedSeries& p);
RationalFunction socle_formula(const RationalFunction& p);
RationalFunction socle_inverse(const RationalFunction& p);

// Betti-series transform for killing h independent socle elements that lie
// outside the square of the maximal ideal:
//   forward: P -> P/(1 - h z P)        inverse: P -> P/(1 + h z P)
TruncatedSeries quotient_formula(const TruncatedSeries& p, int h);
TruncatedSeries quotient_inverse(const TruncatedSeries& p, int h);
RationalFunction quotient_formula(const RationalFunction& p, int h);
RationalFunction quotient_inverse(const RationalFunction& p, int h);

}  // namespace apolar

#endif  // APOLAR_POWER_SERIES_HPP
