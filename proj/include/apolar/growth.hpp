#ifndef APOLAR_GROWTH_HPP
#define APOLAR_GROWTH_HPP

#include <utility>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Greedy binomial expansion of h in degree d:
//   h = C(k_d, d) + C(k_{d-1}, d-1) + ...   with  k_d > k_{d-1} > ... >= j.
struct MacaulayRep {
  long h = 0;
  int d = 0;
  std::vector<std::pair<long, int>> terms;  // (k_j, j), j descending from d
};

MacaulayRep macaulay_rep(long h, int d);

// Maximal growth h^<d>: the largest admissible value in degree d+1 after h
// in degree d, obtained by bumping every binomial in the expansion.
long macaulay_bound(long h, int d);

// True iff H starts at 1 and every step satisfies H(d+1) <= H(d)^<d>.
bool is_o_sequence(const std::vector<int>& H);

// Forced continuation after maximal growth at degree d: evaluating at(t)
// for t >= d gives the polynomial tail sum C(k_j + t - d, j + t - d).
struct GotzmannTail {
  MacaulayRep rep;
  int d = 0;
  long at(int t) const;
};

// Requires H(d+1) = H(d)^<d> (maximal growth); returns the forced tail.
GotzmannTail gotzmann_persists(const std::vector<int>& H, int d);

}  // namespace apolar

#endif  // APOLAR_GROWTH_HPP
