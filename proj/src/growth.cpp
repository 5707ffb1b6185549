#include "apolar/growth.hpp"

#include "apolar/errors.hpp"

namespace apolar {

namespace {

long binom_long(long k, int j) {
  if (k < j) return 0;
  Int b = binomial(k, j);
  require(b.fits_slong_p(), "binomial out of range");
  return b.get_si();
}

}  // namespace

MacaulayRep macaulay_rep(long h, int d) {
  if (h < 0 || d < 1) throw input_error("binomial expansion needs h >= 0, d >= 1");
  MacaulayRep rep;
  rep.h = h;
  rep.d = d;
  long rest = h;
  for (int j = d; rest > 0; --j) {
    require(j >= 1, "binomial expansion ran past degree 1");
    // Largest k with C(k, j) <= rest; starts at k = j since C(j, j) = 1.
    long k = j;
    while (binom_long(k + 1, j) <= rest) ++k;
    rep.terms.emplace_back(k, j);
    rest -= binom_long(k, j);
  }
  return rep;
}

long macaulay_bound(long h, int d) {
  MacaulayRep rep = macaulay_rep(h, d);
  long bound = 0;
  for (auto [k, j] : rep.terms) bound += binom_long(k + 1, j + 1);
  return bound;
}

bool is_o_sequence(const std::vector<int>& H) {
  if (H.empty() || H[0] != 1) return false;
  for (int v : H)
    if (v < 0) return false;
  for (std::size_t i = 1; i + 1 < H.size(); ++i)
    if (H[i + 1] > macaulay_bound(H[i], static_cast<int>(i))) return false;
  return true;
}

long GotzmannTail::at(int t) const {
  require(t >= d, "tail evaluated before its start");
  long value = 0;
  for (auto [k, j] : rep.terms) value += binom_long(k + t - d, j + t - d);
  return value;
}

GotzmannTail gotzmann_persists(const std::vector<int>& H, int d) {
  if (d < 1 || static_cast<std::size_t>(d) + 1 >= H.size())
    throw input_error("persistence check needs entries at degrees d and d+1");
  if (H[d + 1] != macaulay_bound(H[d], d))
    throw input_error("growth is not maximal at the given degree");
  GotzmannTail tail;
  tail.rep = macaulay_rep(H[d], d);
  tail.d = d;
  return tail;
}

}  // namespace apolar
