#ifndef APOLAR_RANDOM_INPUTS_HPP
#define APOLAR_RANDOM_INPUTS_HPP

#include <cstdint>
#include <random>

#include "apolar/polynomial.hpp"

namespace apolar {

// Deterministic random source for seeded corpora.  Draws use the raw
// mt19937_64 stream with modulo reduction only, so results are identical
// across platforms and standard libraries (the <random> distribution
// classes are implementation-defined and must not be used here).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }  // [0, bound)
  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(unsigned percent) { return next(100) < percent; }

 private:
  std::mt19937_64 eng_;
};

// Random polynomial with terms of degree 2..sdeg, a guaranteed nonzero
// degree-sdeg part, and small nonzero integer coefficients.
Polynomial random_socle_generator(Rng& rng, int nvars, int sdeg);

// As above, but redrawn until the first Hilbert value equals nvars.
Polynomial random_nondegenerate(Rng& rng, int nvars, int sdeg);

// Nonzero homogeneous polynomial of exact degree deg.
Polynomial random_homogeneous(Rng& rng, int nvars, int deg);

}  // namespace apolar

#endif  // APOLAR_RANDOM_INPUTS_HPP
