#include "apolar/random_inputs.hpp"

#include "apolar/errors.hpp"
#include "apolar/inverse_system.hpp"

namespace apolar {

namespace {

Rational small_nonzero_coeff(Rng& rng) {
  long c = rng.int_in(1, 3);
  return Rational(rng.chance(50) ? c : -c);
}

}  // namespace

Polynomial random_socle_generator(Rng& rng, int nvars, int sdeg) {
  require(nvars >= 1 && sdeg >= 2, "random generator: need nvars >= 1, sdeg >= 2");
  Polynomial f(nvars);
  for (int d = 2; d <= sdeg; ++d)
    for (const Monomial& m : monomials_of_degree(nvars, d))
      if (rng.chance(d == sdeg ? 40 : 25)) f.add_term(m, small_nonzero_coeff(rng));
  if (f.homogeneous_component(sdeg).is_zero()) {
    std::vector<Monomial> top = monomials_of_degree(nvars, sdeg);
    f.add_term(top[rng.next(top.size())], small_nonzero_coeff(rng));
  }
  return f;
}

Polynomial random_nondegenerate(Rng& rng, int nvars, int sdeg) {
  for (;;) {
    Polynomial f = random_socle_generator(rng, nvars, sdeg);
    if (is_nondegenerate(f)) return f;
  }
}

Polynomial random_homogeneous(Rng& rng, int nvars, int deg) {
  require(nvars >= 1 && deg >= 0, "random homogeneous: bad arguments");
  Polynomial f(nvars);
  std::vector<Monomial> mons = monomials_of_degree(nvars, deg);
  for (const Monomial& m : mons)
    if (rng.chance(35)) f.add_term(m, small_nonzero_coeff(rng));
  if (f.is_zero()) f.add_term(mons[rng.next(mons.size())], small_nonzero_coeff(rng));
  return f;
}

}  // namespace apolar
