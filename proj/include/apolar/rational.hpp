#ifndef APOLAR_RATIONAL_HPP
#define APOLAR_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "apolar/errors.hpp"

namespace apolar {

// Arbitrary-precision integer.
using Int = mpz_class;

// Exact rational number, kept in lowest terms with a positive denominator.
//
// mpq_class does not canonicalize a value built from a numerator/denominator
// pair, so this wrapper funnels every potentially non-canonical construction
// through mpq_class::canonicalize().  All arithmetic below preserves
// canonical form (GMP's mpq_* routines assume and maintain it).
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(const Int& n) : q_(n) {}
  Rational(const Int& num, const Int& den);

  // Accepts "p" or "p/q" with an optional leading sign on p; q must be a
  // positive integer literal.  Throws input_error otherwise.
  static Rational parse(const std::string& text);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

// n-th factorial as an Int (n >= 0).
Int factorial(long n);

// Binomial coefficient C(n, k) with C(n, k) = 0 for k < 0 or k > n; n >= 0.
Int binomial(long n, long k);

}  // namespace apolar

#endif  // APOLAR_RATIONAL_HPP
