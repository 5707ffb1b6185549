#include "apolar/rational.hpp"

#include <cctype>
#include <ostream>

namespace apolar {

Rational::Rational(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw invariant_error("rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw invariant_error("rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  auto is_int_literal = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  // mpz_class's string constructor rejects a leading '+'.
  auto drop_plus = [](const std::string& s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  };
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_int_literal(text, true))
      throw input_error("not an integer literal: '" + text + "'");
    return Rational(Int(drop_plus(text)));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_int_literal(num, true))
    throw input_error("bad numerator in rational literal: '" + text + "'");
  if (!is_int_literal(den, false) || Int(den) == 0)
    throw input_error("denominator must be a positive integer: '" + text + "'");
  return Rational(Int(drop_plus(num)), Int(den));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Int factorial(long n) {
  require(n >= 0, "factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long n, long k) {
  require(n >= 0, "binomial with negative upper index");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace apolar
