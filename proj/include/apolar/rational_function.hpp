#ifndef APOLAR_RATIONAL_FUNCTION_HPP
#define APOLAR_RATIONAL_FUNCTION_HPP

#include <string>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

// Univariate rational function num(z)/den(z) over the integers, stored in
// lowest terms with den(0) = 1, so it always has an exact power-series
// expansion at z = 0 computable by linear recurrence.
class RationalFunction {
 public:
  RationalFunction() : num_{}, den_{Int(1)} {}  // the zero function
  RationalFunction(std::vector<Int> num, std::vector<Int> den);
  static RationalFunction constant(long c);
  static RationalFunction one() { return constant(1); }

  const std::vector<Int>& num() const { return num_; }
  const std::vector<Int>& den() const { return den_; }
  bool is_zero() const { return num_.empty(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  // Maclaurin coefficients c_0..c_pmax.
  std::vector<Int> series(int pmax) const;

  // "(1 - 3*z + z^2)" style rendering of one polynomial, and "num/den".
  std::string str() const;

 private:
  std::vector<Int> num_, den_;  // coefficient lists, index = power of z
};

}  // namespace apolar

#endif  // APOLAR_RATIONAL_FUNCTION_HPP
