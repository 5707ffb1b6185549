#pragma once

#include "apolar/polynomial.hpp"

#include <vector>

namespace apolar {

// Which structural hypotheses a Hilbert function (and, when available, the
// symmetric decomposition of the corresponding algebra) satisfies.  Each flag
// gates one of the rationality / boundedness results checked by the test
// suites, and is named after the condition it tests rather than the
// conclusion it licenses.
struct TheoremVerdict {
    // H(t) is a constant m <= 4 for t = 2..c and H(c+1) = 1 for some c >= 1.
    // Degenerate reading when H(2) <= 1: the column is empty and the verdict
    // is true outright (c = 1).
    bool column_then_one = false;
    // dim <= 16 and H(2) <= 4.
    bool small_h2_small_dim = false;
    // H(2) <= 4 and cdeg <= 3.
    bool small_h2_cdeg3 = false;
    // H(i) equals a constant m <= 4 for every i in [2, cdeg]; vacuously true
    // when cdeg <= 1.
    bool constant_column = false;
    // f3 <= 4, where f3 sums the degree-one entries of the decomposition rows
    // that are at least four columns long.  Only computable from a socle
    // generator, so paired with a validity flag.
    bool small_f3 = false;
    bool f3_known = false;

    // Witnesses backing the flags above.
    int m = 0;     // the constant column value (H(2) when defined, else 0)
    int c = 0;     // the last index of the constant column found, 0 if none
    int cdeg = 0;  // largest i with H(i) > 1, or 0
    long dim = 0;  // sum of the Hilbert entries
    int f3 = -1;   // -1 when no decomposition was available
};

// Classify a bare Hilbert sequence.  Throws input_error if `hilbert` is not
// an O-sequence, or if `dim_hint` >= 0 disagrees with the sum of entries.
// The f3-based flag is left unknown.
TheoremVerdict classify(const std::vector<int>& hilbert, long dim_hint = -1);

// Classify the algebra dual to the inverse system generated by F: computes
// the Hilbert function and the symmetric decomposition, so the f3 flag is
// filled in.  Throws input_error if F is zero.
TheoremVerdict classify(const Polynomial& F);

// For an algebra whose Hilbert function is constant above degree 3 (cdeg
// exactly 3) with H(3) <= 5, test that the long decomposition rows account
// for the third Hilbert value: sum of Q_a(2) over rows a <= s-4 is at least
// H(3).  Throws input_error when the hypotheses fail (cdeg != 3 or
// H(3) > 5).
bool third_hilbert_bound_holds(const Polynomial& F);

}  // namespace apolar
