#include "apolar/classify.hpp"

#include <numeric>

#include "apolar/decomposition.hpp"
#include "apolar/errors.hpp"
#include "apolar/growth.hpp"
#include "apolar/inverse_system.hpp"

namespace apolar {

namespace {

int entry(const std::vector<int>& H, int i) {
    return (i >= 0 && i < static_cast<int>(H.size())) ? H[i] : 0;
}

}  // namespace

TheoremVerdict classify(const std::vector<int>& hilbert, long dim_hint) {
    if (!is_o_sequence(hilbert))
        throw input_error("classify: Hilbert entries do not form an O-sequence");

    TheoremVerdict v;
    v.dim = std::accumulate(hilbert.begin(), hilbert.end(), 0L);
    if (dim_hint >= 0 && dim_hint != v.dim)
        throw input_error("classify: dimension hint disagrees with the sum of Hilbert entries");

    v.cdeg = capital_degree(hilbert);
    v.m = entry(hilbert, 2);

    // Constant column of height <= 4 immediately followed by a 1.  With
    // H(2) <= 1 the column is empty and the condition holds outright.
    if (v.m <= 1) {
        v.column_then_one = true;
        v.c = 1;
    } else {
        int c = 2;
        while (entry(hilbert, c + 1) == v.m) ++c;
        if (v.m <= 4 && entry(hilbert, c + 1) == 1) {
            v.column_then_one = true;
            v.c = c;
        }
    }

    // Constant column spanning all of [2, cdeg]; vacuous when cdeg <= 1.
    if (v.cdeg <= 1) {
        v.constant_column = true;
    } else {
        bool constant = v.m <= 4;
        for (int i = 2; i <= v.cdeg && constant; ++i)
            constant = hilbert[i] == v.m;
        v.constant_column = constant;
    }

    v.small_h2_small_dim = v.dim <= 16 && v.m <= 4;
    v.small_h2_cdeg3 = v.m <= 4 && v.cdeg <= 3;
    return v;
}

TheoremVerdict classify(const Polynomial& F) {
    if (F.is_zero()) throw input_error("classify: zero socle generator");
    SymmetricDecomposition dec = symmetric_decomposition(F);
    TheoremVerdict v = classify(dec.total);
    v.f3 = dec.socle_degree >= 3 ? dec.f[1] : 0;
    v.f3_known = true;
    v.small_f3 = v.f3 <= 4;
    return v;
}

bool third_hilbert_bound_holds(const Polynomial& F) {
    SymmetricDecomposition dec = symmetric_decomposition(F);
    const std::vector<int>& H = dec.total;
    if (capital_degree(H) != 3)
        throw input_error("third_hilbert_bound: Hilbert function is not constant above degree 3");
    if (entry(H, 3) > 5)
        throw input_error("third_hilbert_bound: H(3) exceeds 5");

    int s = dec.socle_degree;
    int sum = 0;
    for (int a = 0; a + 4 <= s; ++a) sum += dec.rows[a][2];
    return sum >= H[3];
}

}  // namespace apolar
