#pragma once

#include <string>
#include <vector>

namespace apolar {

// One candidate symmetric-decomposition table for socle degree s: rows
// a = 0..s-2, row a holding s+1-a entries that are symmetric around
// (s-a)/2.  Row 0 starts and ends with 1, rows a >= 1 start and end with 0.
struct DecompositionTable {
    std::vector<std::vector<int>> rows;
    std::vector<int> hilbert;  // columnwise sums of the rows
    long dim = 0;              // sum of all entries
    int h2 = 0;                // hilbert[2]
    int f3 = 0;                // sum of rows[a][1] over rows with a <= s-3
    int cdeg = 0;              // largest i with hilbert[i] > 1, or 0
    bool small_f3 = false;     // f3 <= 4
    bool small_cdeg = false;   // cdeg <= 3

    std::string str() const;
};

struct TableEnumeration {
    int socle_degree = 0;
    long max_dim = 0;
    int max_h2 = 0;
    std::vector<DecompositionTable> tables;
    // True when every admissible table has f3 <= 4 or cdeg <= 3.
    bool dichotomy = false;
};

// Enumerate every table satisfying all admissibility constraints at once:
// the row symmetries and fixed ends above, every partial columnwise sum
// (rows 0..A for each A) an O-sequence, total dimension at most max_dim and
// hilbert[2] at most max_h2.  Exhaustive by backtracking over half-rows;
// the mirror constraint fills the rest.  Throws input_error if s < 3.
TableEnumeration enumerate_decompositions(int s, long max_dim, int max_h2);

}  // namespace apolar
