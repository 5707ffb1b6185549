#include "apolar/enumerate_tables.hpp"

#include <sstream>

#include "apolar/errors.hpp"
#include "apolar/growth.hpp"

namespace apolar {

std::string DecompositionTable::str() const {
    std::ostringstream out;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        out << "Q(" << a << "):";
        for (int v : rows[a]) out << ' ' << v;
        out << "\n";
    }
    out << "H:";
    for (int v : hilbert) out << ' ' << v;
    out << "  (dim " << dim << ", f3 " << f3 << ", cdeg " << cdeg << ")\n";
    return out.str();
}

namespace {

// Depth-first construction: rows are filled top to bottom, each row half by
// half (the mirror image fills the rest), with the dimension and column-2
// budgets enforced entry by entry and the partial-sum O-sequence test run
// every time a row completes.
struct Search {
    int s = 0;
    long max_dim = 0;
    int max_h2 = 0;
    std::vector<std::vector<int>> rows;
    std::vector<int> col;  // columnwise sum of the rows placed so far
    long dim = 0;
    std::vector<DecompositionTable> tables;

    void run() {
        rows.assign(static_cast<std::size_t>(s - 1), {});
        col.assign(static_cast<std::size_t>(s + 1), 0);
        start_row(0);
    }

    void start_row(int a) {
        const int last = s - a;
        const int ends = a == 0 ? 1 : 0;
        rows[a].assign(static_cast<std::size_t>(last + 1), 0);
        rows[a][0] = rows[a][last] = ends;
        col[0] += ends;
        col[last] += ends;
        dim += 2L * ends;
        if (dim <= max_dim && col[2] <= max_h2) fill_position(a, 1);
        col[0] -= ends;
        col[last] -= ends;
        dim -= 2L * ends;
    }

    void fill_position(int a, int i) {
        const int last = s - a;
        const int mirror = last - i;
        if (i > mirror) {
            row_complete(a);
            return;
        }
        const int weight = i == mirror ? 1 : 2;
        // How many copies of the entry land in column 2.
        const int h2_weight = (i == 2 ? 1 : 0) + (mirror == 2 && mirror != i ? 1 : 0);
        long cap = (max_dim - dim) / weight;
        if (h2_weight > 0) {
            long h2_cap = (max_h2 - col[2]) / h2_weight;
            if (h2_cap < cap) cap = h2_cap;
        }
        for (long e = 0; e <= cap; ++e) {
            rows[a][i] = rows[a][mirror] = static_cast<int>(e);
            col[i] += static_cast<int>(e);
            if (mirror != i) col[mirror] += static_cast<int>(e);
            dim += weight * e;
            fill_position(a, i + 1);
            col[i] -= static_cast<int>(e);
            if (mirror != i) col[mirror] -= static_cast<int>(e);
            dim -= weight * e;
        }
        rows[a][i] = rows[a][mirror] = 0;
    }

    void row_complete(int a) {
        if (!is_o_sequence(col)) return;
        if (a + 1 < s - 1) {
            start_row(a + 1);
            return;
        }
        DecompositionTable t;
        t.rows = rows;
        t.hilbert = col;
        t.dim = dim;
        t.h2 = col[2];
        for (int b = 0; b + 3 <= s; ++b) t.f3 += rows[b][1];
        for (int i = 0; i <= s; ++i)
            if (col[i] > 1) t.cdeg = i;
        t.small_f3 = t.f3 <= 4;
        t.small_cdeg = t.cdeg <= 3;
        tables.push_back(std::move(t));
    }
};

}  // namespace

TableEnumeration enumerate_decompositions(int s, long max_dim, int max_h2) {
    if (s < 3) throw input_error("enumerate: socle degree must be at least 3");

    Search search;
    search.s = s;
    search.max_dim = max_dim;
    search.max_h2 = max_h2;
    search.run();

    TableEnumeration out;
    out.socle_degree = s;
    out.max_dim = max_dim;
    out.max_h2 = max_h2;
    out.tables = std::move(search.tables);
    out.dichotomy = true;
    for (const DecompositionTable& t : out.tables)
        out.dichotomy = out.dichotomy && (t.small_f3 || t.small_cdeg);
    return out;
}

}  // namespace apolar
