#ifndef QGRAPH_LINALG_HPP
#define QGRAPH_LINALG_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgraph {

// Exact rational scalar used everywhere floating point would lose the
// zero/nonzero distinction.
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

// Basis of {x : <x, c> = 0 for all rows c of `constraints`} by exact Gaussian
// elimination. An empty result means the solution space is {0}.
inline std::vector<RatVec> nullspace(std::vector<RatVec> rows, int dim) {
    int r = 0; // current pivot row
    std::vector<int> pivot_col;
    for (int c = 0; c < dim && r < int(rows.size()); ++c) {
        int sel = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (rows[i][c] != 0) { sel = i; break; }
        if (sel == -1) continue;
        std::swap(rows[r], rows[sel]);
        Rat inv = rows[r][c];
        for (int j = c; j < dim; ++j) rows[r][j] /= inv;
        for (int i = 0; i < int(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (int j = c; j < dim; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(dim, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(dim, 0);
        x[free] = 1;
        for (int i = int(pivot_col.size()) - 1; i >= 0; --i)
            x[pivot_col[i]] = -rows[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

inline std::vector<RatVec> nullspace_of_int_rows(const std::vector<std::vector<long long>>& rows,
                                                 int dim) {
    std::vector<RatVec> rr;
    rr.reserve(rows.size());
    for (const auto& row : rows) {
        RatVec r(dim, 0);
        for (int j = 0; j < dim && j < int(row.size()); ++j) r[j] = row[j];
        rr.push_back(std::move(r));
    }
    return nullspace(std::move(rr), dim);
}

} // namespace qgraph

#endif
