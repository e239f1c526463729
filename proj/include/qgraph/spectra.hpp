#ifndef QGRAPH_SPECTRA_HPP
#define QGRAPH_SPECTRA_HPP

#include <stdexcept>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/linalg.hpp"

namespace qgraph {

// Eigenvalue sign census of a symmetric matrix.
struct Inertia {
    int n_minus = 0, n_zero = 0, n_plus = 0;

    bool operator==(const Inertia&) const = default;
};

// Exact inertia by rational symmetric congruence (Sylvester's law of
// inertia), no floating point. Diagonal pivots are taken largest absolute
// value first; when every remaining diagonal entry is zero, a nonzero
// off-diagonal pair (i,j) forms a [[0,b],[b,0]] block contributing one
// positive and one negative index; an all-zero remainder is n_zero.
inline Inertia inertia(const std::vector<std::vector<long long>>& m) {
    int n = int(m.size());
    for (const auto& row : m)
        if (int(row.size()) != n) throw std::invalid_argument("matrix not square");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix not symmetric");

    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    std::vector<int> rem(n);
    for (int i = 0; i < n; ++i) rem[i] = i;

    Inertia out;
    while (!rem.empty()) {
        int pk = -1;
        for (int k : rem)
            if (a[k][k] != 0 && (pk == -1 || abs(a[k][k]) > abs(a[pk][pk]))) pk = k;
        if (pk != -1) {
            if (a[pk][pk] > 0)
                ++out.n_plus;
            else
                ++out.n_minus;
            Rat piv = a[pk][pk];
            for (int i : rem) {
                if (i == pk || a[i][pk] == 0) continue;
                Rat f = a[i][pk] / piv;
                for (int j : rem) {
                    if (j == pk) continue;
                    a[i][j] -= f * a[pk][j];
                }
            }
            std::erase(rem, pk);
            continue;
        }
        // All remaining diagonal entries are zero.
        int bi = -1, bj = -1;
        for (std::size_t x = 0; x < rem.size() && bi == -1; ++x)
            for (std::size_t y = x + 1; y < rem.size(); ++y)
                if (a[rem[x]][rem[y]] != 0) {
                    bi = rem[x];
                    bj = rem[y];
                    break;
                }
        if (bi == -1) {
            out.n_zero += int(rem.size());
            break;
        }
        ++out.n_plus;
        ++out.n_minus;
        Rat b = a[bi][bj];
        for (int r : rem) {
            if (r == bi || r == bj) continue;
            Rat ri = a[r][bi], rj = a[r][bj];
            if (ri == 0 && rj == 0) continue;
            for (int s : rem) {
                if (s == bi || s == bj) continue;
                // congruence update for the 2x2 block [[0,b],[b,0]]
                a[r][s] -= (ri * a[bj][s] + rj * a[bi][s]) / b;
            }
        }
        std::erase(rem, bi);
        std::erase(rem, bj);
    }
    return out;
}

inline std::vector<std::vector<long long>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<long long>> m(g.n(), std::vector<long long>(g.n(), 0));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
    return m;
}

// min(n_0 + n_-, n_0 + n_+) of the adjacency matrix: an upper bound for both
// the classical and the quantum independence number.
inline int inertia_bound(const Graph& g) {
    Inertia in = inertia(adjacency_matrix(g));
    return std::min(in.n_zero + in.n_minus, in.n_zero + in.n_plus);
}

} // namespace qgraph

#endif
