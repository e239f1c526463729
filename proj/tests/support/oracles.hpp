#ifndef QGRAPH_TESTS_ORACLES_HPP
#define QGRAPH_TESTS_ORACLES_HPP

// Independent reference implementations used only by the test suite. They
// favor obviousness over speed so solver results can be checked against
// exhaustive enumeration.

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/perm.hpp"
#include "qgraph/spectra.hpp"

namespace qgraph::oracles {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> m(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        m[u] |= std::uint32_t(1) << v;
        m[v] |= std::uint32_t(1) << u;
    }
    return m;
}

// Exhaustive maximum independent set over all vertex subsets (n <= 24).
inline int brute_alpha(const Graph& g) {
    int n = g.n();
    auto adj = adjacency_masks(g);
    int best = 0;
    // DFS over vertices in index order: keep or skip each vertex.
    std::vector<std::pair<int, std::uint32_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [v, chosen] = stack.back();
        stack.pop_back();
        if (v == n) {
            best = std::max(best, std::popcount(chosen));
            continue;
        }
        stack.push_back({v + 1, chosen});
        if ((adj[v] & chosen) == 0) stack.push_back({v + 1, chosen | (std::uint32_t(1) << v)});
    }
    return best;
}

namespace detail {
inline bool brute_colorable(const std::vector<std::uint32_t>& adj, int n, int k) {
    // Assign colors vertex by vertex; allow at most one color never used
    // before (symmetry breaking keeps this exact while pruning relabelings).
    struct Rec {
        const std::vector<std::uint32_t>& adj;
        int n, k;
        std::vector<int> color;
        bool run(int v, int used) {
            if (v == n) return true;
            int limit = std::min(used + 1, k);
            for (int c = 0; c < limit; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if ((adj[v] >> u & 1) && color[u] == c) ok = false;
                if (!ok) continue;
                color[v] = c;
                if (run(v + 1, std::max(used, c + 1))) return true;
                color[v] = -1;
            }
            return false;
        }
    } rec{adj, n, k, std::vector<int>(n, -1)};
    return rec.run(0, 0);
}
}  // namespace detail

// Exact chromatic number by exhaustive k-coloring search (n <= ~16).
inline int brute_chromatic(const Graph& g) {
    int n = g.n();
    if (n == 0) return 0;
    auto adj = adjacency_masks(g);
    for (int k = 1; k <= n; ++k)
        if (detail::brute_colorable(adj, n, k)) return k;
    return n;
}

// Exhaustive isomorphism test over all n! vertex bijections (n <= 8).
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    int n = g.n();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Floating-point inertia oracle. Only meaningful when the spectrum stays
// clear of the tolerance band, which holds for the small integer matrices
// it is used on.
inline Inertia float_inertia(const std::vector<std::vector<long long>>& m, double tol = 1e-9) {
    int n = int(m.size());
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = double(m[i][j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff()) * n;
    Inertia in;
    for (int i = 0; i < n; ++i) {
        double ev = es.eigenvalues()(i);
        if (ev < -tol * scale)
            ++in.n_minus;
        else if (ev > tol * scale)
            ++in.n_plus;
        else
            ++in.n_zero;
    }
    return in;
}

}  // namespace qgraph::oracles

#endif
