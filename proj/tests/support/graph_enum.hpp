#ifndef QGRAPH_TESTS_GRAPH_ENUM_HPP
#define QGRAPH_TESTS_GRAPH_ENUM_HPP

// Enumeration of all graphs on up to 8 vertices, one representative per
// isomorphism class, used by the exhaustive sweeps in the test suite.
//
// A graph on n vertices is encoded as n adjacency bitmasks. The canonical
// code of a graph is the lexicographically smallest sequence of
// "row-below-the-diagonal" bit patterns over all vertex orderings, found by
// backtracking with prefix pruning. Classes on n vertices are produced by
// extending every class on n-1 vertices with one new vertex and every
// possible neighborhood, then deduplicating by canonical code.

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph::testsupport {

using AdjMask = std::vector<std::uint8_t>;  // adjacency masks, n <= 8

namespace detail {

// Per-position code: adjacency bits of position i toward positions 0..i-1.
struct CanonSearch {
    const AdjMask& adj;
    int n;
    std::vector<std::uint8_t> best;   // best (smallest) code found so far
    std::vector<std::uint8_t> cur;    // code of the current partial ordering
    std::vector<int> placed;          // vertex assigned to each position
    std::vector<bool> used;

    explicit CanonSearch(const AdjMask& a)
        : adj(a), n(int(a.size())), best(a.size(), 0xFF), cur(a.size(), 0),
          placed(a.size(), -1), used(a.size(), false) {}

    void run(int pos, bool strictly_smaller) {
        if (pos == n) {
            // best can change mid-search, so re-compare instead of trusting
            // the strictly_smaller flag computed against an older best
            if (cur < best) best = cur;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint8_t bits = 0;
            for (int i = 0; i < pos; ++i)
                if (adj[v] >> placed[i] & 1) bits |= std::uint8_t(1) << i;
            if (!strictly_smaller && bits > best[pos]) continue;
            cur[pos] = bits;
            placed[pos] = v;
            used[v] = true;
            run(pos + 1, strictly_smaller || bits < best[pos]);
            used[v] = false;
        }
    }
};

inline std::uint32_t pack_code(const std::vector<std::uint8_t>& code) {
    std::uint32_t out = 0;
    int shift = 0;
    for (std::size_t i = 1; i < code.size(); ++i) {
        out |= std::uint32_t(code[i]) << shift;
        shift += int(i);
    }
    return out;
}

}  // namespace detail

// Canonical 32-bit code of a graph on n <= 8 vertices.
inline std::uint32_t canonical_code(const AdjMask& adj) {
    detail::CanonSearch s(adj);
    s.run(0, false);
    return detail::pack_code(s.best);
}

// All isomorphism classes on exactly n vertices, as adjacency-mask arrays.
// Expected counts for n = 1..8: 1, 2, 4, 11, 34, 156, 1044, 12346.
inline std::vector<AdjMask> isomorphism_classes(int n) {
    std::vector<AdjMask> level{AdjMask{0}};
    for (int k = 2; k <= n; ++k) {
        std::vector<AdjMask> next;
        std::unordered_set<std::uint32_t> seen;
        for (const AdjMask& parent : level) {
            for (int nbrs = 0; nbrs < (1 << (k - 1)); ++nbrs) {
                AdjMask adj = parent;
                adj.push_back(std::uint8_t(nbrs));
                for (int u = 0; u < k - 1; ++u)
                    if (nbrs >> u & 1) adj[u] |= std::uint8_t(1) << (k - 1);
                if (seen.insert(canonical_code(adj)).second) next.push_back(adj);
            }
        }
        level = std::move(next);
    }
    return level;
}

inline Graph to_graph(const AdjMask& adj) {
    int n = int(adj.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u] >> v & 1) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

}  // namespace qgraph::testsupport

#endif
