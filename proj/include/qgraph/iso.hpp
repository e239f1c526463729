#ifndef QGRAPH_ISO_HPP
#define QGRAPH_ISO_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// True iff `map` is a bijection with u~v in g <=> map[u]~map[v] in h.
inline bool verify_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& map) {
    if (g.n() != h.n() || int(map.size()) != g.n())
        throw std::invalid_argument("verify_isomorphism: size mismatch");
    std::vector<int> seen(g.n(), 0);
    for (int x : map) {
        if (x < 0 || x >= g.n() || seen[x]++)
            throw std::invalid_argument("verify_isomorphism: map is not a bijection");
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v) != h.has_edge(map[u], map[v])) return false;
    return true;
}

namespace detail {

// Iterated color refinement: start from degrees, refine by the multiset of
// neighbor colors until stable. Colors are normalized jointly across both
// graphs so equal colors are comparable.
inline std::pair<std::vector<int>, std::vector<int>> joint_refinement(const Graph& g,
                                                                      const Graph& h) {
    int n = g.n();
    std::vector<int> cg(n), ch(n);
    for (int v = 0; v < n; ++v) cg[v] = g.degree(v);
    for (int v = 0; v < n; ++v) ch[v] = h.degree(v);
    auto normalize = [&]() {
        std::map<int, int> ids;
        for (int c : cg) ids.emplace(c, 0);
        for (int c : ch) ids.emplace(c, 0);
        int next = 0;
        for (auto& [k, v] : ids) v = next++;
        for (int& c : cg) c = ids[c];
        for (int& c : ch) c = ids[c];
        return next;
    };
    int classes = normalize();
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> sig_ids;
        auto signature = [&](const Graph& x, const std::vector<int>& col, int v) {
            std::vector<int> nb;
            x.neighbors(v).for_each([&](int w) { nb.push_back(col[w]); });
            std::sort(nb.begin(), nb.end());
            return std::make_pair(col[v], std::move(nb));
        };
        std::vector<std::pair<int, std::vector<int>>> sg(n), sh(n);
        for (int v = 0; v < n; ++v) sg[v] = signature(g, cg, v);
        for (int v = 0; v < n; ++v) sh[v] = signature(h, ch, v);
        for (const auto& s : sg) sig_ids.emplace(s, 0);
        for (const auto& s : sh) sig_ids.emplace(s, 0);
        int next = 0;
        for (auto& [k, v] : sig_ids) v = next++;
        for (int v = 0; v < n; ++v) cg[v] = sig_ids[sg[v]];
        for (int v = 0; v < n; ++v) ch[v] = sig_ids[sh[v]];
        if (next == classes) break;
        classes = next;
    }
    return {cg, ch};
}

} // namespace detail

// Backtracking isomorphism search with degree/neighbor-color refinement
// pruning. Intended for graphs up to a couple hundred vertices; returns some
// isomorphism if one exists, otherwise nullopt.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
    int n = g.n();
    if (n != h.n() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    auto [cg, ch] = detail::joint_refinement(g, h);
    {
        auto a = cg, b = ch;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Process g's vertices in an order that keeps each new vertex adjacent to
    // an already-placed one where possible, preferring rare colors.
    std::vector<int> color_count(n + 1, 0);
    for (int c : cg) ++color_count[c];
    std::vector<int> order;
    std::vector<bool> placed(n, false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long long best_key = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            long long attached = 0;
            g.neighbors(v).for_each([&](int w) { attached += placed[w]; });
            long long key = attached * 1000000 + (n - color_count[cg[v]]) * 1000 + (n - v);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    std::vector<int> map(n, -1), used(n, 0);
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        int u = order[depth];
        for (int x = 0; x < n; ++x) {
            if (used[x] || ch[x] != cg[u]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d)
                if (g.has_edge(u, order[d]) != h.has_edge(x, map[order[d]])) ok = false;
            if (!ok) continue;
            map[u] = x;
            used[x] = 1;
            if (self(self, depth + 1)) return true;
            used[x] = 0;
            map[u] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return map;
}

} // namespace qgraph

#endif
