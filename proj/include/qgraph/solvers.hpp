#ifndef QGRAPH_SOLVERS_HPP
#define QGRAPH_SOLVERS_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// Node/time limits. Zero means unlimited. Exceeding a budget yields an
// explicit BudgetExhausted outcome, never a wrong value.
struct Budget {
    std::uint64_t max_nodes = 0;
    std::int64_t max_ms = 0;
};

enum class SolveStatus { Exact, BudgetExhausted };

struct SolveReport {
    SolveStatus status = SolveStatus::Exact;
    int value = -1;
    std::vector<int> witness; // coclique vertices, or per-vertex colors
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Branch-and-bound maximum clique with a greedy-coloring upper bound
// (Tomita-style). Vertices are pre-sorted by degree so the coloring bound is
// tight early; the search schedule is fixed, so results are deterministic.
class MaxCliqueSolver {
public:
    MaxCliqueSolver(const Graph& g, Budget budget) : budget_(budget) {
        n_ = g.n();
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        adj_.assign(n_, Bitset(n_));
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
        for (auto [u, v] : g.edges()) {
            adj_[pos[u]].set(pos[v]);
            adj_[pos[v]].set(pos[u]);
        }
    }

    SolveReport solve() {
        SolveReport rep;
        if (n_ > 0) {
            Bitset all(n_);
            for (int v = 0; v < n_; ++v) all.set(v);
            seed_incumbent(all);
            std::vector<int> cur;
            expand(cur, all);
        }
        rep.nodes = nodes_;
        rep.elapsed_ms = clock_.ms();
        if (exhausted_) {
            rep.status = SolveStatus::BudgetExhausted;
            return rep;
        }
        rep.value = int(best_.size());
        for (int v : best_) rep.witness.push_back(order_[v]);
        std::sort(rep.witness.begin(), rep.witness.end());
        return rep;
    }

private:
    void seed_incumbent(const Bitset& all) {
        Bitset cand = all;
        while (cand.any()) {
            int v = cand.find_first();
            best_.push_back(v);
            cand &= adj_[v];
        }
    }

    bool over_budget() {
        if (budget_.max_nodes && nodes_ > budget_.max_nodes) return true;
        if (budget_.max_ms && (nodes_ & 1023) == 0 && clock_.ms() > double(budget_.max_ms))
            return true;
        return false;
    }

    // Greedy coloring of P; returns (vertex, color) sorted by color ascending.
    std::vector<std::pair<int, int>> color_sort(const Bitset& P) const {
        std::vector<std::pair<int, int>> out;
        Bitset left = P;
        int c = 0;
        while (left.any()) {
            ++c;
            Bitset cls = left;
            while (cls.any()) {
                int v = cls.find_first();
                out.emplace_back(v, c);
                left.reset(v);
                cls.reset(v);
                cls.and_not(adj_[v]);
            }
        }
        return out;
    }

    void expand(std::vector<int>& cur, Bitset P) {
        ++nodes_;
        if (exhausted_ || over_budget()) {
            exhausted_ = true;
            return;
        }
        auto colored = color_sort(P);
        for (int idx = int(colored.size()) - 1; idx >= 0; --idx) {
            auto [v, c] = colored[idx];
            if (int(cur.size()) + c <= int(best_.size())) return;
            cur.push_back(v);
            Bitset P2 = P & adj_[v];
            if (P2.none()) {
                if (cur.size() > best_.size()) best_ = cur;
            } else {
                expand(cur, P2);
            }
            cur.pop_back();
            P.reset(v);
            if (exhausted_) return;
        }
    }

    int n_ = 0;
    std::vector<int> order_; // solver index -> original vertex
    std::vector<Bitset> adj_;
    Budget budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<int> best_;
    Stopwatch clock_;
};

} // namespace detail

inline SolveReport max_clique(const Graph& g, Budget budget = {}) {
    return detail::MaxCliqueSolver(g, budget).solve();
}

// Exact independence number with a witness coclique: branch-and-bound on the
// complement (clique-cover/coloring upper bound).
inline SolveReport max_independent_set(const Graph& g, Budget budget = {}) {
    if (g.n() == 0) {
        SolveReport rep;
        rep.value = 0;
        return rep;
    }
    return max_clique(g.complement(), budget);
}

namespace detail {

// Backtracking k-colorability with saturation-degree vertex selection.
class KColorSolver {
public:
    KColorSolver(const Graph& g, int k, Budget budget, std::uint64_t base_nodes,
                 const Stopwatch& clock)
        : g_(g), k_(k), budget_(budget), nodes_(base_nodes), clock_(clock) {}

    std::optional<std::vector<int>> solve(bool& exhausted, std::uint64_t& nodes_out) {
        colors_.assign(g_.n(), -1);
        bool ok = rec(0);
        exhausted = exhausted_;
        nodes_out = nodes_;
        if (!ok || exhausted_) return std::nullopt;
        return colors_;
    }

private:
    bool over_budget() {
        if (budget_.max_nodes && nodes_ > budget_.max_nodes) return true;
        if (budget_.max_ms && (nodes_ & 1023) == 0 && clock_.ms() > double(budget_.max_ms))
            return true;
        return false;
    }

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.n(); ++v) {
            if (colors_[v] != -1) continue;
            Bitset seen(k_ + 1);
            int sat = 0;
            g_.neighbors(v).for_each([&](int w) {
                if (colors_[w] != -1 && !seen.test(colors_[w])) {
                    seen.set(colors_[w]);
                    ++sat;
                }
            });
            int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool rec(int colored) {
        if (colored == g_.n()) return true;
        ++nodes_;
        if (exhausted_ || over_budget()) {
            exhausted_ = true;
            return false;
        }
        int v = pick_vertex();
        Bitset forbidden(k_);
        int max_used = -1;
        for (int w = 0; w < g_.n(); ++w)
            if (colors_[w] != -1) {
                max_used = std::max(max_used, colors_[w]);
                if (g_.has_edge(v, w)) forbidden.set(colors_[w]);
            }
        // trying at most one fresh color breaks color-permutation symmetry
        int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (forbidden.test(c)) continue;
            colors_[v] = c;
            if (rec(colored + 1)) return true;
            colors_[v] = -1;
            if (exhausted_) return false;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    Budget budget_;
    std::uint64_t nodes_;
    const Stopwatch& clock_;
    std::vector<int> colors_;
    bool exhausted_ = false;
};

inline std::vector<int> greedy_dsatur_coloring(const Graph& g) {
    std::vector<int> colors(g.n(), -1);
    for (int step = 0; step < g.n(); ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.n(); ++v) {
            if (colors[v] != -1) continue;
            std::vector<bool> seen(g.n() + 1, false);
            int sat = 0;
            g.neighbors(v).for_each([&](int w) {
                if (colors[w] != -1 && !seen[colors[w]]) {
                    seen[colors[w]] = true;
                    ++sat;
                }
            });
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g.degree(v);
            }
        }
        std::vector<bool> used(g.n() + 1, false);
        g.neighbors(best).for_each([&](int w) {
            if (colors[w] != -1) used[colors[w]] = true;
        });
        int c = 0;
        while (used[c]) ++c;
        colors[best] = c;
    }
    return colors;
}

} // namespace detail

// Exact chromatic number with a proper-coloring witness: clique lower bound,
// DSATUR greedy upper bound, then iterative k-colorability backtracking.
inline SolveReport chromatic_number(const Graph& g, std::optional<int> ub_hint = std::nullopt,
                                    Budget budget = {}) {
    detail::Stopwatch clock;
    SolveReport rep;
    if (g.n() == 0) {
        rep.value = 0;
        return rep;
    }
    SolveReport clq = max_clique(g, budget);
    rep.nodes = clq.nodes;
    if (clq.status == SolveStatus::BudgetExhausted) {
        rep.status = SolveStatus::BudgetExhausted;
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    int lb = clq.value;
    std::vector<int> greedy = detail::greedy_dsatur_coloring(g);
    int ub = *std::max_element(greedy.begin(), greedy.end()) + 1;
    // a hint below the greedy bound is verified by the solver before use, so
    // a bad hint can never produce a wrong value
    if (ub_hint && *ub_hint >= lb && *ub_hint < ub) {
        detail::KColorSolver hint_solver(g, *ub_hint, budget, rep.nodes, clock);
        bool exhausted = false;
        if (auto colors = hint_solver.solve(exhausted, rep.nodes); colors && !exhausted) {
            ub = *ub_hint;
            greedy = *colors;
        }
    }
    if (ub == lb) {
        rep.value = lb;
        rep.witness = greedy;
        rep.elapsed_ms = clock.ms();
        return rep;
    }
    for (int k = lb; k <= ub; ++k) {
        if (k == ub) { // the greedy coloring already witnesses ub
            rep.value = ub;
            rep.witness = greedy;
            break;
        }
        detail::KColorSolver solver(g, k, budget, rep.nodes, clock);
        bool exhausted = false;
        auto colors = solver.solve(exhausted, rep.nodes);
        if (exhausted) {
            rep.status = SolveStatus::BudgetExhausted;
            break;
        }
        if (colors) {
            rep.value = k;
            rep.witness = *colors;
            break;
        }
    }
    rep.elapsed_ms = clock.ms();
    return rep;
}

namespace detail {

inline void enumerate_d_cliques(const Graph& g, int d, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    Bitset cand(g.n());
    auto rec = [&](auto&& self, Bitset allowed, int last) -> void {
        if (int(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int v = allowed.find_next(last); v != -1; v = allowed.find_next(v)) {
            cur.push_back(v);
            self(self, allowed & g.neighbors(v), v);
            cur.pop_back();
        }
    };
    Bitset all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    rec(rec, all, -1);
}

} // namespace detail

// Exact-cover backtracking over all d-cliques: always covers the lowest
// uncovered vertex next, so the first partition found is deterministic.
inline std::optional<CliquePartition> clique_partition(const Graph& g, int d) {
    if (d <= 0 || g.n() % d != 0)
        throw std::invalid_argument("clique_partition: d must divide |V|");
    std::vector<std::vector<int>> cliques;
    detail::enumerate_d_cliques(g, d, cliques);
    std::vector<Bitset> masks;
    masks.reserve(cliques.size());
    for (const auto& c : cliques) {
        Bitset b(g.n());
        for (int v : c) b.set(v);
        masks.push_back(b);
    }
    std::vector<std::vector<int>> at(g.n());
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (int v : cliques[i]) at[v].push_back(int(i));

    std::vector<int> chosen;
    Bitset covered(g.n());
    auto rec = [&](auto&& self, int ncovered) -> bool {
        if (ncovered == g.n()) return true;
        int v = 0;
        while (covered.test(v)) ++v;
        for (int ci : at[v]) {
            if (masks[ci].intersects(covered)) continue;
            chosen.push_back(ci);
            covered |= masks[ci];
            if (self(self, ncovered + d)) return true;
            chosen.pop_back();
            covered.and_not(masks[ci]);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    CliquePartition cp;
    cp.d = d;
    for (int ci : chosen) cp.parts.push_back(cliques[ci]);
    return cp;
}

namespace detail {

// Transversal of the given vertex groups that is a coclique: exactly one
// vertex per group, pairwise nonadjacent. Groups need not have equal sizes.
// Always fills the group with the fewest surviving candidates next.
inline std::optional<std::vector<int>> transversal_coclique_search(
    const Graph& g, const std::vector<std::vector<int>>& groups) {
    int k = int(groups.size());
    std::vector<Bitset> group_mask(k, Bitset(g.n()));
    for (int i = 0; i < k; ++i)
        for (int v : groups[i]) group_mask[i].set(v);

    std::vector<int> pick(k, -1);
    std::vector<bool> done(k, false);
    Bitset forbidden(g.n());
    auto rec = [&](auto&& self, int depth) -> bool {
        if (depth == k) return true;
        int gi = -1, gcount = -1;
        for (int i = 0; i < k; ++i) {
            if (done[i]) continue;
            Bitset avail = group_mask[i];
            avail.and_not(forbidden);
            int c = avail.count();
            if (gi == -1 || c < gcount) {
                gi = i;
                gcount = c;
            }
            if (c == 0) return false;
        }
        Bitset avail = group_mask[gi];
        avail.and_not(forbidden);
        done[gi] = true;
        for (int v = avail.find_first(); v != -1; v = avail.find_next(v)) {
            pick[gi] = v;
            Bitset saved = forbidden;
            forbidden |= g.neighbors(v);
            forbidden.set(v);
            if (self(self, depth + 1)) return true;
            forbidden = saved;
            pick[gi] = -1;
        }
        done[gi] = false;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return pick;
}

} // namespace detail

// Coclique transversal of a clique partition if one exists; none means the
// pair (g, cp) is a Kochen-Specker configuration. The result is aligned with
// cp.parts: entry i is the vertex chosen from part i.
inline std::optional<std::vector<int>> ks_transversal_search(const Graph& g,
                                                             const CliquePartition& cp) {
    if (!verify_clique_partition(g, cp))
        throw std::invalid_argument("ks_transversal_search: invalid clique partition");
    return detail::transversal_coclique_search(g, cp.parts);
}

} // namespace qgraph

#endif
