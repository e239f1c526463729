#ifndef QGRAPH_GRAPH_HPP
#define QGRAPH_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/bitset.hpp"

namespace qgraph {

// Finite simple graph on dense 0-based vertex indices. Adjacency is kept as
// one bitset row per vertex; rows are always symmetric and loop-free.
// Labels are display metadata only and never affect semantics.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("edge index out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    long long edge_count() const {
        long long s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v))
                out.emplace_back(u, v);
        return out;
    }

    Graph complement() const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        g.labels = labels;
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    std::vector<std::string> labels; // optional, size 0 or n_

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
};

// Partition of the host graph's vertices into cliques of common size d.
struct CliquePartition {
    int d = 0;
    std::vector<std::vector<int>> parts;
};

// One new apex vertex (index n) adjacent to every original vertex.
inline Graph cone(const Graph& g) {
    Graph c(g.n() + 1);
    for (auto [u, v] : g.edges()) c.add_edge(u, v);
    for (int v = 0; v < g.n(); ++v) c.add_edge(v, g.n());
    if (!g.labels.empty()) {
        c.labels = g.labels;
        c.labels.push_back("apex");
    }
    return c;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("is_connected requires n >= 1");
    std::vector<int> stack{0};
    Bitset seen(g.n());
    seen.set(0);
    int found = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.neighbors(v).for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                ++found;
                stack.push_back(w);
            }
        });
    }
    return found == g.n();
}

// Vertices of the connected component containing v, in ascending order.
inline std::vector<int> connected_component(const Graph& g, int v) {
    std::vector<int> stack{v};
    Bitset seen(g.n());
    seen.set(v);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        g.neighbors(u).for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
        });
    }
    return seen.to_vector();
}

// Subgraph induced on `keep`, reindexed in ascending original order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> vs = keep;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (int v : vs)
        if (v < 0 || v >= g.n()) throw std::out_of_range("induced_subgraph: index out of range");
    Graph h(int(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) h.add_edge(int(i), int(j));
    if (!g.labels.empty())
        for (int v : vs) h.labels.push_back(g.labels[v]);
    return h;
}

inline bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// True iff the parts disjointly cover V(g) and each part induces a complete
// subgraph of size d.
inline bool verify_clique_partition(const Graph& g, const CliquePartition& cp) {
    Bitset covered(g.n());
    int total = 0;
    for (const auto& part : cp.parts) {
        if (int(part.size()) != cp.d) return false;
        for (int v : part) {
            if (v < 0 || v >= g.n() || covered.test(v)) return false;
            covered.set(v);
        }
        if (!is_clique(g, part)) return false;
        total += int(part.size());
    }
    return total == g.n();
}

} // namespace qgraph

#endif
