#ifndef QGRAPH_EMBEDDINGS_HPP
#define QGRAPH_EMBEDDINGS_HPP

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/linalg.hpp"
#include "qgraph/perm.hpp"
#include "qgraph/quat.hpp"
#include "qgraph/vectors.hpp"

namespace qgraph {

// Assigned quaternion coefficient vectors for transpositions, keyed by the
// 0-based moved pair (i < j). Every listed image must be nonzero.
using TranspositionImages = std::map<std::pair<int, int>, std::array<long long, 4>>;

// Canonical decomposition into transpositions: each cycle (a1 ... am) with a1
// minimal expands to (a1 am)(a1 a_{m-1})...(a1 a2); cycles are taken in
// ascending order of their minima. Composing the output right-to-left (the
// rightmost factor applied first, matching compose()) reproduces p.
inline std::vector<std::pair<int, int>> transposition_decomposition(const Perm& p) {
    std::vector<std::pair<int, int>> out;
    std::vector<bool> seen(p.degree(), false);
    for (int s = 0; s < p.degree(); ++s) {
        if (seen[s] || p.apply(s) == s) continue;
        std::vector<int> cyc;
        int x = s;
        do {
            seen[x] = true;
            cyc.push_back(x);
            x = p.apply(x);
        } while (x != s);
        for (std::size_t k = cyc.size() - 1; k >= 1; --k)
            out.emplace_back(cyc[0], cyc[k]);
    }
    return out;
}

// The transposition images fixed by the quaternion construction: the six S_4
// anchors plus, for degree 5, the four vectors extending to S_5.
inline TranspositionImages quaternion_images(int degree) {
    if (degree != 4 && degree != 5)
        throw std::invalid_argument("quaternion images are defined for degrees 4 and 5");
    TranspositionImages imgs;
    imgs[{0, 3}] = {0, 1, -1, 0}; // (14)
    imgs[{1, 2}] = {0, 1, 1, 0};  // (23)
    imgs[{0, 2}] = {0, 1, 0, 1};  // (13)
    imgs[{1, 3}] = {0, 1, 0, -1}; // (24)
    imgs[{0, 1}] = {0, 0, 1, -1}; // (12)
    imgs[{2, 3}] = {0, 0, 1, 1};  // (34)
    if (degree == 5) {
        imgs[{0, 4}] = {0, 1, -1, 1}; // (15)
        imgs[{1, 4}] = {0, 1, 1, -1}; // (25)
        imgs[{2, 4}] = {0, 1, 1, 1};  // (35)
        imgs[{3, 4}] = {0, -1, 1, 1}; // (45)
    }
    return imgs;
}

// Multiply the quaternions of the canonical decomposition left-to-right
// (identity -> (1,0,0,0)) and read off the coefficient 4-vector.
inline IntVec perm_to_vector(const Perm& p, const TranspositionImages& imgs) {
    Quat q = Quat::one();
    for (auto [i, j] : transposition_decomposition(p)) {
        auto it = imgs.find({i, j});
        if (it == imgs.end()) throw std::invalid_argument("missing transposition image");
        const auto& v = it->second;
        q = quat_mul(q, Quat{v[0], v[1], v[2], v[3]});
    }
    auto c = q.coeffs();
    return {c[0], c[1], c[2], c[3]};
}

// The 24 vectors of Piovesan's orthogonality graph, in table order.
inline VectorSet piovesan_vectors() {
    VectorSet vs;
    vs.dim = 4;
    vs.vectors = {
        {1, 0, 0, 0},  {0, 1, 0, 0},   {0, 0, 1, 0},   {0, 0, 0, 1},
        {0, 1, 1, 0},  {1, 0, 0, -1},  {1, 0, 0, 1},   {0, 1, -1, 0},
        {1, 1, 1, 1},  {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1},
        {1, -1, 0, 0}, {1, 1, 0, 0},   {0, 0, 1, 1},   {0, 0, 1, -1},
        {-1, 1, 1, 1}, {1, 1, 1, -1},  {1, -1, 1, 1},  {1, 1, -1, 1},
        {1, 0, 1, 0},  {0, 1, 0, 1},   {1, 0, -1, 0},  {0, 1, 0, -1}};
    return vs;
}

inline Graph gp_graph() { return orthogonality_graph(piovesan_vectors()); }

// The rows of the vector table: six 4-cliques partitioning V(G_p).
inline CliquePartition gp_partition() {
    CliquePartition cp;
    cp.d = 4;
    for (int r = 0; r < 6; ++r)
        cp.parts.push_back({4 * r, 4 * r + 1, 4 * r + 2, 4 * r + 3});
    return cp;
}

// 1-based indices of the vectors negated to form V'_p.
inline std::vector<int> gp_flip_list() { return {7, 10, 11, 13, 14, 17, 18, 20, 23}; }

// The published vertex correspondence between G_p (table order) and S_4:
// entry t is the permutation assigned to table vertex t+1.
inline std::vector<Perm> gp_cayley_correspondence() {
    const char* table[24] = {"()",     "(12)(34)", "(13)(24)", "(14)(23)", "(23)",   "(1243)",
                             "(1342)", "(14)",     "(124)",    "(234)",    "(143)",  "(132)",
                             "(1324)", "(1423)",   "(34)",     "(12)",     "(142)",  "(134)",
                             "(123)",  "(243)",    "(1432)",   "(13)",     "(1234)", "(24)"};
    std::vector<Perm> out;
    out.reserve(24);
    for (const char* s : table) out.push_back(parse_cycles(s, 4));
    return out;
}

// The quaternion-constructed vector for every element of S_n, in lexicographic
// one-line order (matching cayley_graph's vertex order).
inline VectorSet sn_vectors(int degree) {
    auto imgs = quaternion_images(degree);
    VectorSet vs;
    vs.dim = 4;
    for (const auto& p : symmetric_group(degree)) {
        IntVec v = perm_to_vector(p, imgs);
        if (is_zero_vector(v)) throw std::logic_error("construction produced a zero vector");
        vs.vectors.push_back(std::move(v));
        vs.tags.push_back(to_cycles(p));
    }
    return vs;
}

inline VectorSet s4_vectors() { return sn_vectors(4); }
inline VectorSet s5_vectors() { return sn_vectors(5); }

inline Graph g120_graph() { return orthogonality_graph(s5_vectors()); }

// Basis of {x in Q^4 : <x, c> = 0 for all c}; empty means only the zero vector.
inline std::vector<RatVec> extension_nullspace(const std::vector<IntVec>& constraints) {
    std::vector<std::vector<long long>> rows(constraints.begin(), constraints.end());
    return nullspace_of_int_rows(rows, 4);
}

} // namespace qgraph

#endif
