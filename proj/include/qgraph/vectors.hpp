#ifndef QGRAPH_VECTORS_HPP
#define QGRAPH_VECTORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

using IntVec = std::vector<long long>;

// Set of exact integer coordinate vectors sharing one ambient dimension.
// Duplicates are permitted; the zero vector is not.
struct VectorSet {
    int dim = 0;
    std::vector<IntVec> vectors;
    std::vector<std::string> tags; // optional, size 0 or vectors.size()

    int size() const { return int(vectors.size()); }
};

inline bool is_zero_vector(const IntVec& v) {
    for (long long x : v)
        if (x != 0) return false;
    return true;
}

inline void validate(const VectorSet& vs) {
    for (const auto& v : vs.vectors) {
        if (int(v.size()) != vs.dim)
            throw std::invalid_argument("vector dimension mismatch");
        if (is_zero_vector(v))
            throw std::invalid_argument("zero vector in vector set");
    }
}

inline long long dot(const IntVec& a, const IntVec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Inner-product selector for orthogonality graphs. Integer vectors make the
// rational dot product an exact integer test.
enum class InnerForm { RationalDot, ModP };

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline bool orthogonal(const IntVec& a, const IntVec& b, InnerForm form, long long p = 0) {
    long long s = dot(a, b);
    if (form == InnerForm::RationalDot) return s == 0;
    return ((s % p) + p) % p == 0;
}

// Vertex i ~ vertex j iff i != j and <v_i, v_j> = 0 under the selected form.
// A self-orthogonal vector (possible mod p) gets no loop.
inline Graph orthogonality_graph(const VectorSet& vs, InnerForm form = InnerForm::RationalDot,
                                 long long p = 0) {
    if (vs.vectors.empty()) throw std::invalid_argument("empty vector set");
    validate(vs);
    if (form == InnerForm::ModP && (p < 3 || !is_prime(p)))
        throw std::invalid_argument("mod-p form requires an odd prime");
    Graph g(vs.size());
    for (int i = 0; i < vs.size(); ++i)
        for (int j = i + 1; j < vs.size(); ++j)
            if (orthogonal(vs.vectors[i], vs.vectors[j], form, p)) g.add_edge(i, j);
    if (!vs.tags.empty()) g.labels = vs.tags;
    return g;
}

// Flags the vectors with <v,v> = 0 under the form (absolute points mod p).
inline std::vector<bool> self_orthogonal_flags(const VectorSet& vs, InnerForm form,
                                               long long p = 0) {
    std::vector<bool> out;
    out.reserve(vs.vectors.size());
    for (const auto& v : vs.vectors) out.push_back(orthogonal(v, v, form, p));
    return out;
}

// Entrywise scaled copies; the orthogonality graph is unchanged.
inline VectorSet sign_flip(const VectorSet& vs, const std::vector<int>& signs) {
    if (signs.size() != vs.vectors.size())
        throw std::invalid_argument("sign_flip: one sign per vector required");
    VectorSet out = vs;
    for (std::size_t i = 0; i < out.vectors.size(); ++i) {
        if (signs[i] == 0) throw std::invalid_argument("sign_flip: zero sign");
        if (signs[i] < 0)
            for (auto& x : out.vectors[i]) x = -x;
    }
    return out;
}

// True iff a and b span the same line.
inline bool parallel(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace qgraph

#endif
