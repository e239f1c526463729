#ifndef QGRAPH_FINITEFIELD_HPP
#define QGRAPH_FINITEFIELD_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/vectors.hpp"

namespace qgraph {

// Vector over F_p^3 in projective-representative form: first nonzero
// coordinate equals 1, entries in {0..p-1}.
struct FpVec {
    long long p = 0;
    std::array<long long, 3> coords{};
};

inline void require_odd_prime(long long p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime >= 3");
}

// V' = {[0,0,1]} u {[0,1,a]} u {[1,a,b]}: one representative per
// one-dimensional subspace of F_p^3, p^2+p+1 points, lexicographic order.
inline std::vector<FpVec> projective_points(long long p) {
    require_odd_prime(p);
    std::vector<FpVec> out;
    out.push_back({p, {0, 0, 1}});
    for (long long a = 0; a < p; ++a) out.push_back({p, {0, 1, a}});
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) out.push_back({p, {1, a, b}});
    return out;
}

// Entries above (p-1)/2 are replaced by their negative residue, so every
// lifted entry lies in {-(p-1)/2, ..., (p-1)/2} and keeps its class mod p.
inline IntVec symmetric_lift(const FpVec& v) {
    IntVec out(3);
    for (int i = 0; i < 3; ++i)
        out[i] = v.coords[i] > (v.p - 1) / 2 ? v.coords[i] - v.p : v.coords[i];
    return out;
}

inline VectorSet lifted_points(long long p) {
    VectorSet vs;
    vs.dim = 3;
    for (const auto& pt : projective_points(p)) {
        IntVec v = symmetric_lift(pt);
        std::string tag = "[" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                          std::to_string(v[2]) + "]";
        vs.vectors.push_back(std::move(v));
        vs.tags.push_back(std::move(tag));
    }
    return vs;
}

// ER(p): mod-p orthogonality of the projective representatives.
// Self-orthogonal points (absolute points of the polarity) carry no loop; a
// "*" tag marks them.
inline Graph er_graph(long long p) {
    VectorSet vs = lifted_points(p);
    auto flags = self_orthogonal_flags(vs, InnerForm::ModP, p);
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) vs.tags[i] += "*";
    return orthogonality_graph(vs, InnerForm::ModP, p);
}

// ER'(p): real orthogonality of the symmetric-range lifts, same vertex order
// as er_graph(p).
inline Graph er_prime_graph(long long p) {
    return orthogonality_graph(lifted_points(p), InnerForm::RationalDot);
}

inline Graph g13() { return er_prime_graph(3); }
inline Graph g14() { return cone(g13()); }

} // namespace qgraph

#endif
