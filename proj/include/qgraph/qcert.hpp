#ifndef QGRAPH_QCERT_HPP
#define QGRAPH_QCERT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"
#include "qgraph/linalg.hpp"
#include "qgraph/solvers.hpp"
#include "qgraph/vectors.hpp"

namespace qgraph {

// Dense matrix of exact rationals. Equality, idempotence and symmetry checks
// are exact; there is no tolerance anywhere.
class RatMat {
public:
    RatMat() = default;
    RatMat(int rows, int cols) : r_(rows), c_(cols), e_(std::size_t(rows) * cols, 0) {}

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static RatMat zero(int n) { return RatMat(n, n); }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& at(int i, int j) { return e_[std::size_t(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return e_[std::size_t(i) * c_ + j]; }

    bool is_zero_matrix() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }
    bool is_symmetric() const {
        if (r_ != c_) return false;
        for (int i = 0; i < r_; ++i)
            for (int j = i + 1; j < c_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    RatMat transpose() const {
        RatMat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Rat trace() const {
        Rat s = 0;
        for (int i = 0; i < std::min(r_, c_); ++i) s += at(i, i);
        return s;
    }

    RatMat operator*(const RatMat& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix dimension mismatch");
        RatMat out(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                if (at(i, k) == 0) continue;
                for (int j = 0; j < o.c_; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
            }
        return out;
    }
    RatMat& operator+=(const RatMat& o) {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }

    bool operator==(const RatMat& o) const = default;

    bool is_projector() const {
        return r_ == c_ && is_symmetric() && (*this) * (*this) == *this;
    }

    // tr(A B) for symmetric A, B without forming the product
    friend Rat trace_product(const RatMat& a, const RatMat& b) {
        Rat s = 0;
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < a.c_; ++j) s += a.at(i, j) * b.at(j, i);
        return s;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Rat> e_;
};

// vv^T / <v,v>: the rank-one projector onto the line of v.
inline RatMat projector_from_vector(const IntVec& v) {
    if (is_zero_vector(v)) throw std::invalid_argument("zero vector has no projector");
    int d = int(v.size());
    long long n2 = dot(v, v);
    RatMat p(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p.at(i, j) = Rat(v[i] * v[j], n2);
    return p;
}

// |V| x s grid of d x d rational projectors. Coclique grids witness
// alpha_q >= s; coloring grids witness chi_q <= s.
struct Certificate {
    enum class Kind { Coclique, Coloring };

    Kind kind = Kind::Coclique;
    int d = 0;
    int s = 0;
    std::vector<std::vector<RatMat>> grid; // [vertex][column]

    int n_vertices() const { return int(grid.size()); }
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> violations; // every violated condition, with indices

    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

// Exact check of every invariant of the certificate kind. All violations are
// reported, not just the first.
inline VerifyReport verify(const Certificate& c, const Graph& g) {
    if (c.n_vertices() != g.n())
        throw std::invalid_argument("certificate grid does not match |V(g)|");
    VerifyReport rep;
    int n = g.n();
    std::vector<std::vector<bool>> nz(n, std::vector<bool>(c.s));
    for (int v = 0; v < n; ++v) {
        if (int(c.grid[v].size()) != c.s)
            throw std::invalid_argument("certificate row has wrong length");
        for (int i = 0; i < c.s; ++i) {
            const RatMat& e = c.grid[v][i];
            if (e.rows() != c.d || e.cols() != c.d)
                throw std::invalid_argument("certificate entry has wrong dimension");
            nz[v][i] = !e.is_zero_matrix();
            if (!e.is_symmetric())
                rep.fail("entry (" + std::to_string(v) + "," + std::to_string(i) +
                         ") is not symmetric");
            else if (!(e * e == e))
                rep.fail("entry (" + std::to_string(v) + "," + std::to_string(i) +
                         ") is not idempotent");
        }
    }
    // row entries pairwise orthogonal (both kinds)
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < c.s; ++i)
            for (int j = i + 1; j < c.s; ++j)
                if (nz[v][i] && nz[v][j] && !(c.grid[v][i] * c.grid[v][j]).is_zero_matrix())
                    rep.fail("row " + std::to_string(v) + ": entries " + std::to_string(i) +
                             " and " + std::to_string(j) + " not orthogonal");
    if (c.kind == Certificate::Kind::Coclique) {
        for (int i = 0; i < c.s; ++i) {
            RatMat sum(c.d, c.d);
            for (int v = 0; v < n; ++v) sum += c.grid[v][i];
            if (!(sum == RatMat::identity(c.d)))
                rep.fail("column " + std::to_string(i) + " does not sum to identity");
        }
        for (auto [u, v] : g.edges())
            for (int i = 0; i < c.s; ++i)
                for (int j = 0; j < c.s; ++j) {
                    if (i == j) continue;
                    if (nz[v][i] && nz[u][j] && !(c.grid[v][i] * c.grid[u][j]).is_zero_matrix())
                        rep.fail("cross condition violated at edge (" + std::to_string(u) + "," +
                                 std::to_string(v) + "), columns (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
                }
    } else {
        for (int v = 0; v < n; ++v) {
            RatMat sum(c.d, c.d);
            for (int i = 0; i < c.s; ++i) sum += c.grid[v][i];
            if (!(sum == RatMat::identity(c.d)))
                rep.fail("row " + std::to_string(v) + " does not sum to identity");
        }
        for (auto [u, v] : g.edges())
            for (int i = 0; i < c.s; ++i)
                if (nz[v][i] && nz[u][i] && !(c.grid[v][i] * c.grid[u][i]).is_zero_matrix())
                    rep.fail("edge condition violated at edge (" + std::to_string(u) + "," +
                             std::to_string(v) + "), colour " + std::to_string(i));
    }
    return rep;
}

// The Prop-1 style certificate: entry (v, j) is the rank-one projector of
// vector v when v lies in part j, zero otherwise. Each part must be an
// orthogonal basis (pairwise orthogonal, part size = dim), which makes every
// column sum to the identity.
inline Certificate certificate_from_clique_partition(const VectorSet& vs,
                                                     const CliquePartition& cp) {
    validate(vs);
    if (cp.d != vs.dim)
        throw std::invalid_argument("part size must equal the ambient dimension");
    std::vector<int> part_of(vs.size(), -1);
    for (std::size_t j = 0; j < cp.parts.size(); ++j) {
        const auto& part = cp.parts[j];
        if (int(part.size()) != cp.d)
            throw std::invalid_argument("part has wrong size");
        for (std::size_t a = 0; a < part.size(); ++a) {
            if (part[a] < 0 || part[a] >= vs.size() || part_of[part[a]] != -1)
                throw std::invalid_argument("parts do not disjointly cover the vector set");
            part_of[part[a]] = int(j);
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (dot(vs.vectors[part[a]], vs.vectors[part[b]]) != 0)
                    throw std::invalid_argument(
                        "part is not an orthogonal basis; column sum would not be the identity");
        }
    }
    for (int v = 0; v < vs.size(); ++v)
        if (part_of[v] == -1) throw std::invalid_argument("vector not covered by any part");
    Certificate c;
    c.kind = Certificate::Kind::Coclique;
    c.d = vs.dim;
    c.s = int(cp.parts.size());
    c.grid.assign(vs.size(), std::vector<RatMat>(c.s, RatMat::zero(c.d)));
    for (int v = 0; v < vs.size(); ++v)
        c.grid[v][part_of[v]] = projector_from_vector(vs.vectors[v]);
    return c;
}

// The d=1 certificate of a classical coclique: row of vertex t in the
// coclique carries the 1x1 identity in column t, everything else is zero.
inline Certificate classical_certificate(const Graph& g, const std::vector<int>& coclique) {
    for (std::size_t a = 0; a < coclique.size(); ++a) {
        if (coclique[a] < 0 || coclique[a] >= g.n())
            throw std::invalid_argument("coclique index out of range");
        for (std::size_t b = a + 1; b < coclique.size(); ++b)
            if (g.has_edge(coclique[a], coclique[b]))
                throw std::invalid_argument("input is not a coclique");
    }
    Certificate c;
    c.kind = Certificate::Kind::Coclique;
    c.d = 1;
    c.s = int(coclique.size());
    c.grid.assign(g.n(), std::vector<RatMat>(c.s, RatMat::zero(1)));
    for (int t = 0; t < c.s; ++t) c.grid[coclique[t]][t].at(0, 0) = 1;
    return c;
}

// Removing a column of a valid coclique certificate keeps it valid.
inline Certificate drop_column(const Certificate& c, int j) {
    if (c.kind != Certificate::Kind::Coclique)
        throw std::invalid_argument("drop_column applies to coclique certificates");
    if (c.s < 2) throw std::invalid_argument("cannot drop the last column");
    if (j < 0 || j >= c.s) throw std::invalid_argument("invalid column index");
    Certificate out = c;
    out.s = c.s - 1;
    for (auto& row : out.grid) row.erase(row.begin() + j);
    return out;
}

// Orthogonality graph of the nonzero certificate entries under the trace
// inner product, together with the per-column vertex groups (a clique cover)
// and the (vertex, column) origin of each entry-vertex.
struct EntriesGraph {
    Graph graph;
    std::vector<std::pair<int, int>> origin; // entry-vertex -> (graph vertex, column)
    std::vector<std::vector<int>> columns;   // clique cover by certificate column
};

inline EntriesGraph entries_orthogonality_graph(const Certificate& c) {
    EntriesGraph out;
    out.columns.resize(c.s);
    for (int v = 0; v < c.n_vertices(); ++v)
        for (int i = 0; i < c.s; ++i)
            if (!c.grid[v][i].is_zero_matrix()) {
                out.columns[i].push_back(int(out.origin.size()));
                out.origin.emplace_back(v, i);
            }
    int m = int(out.origin.size());
    out.graph = Graph(m);
    for (int a = 0; a < m; ++a) {
        auto [va, ia] = out.origin[a];
        for (int b = a + 1; b < m; ++b) {
            auto [vb, ib] = out.origin[b];
            if (trace_product(c.grid[va][ia], c.grid[vb][ib]) == 0) out.graph.add_edge(a, b);
        }
    }
    return out;
}

// Outcome of the Kochen-Specker characterization: either a classical coclique
// of size s recovered from a coclique transversal of the entries graph, or
// the verdict that the entries form a projective Kochen-Specker set.
struct GapWitnessResult {
    bool is_ks = false;
    std::vector<int> coclique; // empty when is_ks
};

inline GapWitnessResult alpha_gap_witness(const Graph& g, const Certificate& c) {
    if (c.kind != Certificate::Kind::Coclique)
        throw std::invalid_argument("alpha_gap_witness requires a coclique certificate");
    if (!verify(c, g).ok) throw std::invalid_argument("invalid certificate");
    EntriesGraph eg = entries_orthogonality_graph(c);
    auto transversal = detail::transversal_coclique_search(eg.graph, eg.columns);
    GapWitnessResult out;
    if (!transversal) {
        out.is_ks = true;
        return out;
    }
    for (int ev : *transversal) out.coclique.push_back(eg.origin[ev].first);
    std::sort(out.coclique.begin(), out.coclique.end());
    // map back via the selection rule and re-verify the classical witness
    if (int(out.coclique.size()) != c.s)
        throw std::logic_error("transversal picked a vertex twice");
    for (std::size_t a = 0; a < out.coclique.size(); ++a)
        for (std::size_t b = a + 1; b < out.coclique.size(); ++b)
            if (out.coclique[a] == out.coclique[b] ||
                g.has_edge(out.coclique[a], out.coclique[b]))
                throw std::logic_error("recovered set is not a coclique");
    return out;
}

// v -> vv^T/<v,v>: vector-to-projector homomorphism of orthogonality graphs.
inline RatMat g_map(const IntVec& v) { return projector_from_vector(v); }

// P -> P e_k for the first standard basis vector with P e_k != 0.
inline RatVec h_map(const RatMat& p) {
    if (p.is_zero_matrix()) throw std::invalid_argument("h_map: zero projector");
    for (int k = 0; k < p.cols(); ++k) {
        bool nonzero = false;
        for (int i = 0; i < p.rows(); ++i)
            if (p.at(i, k) != 0) {
                nonzero = true;
                break;
            }
        if (nonzero) {
            RatVec out(p.rows());
            for (int i = 0; i < p.rows(); ++i) out[i] = p.at(i, k);
            return out;
        }
    }
    throw std::invalid_argument("h_map: zero projector");
}

} // namespace qgraph

#endif
