#ifndef QGRAPH_PERM_HPP
#define QGRAPH_PERM_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// Permutation of {1..n} stored 0-based in one-line notation.
// compose(a, b) is the function composition a∘b (b applied first).
class Perm {
public:
    Perm() = default;
    static Perm identity(int n) {
        Perm p;
        p.img_.resize(n);
        std::iota(p.img_.begin(), p.img_.end(), 0);
        return p;
    }
    static Perm from_images(std::vector<int> img) {
        std::vector<int> seen(img.size(), 0);
        for (int x : img) {
            if (x < 0 || x >= int(img.size()) || seen[x]++)
                throw std::invalid_argument("not a bijection");
        }
        Perm p;
        p.img_ = std::move(img);
        return p;
    }

    int degree() const { return int(img_.size()); }
    int apply(int x) const { return img_[x]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

inline Perm compose(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> img(a.degree());
    for (int x = 0; x < a.degree(); ++x) img[x] = a.apply(b.apply(x));
    return Perm::from_images(std::move(img));
}

inline Perm inverse(const Perm& a) {
    std::vector<int> img(a.degree());
    for (int x = 0; x < a.degree(); ++x) img[a.apply(x)] = x;
    return Perm::from_images(std::move(img));
}

inline int order(const Perm& a) {
    Perm p = a;
    int k = 1;
    while (!p.is_identity()) {
        p = compose(p, a);
        ++k;
    }
    return k;
}

// Disjoint-cycle notation on points 1..9, fixed points omitted, "()" = identity.
inline Perm parse_cycles(const std::string& s, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
        if (s[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
        ++i;
        std::vector<int> cyc;
        while (i < s.size() && s[i] != ')') {
            char c = s[i];
            if (c >= '1' && c <= '9') {
                int pt = c - '1';
                if (pt >= n) throw std::invalid_argument("cycle notation: point exceeds degree");
                cyc.push_back(pt);
            } else if (c != ' ' && c != ',') {
                throw std::invalid_argument("cycle notation: unexpected character");
            }
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("cycle notation: missing ')'");
        ++i;
        for (std::size_t k = 0; k < cyc.size(); ++k)
            img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    return Perm::from_images(std::move(img));
}

inline std::string to_cycles(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.degree(), false);
    for (int s = 0; s < p.degree(); ++s) {
        if (seen[s] || p.apply(s) == s) continue;
        out += '(';
        int x = s;
        do {
            seen[x] = true;
            out += char('1' + x);
            x = p.apply(x);
        } while (x != s);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

// Inverse-closed, identity-free set of equal-degree permutations.
struct ConnectionSet {
    std::vector<Perm> elems;

    void validate() const {
        if (elems.empty()) throw std::invalid_argument("empty connection set");
        int n = elems.front().degree();
        for (const auto& p : elems) {
            if (p.degree() != n) throw std::invalid_argument("connection set degree mismatch");
            if (p.is_identity()) throw std::invalid_argument("connection set contains identity");
            if (std::find(elems.begin(), elems.end(), inverse(p)) == elems.end())
                throw std::invalid_argument("connection set not inverse-closed");
        }
    }
};

// All non-identity g in S_n with g^2 = identity.
inline ConnectionSet involutions(int n) {
    if (n < 2) throw std::invalid_argument("involutions requires n >= 2");
    ConnectionSet c;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        Perm p = Perm::from_images(img);
        if (!p.is_identity() && compose(p, p).is_identity()) c.elems.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    return c;
}

inline ConnectionSet transpositions(int n) {
    ConnectionSet c;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            std::swap(img[i], img[j]);
            c.elems.push_back(Perm::from_images(std::move(img)));
        }
    return c;
}

// All n! elements of S_n in lexicographic one-line order.
inline std::vector<Perm> symmetric_group(int n) {
    std::vector<Perm> out;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do out.push_back(Perm::from_images(img));
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// Cay(S_n, c): vertices are the elements of S_n in lexicographic one-line
// order (so outputs are deterministic); g ~ h iff h∘g^{-1} is in c.
inline Graph cayley_graph(int n, const ConnectionSet& c) {
    c.validate();
    if (c.elems.front().degree() != n)
        throw std::invalid_argument("connection set degree differs from n");
    std::vector<Perm> elems = symmetric_group(n);
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = int(i);
    Graph g(int(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : c.elems) {
            int j = index.at(compose(s, elems[i]));
            if (int(i) < j) g.add_edge(int(i), j);
        }
    for (const auto& p : elems) g.labels.push_back(to_cycles(p));
    return g;
}

} // namespace qgraph

#endif
