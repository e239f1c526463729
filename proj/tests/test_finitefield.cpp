#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <set>

#include "qgraph/finitefield.hpp"
#include "qgraph/iso.hpp"
#include "qgraph/solvers.hpp"

using namespace qgraph;

TEST_CASE("projective point representatives") {
    for (long long p : {3, 5, 7, 11})
        CHECK((long long)projective_points(p).size() == p * p + p + 1);

    auto pts = projective_points(3);
    CHECK(pts.size() == 13);
    bool found = false;
    for (const auto& v : pts)
        if (v.coords == std::array<long long, 3>{1, 2, 2}) found = true;
    CHECK(found);

    CHECK_THROWS(projective_points(4));
    CHECK_THROWS(projective_points(2));
    CHECK_THROWS(projective_points(9));
}

TEST_CASE("every nonzero vector is a multiple of exactly one representative") {
    for (long long p : {3, 5, 7, 11}) {
        auto pts = projective_points(p);
        std::set<std::array<long long, 3>> covered;
        for (const auto& v : pts)
            for (long long l = 1; l < p; ++l) {
                std::array<long long, 3> m{v.coords[0] * l % p, v.coords[1] * l % p,
                                           v.coords[2] * l % p};
                CHECK(covered.insert(m).second);  // each multiple hit once
            }
        CHECK((long long)covered.size() == p * p * p - 1);
    }
}

TEST_CASE("symmetric lift") {
    CHECK(symmetric_lift(FpVec{5, {1, 2, 0}}) == IntVec{1, 2, 0});
    CHECK(symmetric_lift(FpVec{5, {1, 3, 4}}) == IntVec{1, -2, -1});
    CHECK(symmetric_lift(FpVec{3, {0, 1, 2}}) == IntVec{0, 1, -1});

    for (long long p : {3, 5, 7, 11})
        for (const auto& v : projective_points(p)) {
            IntVec l = symmetric_lift(v);
            for (int i = 0; i < 3; ++i) {
                CHECK(((l[i] % p) + p) % p == v.coords[i]);  // same residue class
                CHECK(std::abs(l[i]) <= (p - 1) / 2);
            }
        }
}

TEST_CASE("mod-p orthogonality is lift-independent") {
    for (long long p : {3, 5, 7}) {
        auto pts = projective_points(p);
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a; b < pts.size(); ++b) {
                long long s1 = 0, s2 = 0;
                IntVec la = symmetric_lift(pts[a]), lb = symmetric_lift(pts[b]);
                for (int i = 0; i < 3; ++i) {
                    s1 += pts[a].coords[i] * pts[b].coords[i];
                    s2 += la[i] * lb[i];
                }
                CHECK(s1 % p == ((s2 % p) + p) % p);
            }
    }
}

TEST_CASE("mod-p graph on 13 points") {
    Graph g = er_graph(3);
    CHECK(g.n() == 13);
    CHECK(find_isomorphism(g, g13()).has_value());

    // the point (1,1,1) is self-orthogonal mod 3 but carries no loop;
    // self-orthogonality is recorded as a flag instead
    VectorSet pts;
    pts.dim = 3;
    int idx_111 = -1;
    auto reps = projective_points(3);
    for (int i = 0; i < (int)reps.size(); ++i) {
        pts.vectors.push_back({reps[i].coords[0], reps[i].coords[1], reps[i].coords[2]});
        if (reps[i].coords == std::array<long long, 3>{1, 1, 1}) idx_111 = i;
    }
    REQUIRE(idx_111 >= 0);
    CHECK_FALSE(g.has_edge(idx_111, idx_111));
    auto flags = self_orthogonal_flags(pts, InnerForm::ModP, 3);
    CHECK(flags[idx_111]);
}

TEST_CASE("real orthogonality graph of the lifted points") {
    for (long long p : {3, 5, 7, 11}) CHECK((long long)er_prime_graph(p).n() == p * p + p + 1);
    for (long long p : {3, 5, 7}) CHECK(is_connected(er_prime_graph(p)));

    // for p = 11 real orthogonality is too sparse: exactly the four lifts
    // (1,±2,±4) are orthogonal to no other representative, so the graph is
    // one 129-vertex component plus four isolated vertices (the er-family
    // claim records connectivity for p = 11 too; that mismatch is reported
    // by reproduce/acceptance, not hidden here)
    Graph g11 = er_prime_graph(11);
    CHECK_FALSE(is_connected(g11));
    std::vector<int> isolated;
    for (int v = 0; v < g11.n(); ++v)
        if (g11.degree(v) == 0) isolated.push_back(v);
    CHECK(isolated.size() == 4);
    VectorSet v11 = lifted_points(11);
    for (int v : isolated) {
        CHECK(std::abs(v11.vectors[v][1]) == 2);
        CHECK(std::abs(v11.vectors[v][2]) == 4);
    }

    CHECK(find_isomorphism(er_prime_graph(3), g13()).has_value());

    // real orthogonality of lifts implies mod-p orthogonality
    for (long long p : {3, 5, 7, 11}) {
        Graph real = er_prime_graph(p);
        Graph modp = er_graph(p);
        for (auto [u, v] : real.edges()) CHECK(modp.has_edge(u, v));
    }
}

TEST_CASE("the 13- and 14-vertex graphs and their chromatic numbers") {
    Graph a = g13(), b = g14();
    CHECK(a.n() == 13);
    CHECK(b.n() == 14);
    CHECK(chromatic_number(a).value == 4);
    CHECK(chromatic_number(b).value == 5);
}
