#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qgraph/embeddings.hpp"
#include "qgraph/finitefield.hpp"
#include "qgraph/solvers.hpp"
#include "support/graph_enum.hpp"
#include "support/oracles.hpp"

using namespace qgraph;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) e.push_back({std::min(u, (u + 1) % n), std::max(u, (u + 1) % n)});
    return Graph::from_edges(n, e);
}

bool is_coclique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (g.has_edge(vs[a], vs[b])) return false;
    return true;
}

bool is_proper(const Graph& g, const std::vector<int>& color, int k) {
    if ((int)color.size() != g.n()) return false;
    for (int c : color)
        if (c < 0 || c >= k) return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

}  // namespace

TEST_CASE("max_independent_set basics") {
    for (int n = 1; n <= 8; ++n) CHECK(max_independent_set(complete(n)).value == 1);
    CHECK(max_independent_set(cycle(5)).value == 2);

    SolveReport rep = max_independent_set(gp_graph());
    CHECK(rep.value == 5);
    CHECK(is_coclique(gp_graph(), rep.witness));
    CHECK((int)rep.witness.size() == rep.value);
    CHECK(oracles::brute_alpha(gp_graph()) == 5);  // exhaustive over 2^24 subsets
}

TEST_CASE("max_independent_set with a budget reports exhaustion, never a value") {
    Budget tiny;
    tiny.max_nodes = 1;
    SolveReport rep = max_independent_set(g120_graph(), tiny);
    CHECK(rep.status == SolveStatus::BudgetExhausted);
}

TEST_CASE("chromatic_number basics") {
    CHECK(chromatic_number(complete(4)).value == 4);
    CHECK(chromatic_number(cycle(5)).value == 3);

    SolveReport rep = chromatic_number(g13());
    CHECK(rep.value == 4);
    CHECK(is_proper(g13(), rep.witness, rep.value));
}

TEST_CASE("a wrong upper-bound hint cannot corrupt the chromatic number") {
    CHECK(chromatic_number(complete(5), 2).value == 5);
    CHECK(chromatic_number(cycle(5), 3).value == 3);
    CHECK(chromatic_number(cycle(5), 100).value == 3);
}

TEST_CASE("clique_partition") {
    auto m = clique_partition(complete(4), 2);
    REQUIRE(m.has_value());
    CHECK(m->parts.size() == 2);
    CHECK(verify_clique_partition(complete(4), *m));

    auto gp = clique_partition(gp_graph(), 4);
    REQUIRE(gp.has_value());
    CHECK(gp->parts.size() == 6);
    CHECK(verify_clique_partition(gp_graph(), *gp));

    auto g120 = clique_partition(g120_graph(), 4);
    REQUIRE(g120.has_value());
    CHECK(g120->parts.size() == 30);
    CHECK(verify_clique_partition(g120_graph(), *g120));

    CHECK_FALSE(clique_partition(cycle(4), 4).has_value());
    CHECK_THROWS(clique_partition(cycle(5), 2));  // 2 does not divide 5
}

TEST_CASE("ks_transversal_search") {
    // the 6 table rows admit no coclique transversal
    CHECK_FALSE(ks_transversal_search(gp_graph(), gp_partition()).has_value());

    // a single 4-clique partitioned as itself: any one vertex works
    Graph k4 = complete(4);
    auto t = ks_transversal_search(k4, CliquePartition{4, {{0, 1, 2, 3}}});
    REQUIRE(t.has_value());
    CHECK(t->size() == 1);

    // two disjoint edges as two parts: a 2-vertex coclique transversal
    Graph m2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    auto t2 = ks_transversal_search(m2, CliquePartition{2, {{0, 1}, {2, 3}}});
    REQUIRE(t2.has_value());
    CHECK(t2->size() == 2);
    CHECK(is_coclique(m2, *t2));

    CHECK_THROWS(ks_transversal_search(m2, CliquePartition{2, {{0, 1}}}));  // not a partition
}

TEST_CASE("transversal verdicts are consistent with alpha") {
    // if no transversal exists, alpha < number of parts; if one exists it is
    // a coclique meeting every part once
    std::mt19937 rng(41);
    auto classes = testsupport::isomorphism_classes(6);
    for (const auto& adj : classes) {
        Graph g = testsupport::to_graph(adj);
        for (int d : {1, 2, 3}) {
            if (g.n() % d != 0) continue;
            auto cp = clique_partition(g, d);
            if (!cp) continue;
            auto t = ks_transversal_search(g, *cp);
            int alpha = max_independent_set(g).value;
            if (t) {
                CHECK((int)t->size() == (int)cp->parts.size());
                CHECK(is_coclique(g, *t));
                std::vector<bool> hit(cp->parts.size(), false);
                for (std::size_t i = 0; i < cp->parts.size(); ++i)
                    for (int v : cp->parts[i])
                        for (int x : *t)
                            if (x == v) hit[i] = true;
                for (bool h : hit) CHECK(h);
            } else {
                CHECK(alpha < (int)cp->parts.size());
            }
        }
    }
    (void)rng;
}

TEST_CASE("solver values match exhaustive oracles on every small graph") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& adj : testsupport::isomorphism_classes(n)) {
            Graph g = testsupport::to_graph(adj);
            SolveReport a = max_independent_set(g);
            CHECK(a.value == oracles::brute_alpha(g));
            CHECK(is_coclique(g, a.witness));
            SolveReport c = chromatic_number(g);
            CHECK(c.value == oracles::brute_chromatic(g));
            CHECK(is_proper(g, c.witness, c.value));
        }
}

TEST_CASE("solver results are deterministic") {
    Graph g = g13();
    SolveReport a1 = max_independent_set(g), a2 = max_independent_set(g);
    CHECK(a1.value == a2.value);
    CHECK(a1.witness == a2.witness);
    SolveReport c1 = chromatic_number(g), c2 = chromatic_number(g);
    CHECK(c1.value == c2.value);
    CHECK(c1.witness == c2.witness);
}
