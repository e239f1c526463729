// qgraph: build the graph families, compute exact parameters, and verify
// projector certificates from the command line.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "qgraph/embeddings.hpp"
#include "qgraph/finitefield.hpp"
#include "qgraph/io.hpp"
#include "qgraph/iso.hpp"
#include "qgraph/qcert.hpp"
#include "qgraph/reproduce.hpp"
#include "qgraph/solvers.hpp"
#include "qgraph/spectra.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerdictMismatch = 1;
constexpr int kUsage = 2;
constexpr int kBudgetExhausted = 3;

qgraph::Budget global_budget() {
    qgraph::Budget b;
    if (const char* ms = std::getenv("QGRAPH_BUDGET_MS")) b.max_ms = std::atoll(ms);
    return b;
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        qgraph::save_text(out_path, j.dump(2) + "\n");
}

int exit_for(const qgraph::SolveReport& rep) {
    return rep.status == qgraph::SolveStatus::Exact ? kOk : kBudgetExhausted;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace qgraph;

    CLI::App app{"exact graph parameters and projector certificates"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a named graph family");
    std::string family, build_out, vectors_out, format = "json";
    long long prime = 3;
    build->add_option("family", family, "piovesan|g120|cay-s4|cay-s5|er|er-prime|g13|g14")
        ->required();
    build->add_option("-p,--prime", prime, "odd prime for er/er-prime");
    build->add_option("-o,--output", build_out, "graph output file (default stdout)");
    build->add_option("--vectors-out", vectors_out, "also write the vector set");
    build->add_option("--format", format, "json|dot")->check(CLI::IsMember({"json", "dot"}));

    // parameter subcommands
    auto* alpha = app.add_subcommand("alpha", "exact independence number");
    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    auto* inertia_cmd = app.add_subcommand("inertia", "exact adjacency inertia and bound");
    std::string graph_in, report_out;
    for (auto* c : {alpha, chi, inertia_cmd}) {
        c->add_option("graph", graph_in, "graph JSON file")->required();
        c->add_option("-o,--output", report_out, "report output file (default stdout)");
    }

    auto* partition = app.add_subcommand("partition", "find a d-clique partition");
    int part_d = 4;
    std::string part_graph, part_out;
    partition->add_option("-d,--size", part_d, "clique size")->required();
    partition->add_option("graph", part_graph, "graph JSON file")->required();
    partition->add_option("-o,--output", part_out, "partition output file");

    auto* ks = app.add_subcommand("ks-check", "transversal-coclique search over a partition");
    std::string ks_graph, ks_part;
    ks->add_option("graph", ks_graph)->required();
    ks->add_option("partition", ks_part)->required();

    auto* viso = app.add_subcommand("verify-iso", "check a vertex bijection is an isomorphism");
    std::string vg, vh, vmap;
    viso->add_option("graph-a", vg)->required();
    viso->add_option("graph-b", vh)->required();
    viso->add_option("map", vmap, "JSON integer array")->required();

    auto* mkcert = app.add_subcommand("make-cert", "build a certificate");
    std::string mc_vectors, mc_part, mc_out;
    mkcert->add_option("--from-partition", mc_part, "clique partition JSON")->required();
    mkcert->add_option("vectors", mc_vectors, "vector set JSON")->required();
    mkcert->add_option("-o,--output", mc_out, "certificate output file");

    auto* vcert = app.add_subcommand("verify-cert", "verify a certificate against a graph");
    auto* gapw = app.add_subcommand("gap-witness", "classical coclique or Kochen-Specker verdict");
    std::string c_graph, c_cert;
    for (auto* c : {vcert, gapw}) {
        c->add_option("graph", c_graph)->required();
        c->add_option("cert", c_cert)->required();
    }

    auto* nsp = app.add_subcommand("nullspace", "rational nullspace of a vector set");
    std::string ns_vectors;
    nsp->add_option("vectors", ns_vectors)->required();

    auto* repro = app.add_subcommand("reproduce", "run a named end-to-end claim check");
    std::string claim;
    repro->add_option("claim", claim, "claim id, or 'list'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    Budget budget = global_budget();

    try {
        if (*build) {
            Graph g(1);
            std::optional<VectorSet> vs;
            if (family == "piovesan") {
                vs = piovesan_vectors();
                g = gp_graph();
            } else if (family == "g120") {
                vs = s5_vectors();
                g = g120_graph();
            } else if (family == "cay-s4") {
                g = cayley_graph(4, involutions(4));
            } else if (family == "cay-s5") {
                g = cayley_graph(5, involutions(5));
            } else if (family == "er") {
                g = er_graph(prime);
            } else if (family == "er-prime") {
                vs = lifted_points(prime);
                g = er_prime_graph(prime);
            } else if (family == "g13") {
                vs = lifted_points(3);
                g = g13();
            } else if (family == "g14") {
                g = g14();
            } else {
                std::cerr << "unknown family: " << family << "\n";
                return kUsage;
            }
            if (format == "dot") {
                if (build_out.empty())
                    std::cout << to_dot(g);
                else
                    save_text(build_out, to_dot(g));
            } else {
                emit(graph_to_json(g), build_out);
            }
            if (!vectors_out.empty()) {
                if (!vs) {
                    std::cerr << "family has no underlying vector set\n";
                    return kUsage;
                }
                save_text(vectors_out, vectorset_to_json(*vs).dump(2) + "\n");
            }
            return kOk;
        }

        if (*alpha) {
            Graph g = graph_from_json(load_json(graph_in));
            SolveReport rep = max_independent_set(g, budget);
            emit(report_to_json(rep), report_out);
            return exit_for(rep);
        }

        if (*chi) {
            Graph g = graph_from_json(load_json(graph_in));
            SolveReport rep = chromatic_number(g, std::nullopt, budget);
            emit(report_to_json(rep), report_out);
            return exit_for(rep);
        }

        if (*inertia_cmd) {
            Graph g = graph_from_json(load_json(graph_in));
            Inertia in = inertia(adjacency_matrix(g));
            nlohmann::json j = inertia_to_json(in);
            j["bound"] = inertia_bound(g);
            emit(j, report_out);
            return kOk;
        }

        if (*partition) {
            Graph g = graph_from_json(load_json(part_graph));
            auto cp = clique_partition(g, part_d);
            if (!cp) {
                std::cerr << "no partition into " << part_d << "-cliques exists\n";
                return kVerdictMismatch;
            }
            emit(partition_to_json(*cp), part_out);
            return kOk;
        }

        if (*ks) {
            Graph g = graph_from_json(load_json(ks_graph));
            CliquePartition cp = partition_from_json(load_json(ks_part));
            auto t = ks_transversal_search(g, cp);
            nlohmann::json j;
            j["kochen_specker"] = !t.has_value();
            if (t) j["coclique_transversal"] = *t;
            emit(j, "");
            return kOk;
        }

        if (*viso) {
            Graph a = graph_from_json(load_json(vg));
            Graph b = graph_from_json(load_json(vh));
            std::vector<int> map = load_json(vmap).get<std::vector<int>>();
            bool ok = verify_isomorphism(a, b, map);
            std::cout << (ok ? "isomorphism" : "not an isomorphism") << "\n";
            return ok ? kOk : kVerdictMismatch;
        }

        if (*mkcert) {
            VectorSet vs = vectorset_from_json(load_json(mc_vectors));
            CliquePartition cp = partition_from_json(load_json(mc_part));
            Certificate c = certificate_from_clique_partition(vs, cp);
            emit(certificate_to_json(c), mc_out);
            return kOk;
        }

        if (*vcert) {
            Graph g = graph_from_json(load_json(c_graph));
            Certificate c = certificate_from_json(load_json(c_cert));
            VerifyReport rep = verify(c, g);
            nlohmann::json j;
            j["valid"] = rep.ok;
            j["violations"] = rep.violations;
            emit(j, "");
            return rep.ok ? kOk : kVerdictMismatch;
        }

        if (*gapw) {
            Graph g = graph_from_json(load_json(c_graph));
            Certificate c = certificate_from_json(load_json(c_cert));
            GapWitnessResult res = alpha_gap_witness(g, c);
            nlohmann::json j;
            j["kochen_specker"] = res.is_ks;
            if (!res.is_ks) j["coclique"] = res.coclique;
            emit(j, "");
            return kOk;
        }

        if (*nsp) {
            VectorSet vs = vectorset_from_json(load_json(ns_vectors));
            auto basis = nullspace_of_int_rows(vs.vectors, vs.dim);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : basis) {
                nlohmann::json r = nlohmann::json::array();
                for (const auto& x : row) {
                    nlohmann::json entry;
                    entry["num"] = qgraph::detail::rat_to_ll(boost::multiprecision::numerator(x));
                    entry["den"] = qgraph::detail::rat_to_ll(boost::multiprecision::denominator(x));
                    r.push_back(entry);
                }
                rows.push_back(r);
            }
            nlohmann::json j;
            j["dimension"] = basis.size();
            j["basis"] = rows;
            emit(j, "");
            return kOk;
        }

        if (*repro) {
            if (claim == "list") {
                for (const auto& id : reproduce_claim_ids()) std::cout << id << "\n";
                return kOk;
            }
            auto ids = reproduce_claim_ids();
            if (std::find(ids.begin(), ids.end(), claim) == ids.end()) {
                std::cerr << "unknown claim id: " << claim << " (try 'list')\n";
                return kUsage;
            }
            ReproduceResult res = reproduce(claim, budget);
            for (const auto& c : res.checks)
                std::cout << (c.ok ? "ok   " : "FAIL ") << c.name
                          << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
            if (res.budget_exhausted) return kBudgetExhausted;
            return res.ok ? kOk : kVerdictMismatch;
        }
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "malformed JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
