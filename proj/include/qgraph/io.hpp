#ifndef QGRAPH_IO_HPP
#define QGRAPH_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qgraph/graph.hpp"
#include "qgraph/qcert.hpp"
#include "qgraph/solvers.hpp"
#include "qgraph/spectra.hpp"
#include "qgraph/vectors.hpp"

namespace qgraph {

using nlohmann::json;

inline json graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

inline Graph graph_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Graph g(n);
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("labels")) g.labels = j["labels"].get<std::vector<std::string>>();
    return g;
}

inline json vectorset_to_json(const VectorSet& vs) {
    json j;
    j["dim"] = vs.dim;
    j["vectors"] = vs.vectors;
    if (!vs.tags.empty()) j["tags"] = vs.tags;
    return j;
}

inline VectorSet vectorset_from_json(const json& j) {
    VectorSet vs;
    vs.dim = j.at("dim").get<int>();
    vs.vectors = j.at("vectors").get<std::vector<IntVec>>();
    if (j.contains("tags")) vs.tags = j["tags"].get<std::vector<std::string>>();
    validate(vs);
    return vs;
}

inline json partition_to_json(const CliquePartition& cp) {
    return json{{"d", cp.d}, {"parts", cp.parts}};
}

inline CliquePartition partition_from_json(const json& j) {
    CliquePartition cp;
    cp.d = j.at("d").get<int>();
    cp.parts = j.at("parts").get<std::vector<std::vector<int>>>();
    return cp;
}

namespace detail {

inline long long rat_to_ll(const boost::multiprecision::cpp_int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::out_of_range("rational component too large for JSON");
    return x.convert_to<long long>();
}

} // namespace detail

inline json certificate_to_json(const Certificate& c) {
    json j;
    j["kind"] = c.kind == Certificate::Kind::Coclique ? "coclique" : "coloring";
    j["d"] = c.d;
    j["s"] = c.s;
    json rows = json::array();
    for (const auto& row : c.grid) {
        json jr = json::array();
        for (const auto& e : row) {
            if (e.is_zero_matrix()) {
                jr.push_back("zero");
                continue;
            }
            json m = json::array();
            for (int i = 0; i < e.rows(); ++i) {
                json r = json::array();
                for (int k = 0; k < e.cols(); ++k)
                    r.push_back({{"num", detail::rat_to_ll(numerator(e.at(i, k)))},
                                 {"den", detail::rat_to_ll(denominator(e.at(i, k)))}});
                m.push_back(r);
            }
            jr.push_back(m);
        }
        rows.push_back(jr);
    }
    j["entries"] = rows;
    return j;
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "coclique")
        c.kind = Certificate::Kind::Coclique;
    else if (kind == "coloring")
        c.kind = Certificate::Kind::Coloring;
    else
        throw std::invalid_argument("certificate kind must be coclique or coloring");
    c.d = j.at("d").get<int>();
    c.s = j.at("s").get<int>();
    for (const auto& jr : j.at("entries")) {
        std::vector<RatMat> row;
        for (const auto& je : jr) {
            if (je.is_string()) {
                if (je.get<std::string>() != "zero")
                    throw std::invalid_argument("unknown certificate entry token");
                row.push_back(RatMat::zero(c.d));
                continue;
            }
            RatMat m(c.d, c.d);
            for (int i = 0; i < c.d; ++i)
                for (int k = 0; k < c.d; ++k) {
                    const auto& cell = je.at(i).at(k);
                    m.at(i, k) = Rat(cell.at("num").get<long long>(),
                                     cell.at("den").get<long long>());
                }
            row.push_back(std::move(m));
        }
        if (int(row.size()) != c.s) throw std::invalid_argument("certificate row length mismatch");
        c.grid.push_back(std::move(row));
    }
    return c;
}

inline json inertia_to_json(const Inertia& in) {
    return json{{"n_minus", in.n_minus}, {"n_zero", in.n_zero}, {"n_plus", in.n_plus}};
}

inline json report_to_json(const SolveReport& rep) {
    json j;
    j["status"] = rep.status == SolveStatus::Exact ? "exact" : "budget exhausted";
    if (rep.status == SolveStatus::Exact) {
        j["value"] = rep.value;
        j["witness"] = rep.witness;
    }
    j["nodes_explored"] = rep.nodes;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) {
        os << "  " << v;
        if (!g.labels.empty()) os << " [label=\"" << g.labels[v] << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

} // namespace qgraph

#endif
