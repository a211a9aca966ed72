#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclekit/decompose.hpp"
#include "cyclekit/export.hpp"
#include "cyclekit/fixtures.hpp"
#include "cyclekit/intersections.hpp"
#include "cyclekit/io.hpp"
#include "cyclekit/oracle.hpp"
#include "cyclekit/sampler.hpp"
#include "cyclekit/statistics.hpp"

namespace py = pybind11;
using namespace cyclekit;

namespace {

RateSource source_from(const std::string& s) {
    if (s == "mcb") return RateSource::mcb;
    if (s == "relevant") return RateSource::relevant;
    fail(errc::invalid_argument, "source must be 'mcb' or 'relevant'");
}

std::vector<std::vector<std::vector<node_t>>> sample_mcb(const Graph& g, std::uint64_t seed,
                                                         long long steps) {
    Decomposition d = decompose(g);
    std::vector<std::vector<std::vector<node_t>>> out;
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& comp = d.components[ci];
        std::vector<EdgeCycle> basis;
        if (steps == 0) {
            for (const auto& c : comp.mcb.cycles) basis.push_back(c.edges);
        } else {
            McbSampler s(comp, seed + ci);
            s.run(steps < 0 ? s.default_steps() : static_cast<std::uint64_t>(steps));
            basis = s.realize();
        }
        std::vector<std::vector<node_t>> loops;
        for (const auto& c : basis) loops.push_back(original_circulation(comp.sub, c));
        out.push_back(std::move(loops));
    }
    return out;
}

std::string dualgraph_json(const Graph& g, std::uint64_t seed, unsigned max_exchanges) {
    Decomposition d = decompose(g);
    ordered_json j;
    j["schema"] = 1;
    auto& comps = j["components"] = ordered_json::array();
    for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
        const auto& comp = d.components[ci];
        std::vector<EdgeCycle> basis;
        for (const auto& c : comp.mcb.cycles) basis.push_back(c.edges);
        std::mt19937_64 rng(seed + ci);
        PostprocessResult pr = postprocess_mcb(comp.sub.graph, std::move(basis), rng, max_exchanges);
        DualGraph dg = build_dual_graph(comp.sub.graph, pr.mcb);
        ordered_json jc;
        jc["exchanges"] = pr.exchanges;
        jc["dual"] = dual_graph_json(dg);
        comps.push_back(std::move(jc));
    }
    return j.dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cycle-structure decomposition of undirected graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def(py::init<node_t, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def("num_nodes", &Graph::num_nodes)
        .def("num_edges", &Graph::num_edges)
        .def("edges", [](const Graph& g) { return g.edges(); })
        .def("degree", &Graph::degree, py::arg("u"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("cyclomatic_number", &Graph::cyclomatic_number)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.num_nodes()) +
                   ", m=" + std::to_string(g.num_edges()) + ")";
        });

    m.def("fixture_graph", &fixture_graph, py::arg("name"));
    m.def("fixture_names", &fixture_names);
    m.def("bracelet_graph", &bracelet_graph, py::arg("k"));

    m.def(
        "generate_rgg",
        [](std::uint32_t n, double mean_degree, std::uint64_t seed, bool periodic) {
            RggSpec spec;
            spec.n = n;
            spec.mean_degree = mean_degree;
            spec.seed = seed;
            spec.periodic = periodic;
            return generate_rgg(spec);
        },
        py::arg("n"), py::arg("mean_degree") = 3.0, py::arg("seed") = 0,
        py::arg("periodic") = true);

    m.def(
        "load_graphs",
        [](const std::string& path, const std::string& format) {
            GraphFormat fmt = format == "auto" ? sniff_format(path) : parse_format(format);
            std::vector<std::pair<std::uint64_t, Graph>> out;
            for (auto& f : load_graphs(path, fmt)) out.emplace_back(f.time, std::move(f.graph));
            return out;
        },
        py::arg("path"), py::arg("format") = "auto");

    m.def(
        "decompose_json", [](const Graph& g) { return decomposition_json(decompose(g)).dump(); },
        py::arg("graph"), "full decomposition report as a JSON string");

    m.def("sample_mcb", &sample_mcb, py::arg("graph"), py::arg("seed") = 0, py::arg("steps") = -1,
          "one minimum cycle basis per cyclic component, as node loops");

    m.def("dualgraph_json", &dualgraph_json, py::arg("graph"), py::arg("seed") = 0,
          py::arg("max_exchanges") = 100);

    m.def(
        "ring_rates",
        [](const Graph& g, const std::string& source) {
            return ring_rates_from_decomposition(decompose(g), source_from(source)).rates;
        },
        py::arg("graph"), py::arg("source") = "mcb");

    m.def(
        "fit_power_law",
        [](const std::map<std::uint32_t, double>& rates, std::uint32_t k_min,
           std::uint32_t k_max) {
            RateDistribution dist;
            dist.rates = rates;
            PowerLawFit fit = fit_power_law(dist, k_min, k_max);
            return std::make_pair(fit.alpha, fit.c);
        },
        py::arg("rates"), py::arg("k_min"), py::arg("k_max"));

    m.def(
        "oracle_check",
        [](const Graph& g) { return compare_with_oracle(decompose(g), oracle_report(g)).ok(); },
        py::arg("graph"), "true when the pipeline matches brute-force enumeration");
}
