#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclekit/decompose.hpp"
#include "cyclekit/errors.hpp"
#include "cyclekit/export.hpp"
#include "cyclekit/fixtures.hpp"
#include "cyclekit/intersections.hpp"
#include "cyclekit/io.hpp"
#include "cyclekit/oracle.hpp"
#include "cyclekit/sampler.hpp"
#include "cyclekit/statistics.hpp"

using namespace cyclekit;

namespace {

constexpr std::uint64_t kFrameSeedStride = 1000003;

struct CommonOpts {
    std::string input;
    std::string format = "auto";
    std::string output;
    std::string component = "all";
    std::uint64_t seed = 0;
    long long steps = -1; // -1: per-command default
};

void add_common(CLI::App* cmd, CommonOpts& o, bool takes_input = true) {
    if (takes_input)
        cmd->add_option("input", o.input, "graph file, or fixture:<name>")->required();
    cmd->add_option("--format", o.format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "json", "bonds"}));
    cmd->add_option("--output", o.output, "write the main artifact here instead of stdout");
    cmd->add_option("--component", o.component, "cyclic components to keep")
        ->check(CLI::IsMember({"all", "largest"}));
    cmd->add_option("--seed", o.seed, "random seed");
}

GraphFormat resolve_format(const CommonOpts& o) {
    return o.format == "auto" ? sniff_format(o.input) : parse_format(o.format);
}

DecomposeOptions decompose_opts(const CommonOpts& o, bool keep_dags = true) {
    DecomposeOptions d;
    d.keep_dags = keep_dags;
    d.largest_only = o.component == "largest";
    return d;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) fail(errc::invalid_argument, "cannot write '" + path + "'");
    out << text;
}

/* Single graphs print flat; bond trajectories print a "frames" array. */
void emit_json_frames(const std::vector<BondFrame>& frames, bool multi,
                      const std::vector<ordered_json>& reports, const std::string& path) {
    if (!multi) {
        emit(reports.front().dump(2) + "\n", path);
        return;
    }
    ordered_json j;
    j["schema"] = 1;
    auto& arr = j["frames"] = ordered_json::array();
    for (std::size_t i = 0; i < frames.size(); ++i) {
        ordered_json jf;
        jf["time"] = frames[i].time;
        for (auto& [k, v] : reports[i].items())
            if (k != "schema") jf[k] = std::move(v);
        arr.push_back(std::move(jf));
    }
    emit(j.dump(2) + "\n", path);
}

int run_decompose(const CommonOpts& o) {
    GraphFormat fmt = resolve_format(o);
    auto frames = load_graphs(o.input, fmt);
    std::vector<ordered_json> reports;
    for (const auto& f : frames)
        reports.push_back(decomposition_json(decompose(f.graph, decompose_opts(o, false))));
    emit_json_frames(frames, fmt == GraphFormat::bonds, reports, o.output);
    return 0;
}

int run_sample(const CommonOpts& o) {
    GraphFormat fmt = resolve_format(o);
    auto frames = load_graphs(o.input, fmt);
    std::vector<ordered_json> reports;
    for (std::size_t fi = 0; fi < frames.size(); ++fi) {
        Decomposition d = decompose(frames[fi].graph, decompose_opts(o));
        std::vector<std::vector<EdgeCycle>> bases;
        std::vector<std::uint64_t> steps_done;
        for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
            const auto& comp = d.components[ci];
            if (o.steps == 0) {
                // Zero steps short-circuits to the deterministic greedy basis.
                std::vector<EdgeCycle> basis;
                for (const auto& c : comp.mcb.cycles) basis.push_back(c.edges);
                bases.push_back(std::move(basis));
                steps_done.push_back(0);
                continue;
            }
            McbSampler s(comp, o.seed + kFrameSeedStride * fi + ci);
            s.run(o.steps < 0 ? s.default_steps() : static_cast<std::uint64_t>(o.steps));
            bases.push_back(s.realize());
            steps_done.push_back(s.steps_done());
        }
        ordered_json j;
        j["schema"] = 1;
        j["seed"] = o.seed;
        ordered_json comps = basis_json(d, bases);
        for (std::size_t ci = 0; ci < comps.size(); ++ci) comps[ci]["steps"] = steps_done[ci];
        j["components"] = std::move(comps);
        reports.push_back(std::move(j));
    }
    emit_json_frames(frames, fmt == GraphFormat::bonds, reports, o.output);
    return 0;
}

int run_dualgraph(const CommonOpts& o) {
    GraphFormat fmt = resolve_format(o);
    auto frames = load_graphs(o.input, fmt);
    std::vector<ordered_json> reports;
    std::string dot;
    std::size_t dot_index = 0;
    for (std::size_t fi = 0; fi < frames.size(); ++fi) {
        Decomposition d = decompose(frames[fi].graph, decompose_opts(o, false));
        ordered_json j;
        j["schema"] = 1;
        auto& comps = j["components"] = ordered_json::array();
        for (std::size_t ci = 0; ci < d.components.size(); ++ci) {
            const auto& comp = d.components[ci];
            std::vector<EdgeCycle> basis;
            for (const auto& c : comp.mcb.cycles) basis.push_back(c.edges);
            std::mt19937_64 rng(o.seed + kFrameSeedStride * fi + ci);
            unsigned n_max = o.steps < 0 ? 100 : static_cast<unsigned>(o.steps);
            PostprocessResult pr = postprocess_mcb(comp.sub.graph, std::move(basis), rng, n_max);
            DualGraph dg = build_dual_graph(comp.sub.graph, pr.mcb);
            dot += dual_graph_dot(dg, "dual" + std::to_string(dot_index++));
            ordered_json jc;
            jc["exchanges"] = pr.exchanges;
            jc["dual"] = dual_graph_json(dg);
            comps.push_back(std::move(jc));
        }
        reports.push_back(std::move(j));
    }
    // JSON is the report on stdout; the DOT drawing goes to --output if given.
    if (!o.output.empty()) emit(dot, o.output);
    std::vector<ordered_json> out_reports = std::move(reports);
    emit_json_frames(frames, fmt == GraphFormat::bonds, out_reports, "");
    return 0;
}

int run_bench(const std::vector<std::uint32_t>& ns, double mean_degree, std::uint32_t seeds,
              std::uint64_t seed_base, const std::string& output) {
    std::ostringstream out;
    out << "length,rate,source\n";
    for (std::uint32_t n : ns) {
        std::vector<RateDistribution> mcb_dists, rel_dists;
        double ratio_sum = 0.0;
        std::uint32_t ratio_n = 0;
        for (std::uint32_t i = 0; i < seeds; ++i) {
            RggSpec spec;
            spec.n = n;
            spec.mean_degree = mean_degree;
            spec.seed = seed_base + i;
            Graph g = generate_rgg(spec);
            DecomposeOptions dopts;
            dopts.keep_dags = false;
            Decomposition d = decompose(g, dopts);
            mcb_dists.push_back(ring_rates_from_decomposition(d, RateSource::mcb));
            rel_dists.push_back(ring_rates_from_decomposition(d, RateSource::relevant));
            bigint relevant = 0;
            std::uint64_t nu = 0;
            for (const auto& comp : d.components) {
                relevant += comp.classes.relevant_count;
                nu += comp.forest.nontree.size();
            }
            if (nu > 0) {
                ratio_sum += relevant.convert_to<double>() / static_cast<double>(nu);
                ++ratio_n;
            }
        }
        out << "# n=" << n << " seeds=" << seeds << " mean_relevant_per_nu=" << std::fixed
            << std::setprecision(6) << (ratio_n ? ratio_sum / ratio_n : 0.0) << "\n";
        out.unsetf(std::ios_base::fixed);
        out << std::setprecision(6);
        std::ostringstream rows;
        write_rates_csv(rows, {average_rates(mcb_dists), average_rates(rel_dists)});
        std::string body = rows.str();
        out << body.substr(body.find('\n') + 1); // drop the repeated header
    }
    emit(out.str(), output);
    return 0;
}

int run_oracle_check(const std::string& input, const std::string& format,
                     const std::string& expect_mcbs, bool override_cap) {
    std::vector<std::pair<std::string, Graph>> targets;
    if (input.empty()) {
        for (const auto& name : fixture_names()) targets.emplace_back(name, fixture_graph(name));
    } else {
        GraphFormat fmt = format == "auto" ? sniff_format(input) : parse_format(format);
        auto frames = load_graphs(input, fmt);
        for (std::size_t i = 0; i < frames.size(); ++i) {
            std::string label = frames.size() == 1 ? input : input + "@" + std::to_string(i);
            targets.emplace_back(label, frames[i].graph);
        }
    }

    std::cout << std::left << std::setw(24) << "graph" << std::right << std::setw(5) << "n"
              << std::setw(5) << "m" << std::setw(4) << "nu" << std::setw(9) << "relevant"
              << std::setw(8) << "mcbs" << std::setw(6) << "cost"
              << "  status\n";
    unsigned failures = 0;
    for (const auto& [name, g] : targets) {
        Decomposition d = decompose(g);
        OracleComparison cmp = compare_with_oracle(d, oracle_report(g, override_cap));
        bool ok = cmp.ok();
        if (!expect_mcbs.empty() && cmp.pipeline_mcbs != bigint(expect_mcbs)) ok = false;
        std::string status;
        if (ok) {
            status = "ok";
        } else {
            status = "MISMATCH(";
            const char* sep = "";
            auto flag = [&](bool part_ok, const char* label) {
                if (!part_ok) {
                    status += sep;
                    status += label;
                    sep = ",";
                }
            };
            flag(cmp.relevant_ok, "relevant");
            flag(cmp.mcb_count_ok, "mcbs");
            flag(cmp.cost_ok, "cost");
            flag(cmp.pi_ok, "pi");
            flag(cmp.sli_ok, "sli");
            flag(cmp.polyhedra_ok, "polyhedra");
            if (!expect_mcbs.empty() && cmp.pipeline_mcbs != bigint(expect_mcbs)) {
                status += sep;
                status += "expected-mcbs";
            }
            status += ")";
            ++failures;
        }
        std::cout << std::left << std::setw(24) << name << std::right << std::setw(5)
                  << g.num_nodes() << std::setw(5) << g.num_edges() << std::setw(4)
                  << g.cyclomatic_number() << std::setw(9) << cmp.pipeline_relevant.str()
                  << std::setw(8) << cmp.pipeline_mcbs.str() << std::setw(6) << cmp.pipeline_cost
                  << "  " << status << "\n";
    }
    if (failures) {
        std::cout << failures << " of " << targets.size() << " checks failed\n";
        return 4;
    }
    std::cout << "all " << targets.size() << " checks passed\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle structure toolkit: relevant-cycle families, minimum cycle bases,\n"
                 "interchange classes, basis sampling, and ring statistics"};
    app.require_subcommand(1);

    CommonOpts dec_o;
    auto* dec = app.add_subcommand("decompose", "full cycle-structure report as JSON");
    add_common(dec, dec_o);

    CommonOpts smp_o;
    auto* smp = app.add_subcommand("sample", "draw a uniform minimum cycle basis as JSON");
    add_common(smp, smp_o);
    smp->add_option("--steps", smp_o.steps,
                    "chain steps per component; 0 returns the greedy basis (default 10x rows)");

    CommonOpts dual_o;
    auto* dual = app.add_subcommand(
        "dualgraph", "postprocess the basis and report the cycle-adjacency dual");
    add_common(dual, dual_o);
    dual->add_option("--steps", dual_o.steps, "maximum basis exchanges (default 100)");

    std::vector<std::uint32_t> bench_ns;
    double bench_k = 3.0;
    std::uint32_t bench_seeds = 20;
    std::uint64_t bench_seed = 0;
    std::string bench_output;
    std::string bench_kind = "rgg";
    auto* bench = app.add_subcommand("bench", "ring-rate statistics over random geometric graphs");
    bench->add_option("kind", bench_kind)->check(CLI::IsMember({"rgg"}));
    bench->add_option("--n", bench_ns, "node counts (repeatable)")->required();
    bench->add_option("--mean-degree", bench_k, "target mean degree");
    bench->add_option("--seeds", bench_seeds, "graphs per node count");
    bench->add_option("--seed", bench_seed, "base seed");
    bench->add_option("--output", bench_output, "write the CSV here instead of stdout");

    std::string oc_input, oc_format = "auto", oc_expect;
    bool oc_override = false;
    auto* oc = app.add_subcommand("oracle-check",
                                  "compare the pipeline against brute-force enumeration");
    oc->add_option("input", oc_input, "graph file or fixture:<name>; default: all fixtures");
    oc->add_option("--format", oc_format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "json", "bonds"}));
    oc->add_option("--expect-mcbs", oc_expect, "fail unless the basis count equals this");
    oc->add_flag("--override-cap", oc_override, "lift the enumeration size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) return run_decompose(dec_o);
        if (smp->parsed()) return run_sample(smp_o);
        if (dual->parsed()) return run_dualgraph(dual_o);
        if (bench->parsed())
            return run_bench(bench_ns, bench_k, bench_seeds, bench_seed, bench_output);
        if (oc->parsed()) return run_oracle_check(oc_input, oc_format, oc_expect, oc_override);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case errc::parse_error:
        case errc::invalid_argument:
            return 2;
        case errc::not_converged:
            return 3;
        default:
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
