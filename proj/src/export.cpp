#include "cyclekit/export.hpp"

#include <ostream>
#include <sstream>

#include "cyclekit/cycle_space.hpp"

namespace cyclekit {

namespace {

std::string dec(const bigint& v) {
    return v.str();
}

ordered_json json_u32s(const std::vector<std::uint32_t>& xs) {
    return ordered_json(xs);
}

ordered_json component_json(const ComponentDecomposition& comp) {
    const auto& g = comp.sub.graph;
    const auto& map = comp.sub.node_map;
    ordered_json jc;
    jc["nodes"] = g.num_nodes();
    jc["edges"] = g.num_edges();
    jc["nu"] = comp.forest.nontree.size();
    jc["relevant_count"] = dec(comp.classes.relevant_count);

    auto& jfam = jc["families"] = ordered_json::array();
    for (const auto& f : comp.vres.families) {
        ordered_json jf;
        auto [u, v] = g.edge(comp.forest.nontree[f.root]);
        jf["root_edge"] = {map[u], map[v]};
        jf["odd"] = f.odd;
        jf["p"] = map[f.p];
        if (!f.odd) jf["q"] = map[f.q];
        jf["length"] = f.length;
        jf["count"] = dec(f.count);
        jfam.push_back(std::move(jf));
    }

    auto& jrows = jc["relevant_rows"] = ordered_json::array();
    for (const auto& r : comp.classes.rows) {
        ordered_json jr;
        jr["family"] = r.family;
        jr["length"] = r.length;
        jr["in_basis"] = r.in_basis;
        if (r.in_basis) jr["basis_pos"] = r.basis_pos;
        jr["expansion"] = json_u32s(r.expansion);
        jrows.push_back(std::move(jr));
    }

    auto& jpi = jc["pi_classes"] = ordered_json::array();
    for (const auto& p : comp.classes.pi_classes) {
        ordered_json jp;
        jp["length"] = p.length;
        jp["rank"] = p.basis_cols.size();
        jp["rows"] = json_u32s(p.rows);
        jp["sli"] = json_u32s(p.sli_rows);
        jpi.push_back(std::move(jp));
    }

    auto& jsli = jc["sli_classes"] = ordered_json::array();
    for (const auto& s : comp.classes.sli) {
        ordered_json js;
        js["pi"] = s.pi_class;
        js["length"] = s.length;
        js["in_basis"] = s.in_basis;
        js["members"] = json_u32s(s.members);
        js["count"] = dec(s.count);
        jsli.push_back(std::move(js));
    }

    auto& jpoly = jc["polyhedra"] = ordered_json::array();
    for (const auto& p : comp.classes.polyhedra) {
        ordered_json jp;
        jp["sli"] = p.sli_row;
        jp["rep_family"] = p.rep_family;
        jp["faces"] = json_u32s(p.faces_basis);
        jp["num_faces"] = p.num_faces;
        jp["unique"] = p.unique;
        jpoly.push_back(std::move(jp));
    }

    ordered_json jmcb;
    jmcb["cost"] = comp.mcb.cost;
    auto& jcyc = jmcb["cycles"] = ordered_json::array();
    for (const auto& c : comp.mcb.cycles) {
        ordered_json jy;
        jy["family"] = c.family;
        jy["length"] = c.length;
        jy["nodes"] = original_circulation(comp.sub, c.edges);
        jcyc.push_back(std::move(jy));
    }
    jc["mcb"] = std::move(jmcb);
    return jc;
}

} // namespace

std::vector<node_t> original_circulation(const Subgraph& sub, const EdgeCycle& cycle) {
    std::vector<node_t> loop = circulation(sub.graph, cycle);
    for (auto& u : loop) u = sub.node_map[u];
    return loop;
}

ordered_json decomposition_json(const Decomposition& d) {
    ordered_json j;
    j["schema"] = 1;
    j["n"] = d.graph.num_nodes();
    j["m"] = d.graph.num_edges();
    j["nu"] = d.graph.cyclomatic_number();
    auto& jcomps = j["components"] = ordered_json::array();
    for (const auto& comp : d.components) jcomps.push_back(component_json(comp));
    return j;
}

ordered_json basis_json(const Decomposition& d,
                        const std::vector<std::vector<EdgeCycle>>& per_component) {
    ordered_json j = ordered_json::array();
    for (std::size_t i = 0; i < per_component.size(); ++i) {
        ordered_json jc;
        jc["nu"] = d.components[i].forest.nontree.size();
        auto& jcyc = jc["cycles"] = ordered_json::array();
        for (const auto& c : per_component[i]) {
            ordered_json jy;
            jy["length"] = c.size();
            jy["nodes"] = original_circulation(d.components[i].sub, c);
            jcyc.push_back(std::move(jy));
        }
        j.push_back(std::move(jc));
    }
    return j;
}

ordered_json dual_graph_json(const DualGraph& dg) {
    ordered_json j;
    auto& jn = j["nodes"] = ordered_json::array();
    for (std::size_t i = 0; i < dg.node_weights.size(); ++i) {
        ordered_json node;
        node["id"] = i;
        node["length"] = dg.node_weights[i];
        jn.push_back(std::move(node));
    }
    auto& je = j["edges"] = ordered_json::array();
    for (const auto& e : dg.edges) {
        ordered_json edge;
        edge["a"] = e.a;
        edge["b"] = e.b;
        edge["weight"] = e.weight;
        je.push_back(std::move(edge));
    }
    return j;
}

std::string dual_graph_dot(const DualGraph& dg, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t i = 0; i < dg.node_weights.size(); ++i)
        out << "  c" << i << " [label=\"c" << i << " (len=" << dg.node_weights[i] << ")\"];\n";
    for (const auto& e : dg.edges)
        out << "  c" << e.a << " -- c" << e.b << " [label=\"" << e.weight << "\"];\n";
    out << "}\n";
    return out.str();
}

void write_rates_csv(std::ostream& out, const std::vector<RateDistribution>& dists) {
    out << "length,rate,source\n";
    for (const auto& d : dists) {
        const char* src = d.source == RateSource::mcb ? "mcb" : "relevant";
        for (const auto& [k, rate] : d.rates) out << k << "," << rate << "," << src << "\n";
    }
}

} // namespace cyclekit
