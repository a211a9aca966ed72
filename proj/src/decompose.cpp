#include "cyclekit/decompose.hpp"

#include <algorithm>

namespace cyclekit {

Decomposition decompose(const Graph& g, const DecomposeOptions& opts) {
    Decomposition d{g, {}};
    for (const BiconnectedComponent& bc : biconnected_components(g)) {
        if (bc.edge_ids.size() < 2) continue; // bridges carry no cycles
        ComponentDecomposition comp;
        comp.sub = extract_subgraph(g, bc.edge_ids);
        comp.forest = spanning_forest(comp.sub.graph);
        VFamilyOptions vopts;
        vopts.workers = opts.workers;
        vopts.keep_dags = opts.keep_dags;
        comp.vres = compute_vfamilies(comp.sub.graph, comp.forest, vopts);
        comp.r0 = build_r0(comp.vres.families,
                           static_cast<std::uint32_t>(comp.forest.nontree.size()));
        comp.mcb = compute_mcb(comp.vres.families, comp.r0,
                               static_cast<std::uint32_t>(comp.forest.nontree.size()));
        comp.classes = build_classes(comp.vres.families, comp.r0, comp.mcb);
        d.components.push_back(std::move(comp));
    }
    if (opts.largest_only && d.components.size() > 1) {
        auto best = std::max_element(d.components.begin(), d.components.end(),
                                     [](const ComponentDecomposition& a,
                                        const ComponentDecomposition& b) {
                                         return a.forest.nontree.size() < b.forest.nontree.size();
                                     });
        ComponentDecomposition keep = std::move(*best);
        d.components.clear();
        d.components.push_back(std::move(keep));
    }
    return d;
}

} // namespace cyclekit
