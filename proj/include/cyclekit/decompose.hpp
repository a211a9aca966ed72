#pragma once

#include "cyclekit/classes.hpp"
#include "cyclekit/graph.hpp"
#include "cyclekit/mcb.hpp"
#include "cyclekit/vfamilies.hpp"

namespace cyclekit {

/*
 * Full cycle-structure decomposition of one cyclic biconnected component.
 * All indices (nodes, edges, coordinates) are local to `sub.graph`; use the
 * subgraph maps to translate back to the parent graph.
 */
struct ComponentDecomposition {
    Subgraph sub;
    SpanningForest forest;
    VFamilyResult vres;
    R0Matrix r0;
    McbBasis mcb;
    ClassDecomposition classes;
};

struct DecomposeOptions {
    unsigned workers = 1;
    bool keep_dags = true;   // needed later for family sampling
    bool largest_only = false; // keep only the component with the most coordinates
};

struct Decomposition {
    Graph graph;
    std::vector<ComponentDecomposition> components; // cyclic blocks, by lowest edge id
};

Decomposition decompose(const Graph& g, const DecomposeOptions& opts = {});

} // namespace cyclekit
