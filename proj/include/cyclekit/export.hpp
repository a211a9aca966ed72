#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyclekit/decompose.hpp"
#include "cyclekit/intersections.hpp"
#include "cyclekit/statistics.hpp"

namespace cyclekit {

using ordered_json = nlohmann::ordered_json;

/* Node loop of a component-local cycle, translated to parent-graph ids. */
std::vector<node_t> original_circulation(const Subgraph& sub, const EdgeCycle& cycle);

/*
 * Full report for one decomposition: families, relevant rows over basis
 * coordinates, interchange classes, polyhedra, and the basis itself.  Cycle
 * counts can exceed 2^64, so they are emitted as decimal strings.
 */
ordered_json decomposition_json(const Decomposition& d);

/* One concrete basis per component, as node loops in parent ids. */
ordered_json basis_json(const Decomposition& d,
                        const std::vector<std::vector<EdgeCycle>>& per_component);

ordered_json dual_graph_json(const DualGraph& dg);
std::string dual_graph_dot(const DualGraph& dg, const std::string& name = "dual");

/* Header "length,rate,source", one row per ring size per distribution. */
void write_rates_csv(std::ostream& out, const std::vector<RateDistribution>& dists);

} // namespace cyclekit
