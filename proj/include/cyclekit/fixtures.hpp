#pragma once

#include <string>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

/*
 * Small named graphs with well-understood cycle structure, used by the test
 * suite and by `cyclekit oracle-check`.  Most are carbon skeletons or convex
 * polyhedra; a few are synthetic graphs built to exercise specific corners of
 * the decomposition (equal-length exchanges, non-unique bases, ...).
 */

/* k diamonds (4-cycles) chained into a necklace; 4k nodes, 5k edges. */
Graph bracelet_graph(unsigned k);

/* Lookup by name; throws errc::invalid_argument for unknown names. */
Graph fixture_graph(const std::string& name);

/* All names accepted by fixture_graph (bracelets listed as bracelet-2..4). */
std::vector<std::string> fixture_names();

} // namespace cyclekit
