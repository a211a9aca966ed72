#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

enum class GraphFormat { edgelist, json, bonds };

/* Accepts "edgelist", "json", "bonds". */
GraphFormat parse_format(const std::string& name);

/* Guess from the extension: .json, .bonds, anything else is an edge list. */
GraphFormat sniff_format(const std::string& path);

/*
 * Edge list: one "u v" pair per line.  '#' starts a comment, blank lines are
 * skipped, and an optional "n <count>" line pins the node count (otherwise
 * max id + 1 is used).
 */
Graph read_edgelist(std::istream& in);
void write_edgelist(std::ostream& out, const Graph& g);

/* {"n": <count>, "edges": [[u, v], ...]} */
Graph read_graph_json(std::istream& in);
void write_graph_json(std::ostream& out, const Graph& g);

/*
 * Bond frames: "frame <t>" headers, each followed by the bonds present at
 * that time as "u v" lines.  All frames share one node set; a leading
 * "n <count>" applies to the whole file.
 */
struct BondFrame {
    std::uint64_t time = 0;
    Graph graph;
};

std::vector<BondFrame> read_bond_frames(std::istream& in);

/*
 * Uniform loader used by the command line: single-graph formats come back as
 * one frame with time 0.  "fixture:<name>" paths resolve through the fixture
 * table regardless of format.
 */
std::vector<BondFrame> load_graphs(const std::string& path, GraphFormat fmt);

} // namespace cyclekit
