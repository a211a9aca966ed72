#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cyclekit/cycle_space.hpp"
#include "cyclekit/graph.hpp"

namespace cyclekit {

/* A maximal shared path between two cycles, oriented along the first cycle.
 * Single-node contacts are paths with one node and zero edges. */
struct SharedPath {
    std::vector<node_t> nodes;
    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(nodes.size()) - 1; }
};

/* The two arcs separating consecutive shared paths, one per cycle, stored as
 * node sequences including the shared endpoints. */
struct SeparatorPair {
    std::vector<node_t> q1, q2;
    std::uint32_t len1() const { return static_cast<std::uint32_t>(q1.size()) - 1; }
    std::uint32_t len2() const { return static_cast<std::uint32_t>(q2.size()) - 1; }
};

/*
 * How two basis cycles meet: k shared paths appearing in the same cyclic
 * order and orientation around both cycles, separated by k arc pairs whose
 * lengths match except possibly the pair ordered last.  Cycle roles are
 * normalized so cycle 1 is the shorter one (`swapped` records a reorder).
 */
struct IntersectionDecomposition {
    bool swapped = false;
    std::uint32_t len1 = 0, len2 = 0;
    std::vector<node_t> circ1, circ2; // oriented circulations actually used
    std::vector<SharedPath> paths;    // cyclic order along cycle 1
    std::vector<SeparatorPair> pairs; // pairs[i] joins paths[i] to paths[i+1]
};

enum class ViolationKind {
    orientation,   // shared paths cannot be aligned in order and direction
    sm_path_equal, // a non-final arc pair differs in length
    sm_path_len,   // a non-final arc exceeds half the shorter cycle
    lg_path_equal, // final arc lengths do not absorb the cycle length gap
    lg_path_len,   // a final arc is shorter than half its cycle
};

struct FormatViolation {
    ViolationKind kind;
    std::string detail;
};

const char* violation_name(ViolationKind k);

using IntersectionResult = std::variant<IntersectionDecomposition, FormatViolation>;

/*
 * Decompose the intersection of two distinct simple loops sharing at least
 * one node.  Throws disjoint_cycles when they share nothing and
 * invalid_argument for identical or non-loop inputs.
 */
IntersectionResult decompose_intersection(const Graph& g, const EdgeCycle& a, const EdgeCycle& b);

/* Number of shared paths; 0 when the cycles are node-disjoint. */
std::uint32_t intersection_path_count(const Graph& g, const EdgeCycle& a, const EdgeCycle& b);

/*
 * Replace the shorter of basis cycles a, b by an equal-length cycle that
 * meets the other over a single path.  Mutates `mcb` in place and returns
 * the index of the replaced cycle.  Throws not_applicable when the pair is
 * already single-path.
 */
size_t single_path_exchange(const Graph& g, std::vector<EdgeCycle>& mcb, size_t a, size_t b);

struct PostprocessResult {
    std::vector<EdgeCycle> mcb;
    unsigned exchanges = 0;
};

/*
 * Randomly resolve multi-path pairs until every pair of basis cycles meets
 * over at most one path.  Throws not_converged after n_max exchanges.
 */
PostprocessResult postprocess_mcb(const Graph& g, std::vector<EdgeCycle> mcb,
                                  std::mt19937_64& rng, unsigned n_max = 100);

struct DualGraph {
    std::vector<std::uint32_t> node_weights; // cycle lengths
    struct DEdge {
        std::uint32_t a, b, weight; // weight = shared-path edge count
    };
    std::vector<DEdge> edges;
};

/* Requires a postprocessed basis; throws multi_path_pair otherwise. */
DualGraph build_dual_graph(const Graph& g, const std::vector<EdgeCycle>& mcb);

} // namespace cyclekit
