#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cyclekit/bigint.hpp"
#include "cyclekit/cycle_space.hpp"
#include "cyclekit/graph.hpp"

namespace cyclekit {

/*
 * A family of equal-length cycles through a root non-tree edge e_j = (u_j,v_j),
 * all with e_j as their highest-indexed non-tree edge.  An odd family is rooted
 * at a node p equidistant from u_j and v_j; an even family at an edge (p,q)
 * whose endpoints are equidistant, p on the u_j side and q on the v_j side.
 * Members differ only in which shortest paths connect the descriptor to e_j.
 */
struct VFamily {
    std::uint32_t root; // non-tree coordinate j
    bool odd;
    node_t p;
    node_t q; // even families only
    std::uint32_t length;
    bigint count;
    EdgeCycle prototype; // lowest-index-parent member
    CycleVec vec;        // prototype in forest coordinates; top bit == root
};

/*
 * Per-root shortest-path DAG from the bidirectional BFS.  `parents` holds the
 * child->parent arcs along shortest paths that avoid non-tree edges with index
 * above the root; `num_paths` counts such paths from each node to its side's
 * root endpoint (0 when every shortest path is blocked).
 */
struct PathDag {
    std::uint32_t root;
    edge_t root_edge;
    std::vector<int> distance;          // -1 = unreached
    std::vector<std::uint8_t> anc;      // bit 0: u_j side, bit 1: v_j side
    std::vector<char> valid;
    std::vector<bigint> num_paths;
    std::vector<std::vector<node_t>> parents;
};

struct VFamilyOptions {
    unsigned workers = 1;
    bool keep_dags = true;
};

struct VFamilyResult {
    std::vector<VFamily> families; // grouped by root ascending, discovery order within a root
    std::vector<PathDag> dags;     // indexed by root j when kept, else empty
};

VFamilyResult compute_vfamilies(const Graph& g, const SpanningForest& f,
                                const VFamilyOptions& opts = {});

/* A uniformly random member of the family (weighted DAG backtracking). */
EdgeCycle sample_family_cycle(const Graph& g, const PathDag& dag, const VFamily& fam,
                              std::mt19937_64& rng);

/*
 * Candidate matrix R0: family rows sorted by nondecreasing cycle length (ties
 * keep discovery order).  Row count is checked against the nu <= rows <= nu^2
 * bound.
 */
struct R0Matrix {
    std::vector<std::uint32_t> rows; // family ids
};

R0Matrix build_r0(const std::vector<VFamily>& families, std::uint32_t nu);

} // namespace cyclekit
