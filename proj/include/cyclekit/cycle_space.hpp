#pragma once

#include <cstdint>
#include <vector>

#include "cyclekit/graph.hpp"

namespace cyclekit {

/*
 * A cycle-space element in spanning-forest coordinates: the sorted indices of
 * the non-tree edges it contains (index into SpanningForest::nontree).
 * Kept sparse; typical rows touch a handful of coordinates.
 */
struct CycleVec {
    std::vector<std::uint32_t> bits; // ascending

    bool empty() const { return bits.empty(); }
    size_t popcount() const { return bits.size(); }
    bool test(std::uint32_t i) const;
    std::uint32_t top() const { return bits.back(); } // highest coordinate

    bool operator==(const CycleVec&) const = default;
};

CycleVec vec_xor(const CycleVec& a, const CycleVec& b);
int vec_dot(const CycleVec& a, const CycleVec& b); // GF(2) inner product

CycleVec unit_vec(std::uint32_t i);

/*
 * A cycle as a set of edge ids (ascending).  All even-degree edge sets are
 * valid cycle-space elements; simple loops are the connected degree-2 case.
 */
using EdgeCycle = std::vector<edge_t>;

EdgeCycle cycle_xor(const EdgeCycle& a, const EdgeCycle& b);
bool is_cycle(const Graph& g, const EdgeCycle& c);       // all degrees even
bool is_simple_loop(const Graph& g, const EdgeCycle& c); // connected, degrees 2

/* Fundamental cycle of non-tree edge `nontree_idx` relative to the forest. */
EdgeCycle fundamental_cycle(const Graph& g, const SpanningForest& f, std::uint32_t nontree_idx);

/* Project a cycle onto non-tree coordinates.  Requires an even-degree set. */
CycleVec edges_to_vec(const Graph& g, const SpanningForest& f, const EdgeCycle& c);

/* Reconstruct the edge set as the xor of fundamental cycles. */
EdgeCycle vec_to_edges(const Graph& g, const SpanningForest& f, const CycleVec& v);

/*
 * Canonical node loop of a simple loop: starts at the lowest node, first step
 * toward its lower-numbered neighbor on the loop.  Throws not_simple_loop.
 */
std::vector<node_t> circulation(const Graph& g, const EdgeCycle& c);

/* Dense GF(2) vector used internally for witness arithmetic. */
struct Gf2V {
    std::vector<std::uint64_t> w;

    explicit Gf2V(std::uint32_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(std::uint32_t i) { w[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
    bool test(std::uint32_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void operator^=(const Gf2V& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
};

/* Parity of <sparse, dense>. */
int sparse_dense_dot(const CycleVec& a, const Gf2V& b);

} // namespace cyclekit
