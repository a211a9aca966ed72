#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclekit/errors.hpp"

namespace cyclekit {

using node_t = std::uint32_t;
using edge_t = std::uint32_t;

/* Undirected edge, stored with u < v. */
using Edge = std::pair<node_t, node_t>;

/*
 * Simple undirected graph on nodes 0..n-1.  Edges are deduplicated-checked,
 * stored sorted lexicographically, and adjacency lists are kept in ascending
 * node order so every traversal in the library is deterministic.
 */
class Graph {
public:
    Graph() = default;
    Graph(node_t n, std::vector<Edge> edges);

    node_t num_nodes() const { return n_; }
    edge_t num_edges() const { return static_cast<edge_t>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge(edge_t e) const { return edges_[e]; }

    /* Neighbors of u in ascending order. */
    const std::vector<node_t>& neighbors(node_t u) const { return adj_[u]; }
    node_t degree(node_t u) const { return static_cast<node_t>(adj_[u].size()); }

    /* Edge id for {u,v}, or -1 if absent. */
    long edge_id(node_t u, node_t v) const;
    bool has_edge(node_t u, node_t v) const { return edge_id(u, v) >= 0; }

    /* m - n + (number of connected components). */
    edge_t cyclomatic_number() const;

    std::vector<int> connected_component_ids() const; // per node; -1 never occurs

private:
    node_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<node_t>> adj_;
    std::vector<std::vector<edge_t>> adj_eid_; // edge id parallel to adj_

    friend class SpanningForest;
    const std::vector<edge_t>& incident_edge_ids(node_t u) const { return adj_eid_[u]; }

public:
    /* Edge ids incident to u, parallel to neighbors(u). */
    const std::vector<edge_t>& edge_ids(node_t u) const { return adj_eid_[u]; }
};

/*
 * Biconnected components as edge partitions (Hopcroft-Tarjan, iterative).
 * Bridge edges come out as single-edge components.
 */
struct BiconnectedComponent {
    std::vector<edge_t> edge_ids; // ascending
};

std::vector<BiconnectedComponent> biconnected_components(const Graph& g);

/* Edge-induced subgraph with nodes relabeled 0..k-1; node_map[i] = original id. */
struct Subgraph {
    Graph graph;
    std::vector<node_t> node_map;
    std::vector<edge_t> edge_map; // local edge id -> original edge id
};

Subgraph extract_subgraph(const Graph& g, const std::vector<edge_t>& edge_ids);

/*
 * Deterministic BFS spanning forest: one BFS tree per connected component,
 * rooted at the component's lowest-numbered node, neighbors visited in
 * ascending order.  Non-tree edges keep the graph's lexicographic edge order;
 * their position in `nontree` is the cycle-space coordinate.
 */
struct SpanningForest {
    std::vector<long> parent;        // parent node, -1 at roots
    std::vector<long> parent_edge;   // edge id to parent, -1 at roots
    std::vector<node_t> depth;
    std::vector<bool> is_tree_edge;  // per edge id
    std::vector<edge_t> nontree;     // non-tree edge ids, ascending
    std::vector<node_t> roots;
};

SpanningForest spanning_forest(const Graph& g);

} // namespace cyclekit
