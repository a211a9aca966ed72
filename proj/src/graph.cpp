#include "cyclekit/graph.hpp"

#include <algorithm>
#include <stack>

namespace cyclekit {

Graph::Graph(node_t n, std::vector<Edge> edges) : n_(n) {
    for (auto& [u, v] : edges) {
        if (u == v)
            fail(errc::self_loop, "self loop at node " + std::to_string(u));
        if (u >= n || v >= n)
            fail(errc::index_out_of_range, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(errc::duplicate_edge, "duplicate edge");
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    adj_eid_.assign(n_, {});
    for (edge_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_eid_[u].push_back(e);
        adj_[v].push_back(u);
        adj_eid_[v].push_back(e);
    }
    // Edges were added in lexicographic order, so each adj_[u] is already
    // ascending for the v-side too (u of every later edge is >=).  Sort to be
    // explicit about the invariant.
    for (node_t u = 0; u < n_; ++u) {
        std::vector<std::pair<node_t, edge_t>> z(adj_[u].size());
        for (size_t i = 0; i < z.size(); ++i) z[i] = {adj_[u][i], adj_eid_[u][i]};
        std::sort(z.begin(), z.end());
        for (size_t i = 0; i < z.size(); ++i) {
            adj_[u][i] = z[i].first;
            adj_eid_[u][i] = z[i].second;
        }
    }
}

long Graph::edge_id(node_t u, node_t v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it != edges_.end() && *it == Edge{u, v})
        return static_cast<long>(it - edges_.begin());
    return -1;
}

std::vector<int> Graph::connected_component_ids() const {
    std::vector<int> comp(n_, -1);
    int next = 0;
    std::vector<node_t> stack;
    for (node_t s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            node_t u = stack.back();
            stack.pop_back();
            for (node_t v : adj_[u])
                if (comp[v] < 0) {
                    comp[v] = next;
                    stack.push_back(v);
                }
        }
        ++next;
    }
    return comp;
}

edge_t Graph::cyclomatic_number() const {
    if (n_ == 0) return 0;
    auto comp = connected_component_ids();
    int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    return num_edges() - n_ + static_cast<edge_t>(ncomp);
}

std::vector<BiconnectedComponent> biconnected_components(const Graph& g) {
    const node_t n = g.num_nodes();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<long> parent_edge(n, -1);
    std::vector<edge_t> estack;
    std::vector<BiconnectedComponent> out;
    int timer = 0;

    // Iterative DFS; frame keeps the position in the adjacency list.
    struct Frame {
        node_t u;
        size_t i;
    };

    for (node_t s = 0; s < n; ++s) {
        if (disc[s] >= 0) continue;
        std::vector<Frame> fs{{s, 0}};
        disc[s] = low[s] = timer++;
        while (!fs.empty()) {
            auto& [u, i] = fs.back();
            if (i < g.neighbors(u).size()) {
                node_t v = g.neighbors(u)[i];
                edge_t e = g.edge_ids(u)[i];
                ++i;
                if (static_cast<long>(e) == parent_edge[u]) continue;
                if (disc[v] < 0) {
                    estack.push_back(e);
                    parent_edge[v] = e;
                    disc[v] = low[v] = timer++;
                    fs.push_back({v, 0});
                } else if (disc[v] < disc[u]) { // back edge
                    estack.push_back(e);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                fs.pop_back();
                if (fs.empty()) break;
                node_t p = fs.back().u;
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= disc[p]) {
                    // p is an articulation point (or root): pop the component.
                    BiconnectedComponent c;
                    edge_t pe = static_cast<edge_t>(parent_edge[u]);
                    while (true) {
                        edge_t e = estack.back();
                        estack.pop_back();
                        c.edge_ids.push_back(e);
                        if (e == pe) break;
                    }
                    std::sort(c.edge_ids.begin(), c.edge_ids.end());
                    out.push_back(std::move(c));
                }
            }
        }
    }
    // Deterministic order: by lowest edge id.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.edge_ids.front() < b.edge_ids.front();
    });
    return out;
}

Subgraph extract_subgraph(const Graph& g, const std::vector<edge_t>& edge_ids) {
    Subgraph s;
    std::vector<long> local(g.num_nodes(), -1);
    std::vector<Edge> edges;
    std::vector<edge_t> eids = edge_ids;
    std::sort(eids.begin(), eids.end());
    for (edge_t e : eids) {
        auto [u, v] = g.edge(e);
        for (node_t x : {u, v})
            if (local[x] < 0) {
                local[x] = static_cast<long>(s.node_map.size());
                s.node_map.push_back(x);
            }
    }
    // Relabel so local ids preserve the original order.
    std::sort(s.node_map.begin(), s.node_map.end());
    for (size_t i = 0; i < s.node_map.size(); ++i) local[s.node_map[i]] = static_cast<long>(i);
    for (edge_t e : eids) {
        auto [u, v] = g.edge(e);
        edges.push_back({static_cast<node_t>(local[u]), static_cast<node_t>(local[v])});
    }
    s.edge_map = eids;
    s.graph = Graph(static_cast<node_t>(s.node_map.size()), std::move(edges));
    return s;
}

SpanningForest spanning_forest(const Graph& g) {
    const node_t n = g.num_nodes();
    SpanningForest f;
    f.parent.assign(n, -1);
    f.parent_edge.assign(n, -1);
    f.depth.assign(n, 0);
    f.is_tree_edge.assign(g.num_edges(), false);
    std::vector<bool> seen(n, false);

    std::vector<node_t> queue;
    for (node_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        f.roots.push_back(s);
        seen[s] = true;
        queue.clear();
        queue.push_back(s);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            node_t u = queue[qi];
            const auto& nb = g.neighbors(u);
            const auto& ne = g.edge_ids(u);
            for (size_t i = 0; i < nb.size(); ++i) {
                node_t v = nb[i];
                if (seen[v]) continue;
                seen[v] = true;
                f.parent[v] = u;
                f.parent_edge[v] = ne[i];
                f.depth[v] = f.depth[u] + 1;
                f.is_tree_edge[ne[i]] = true;
                queue.push_back(v);
            }
        }
    }
    for (edge_t e = 0; e < g.num_edges(); ++e)
        if (!f.is_tree_edge[e]) f.nontree.push_back(e);
    return f;
}

} // namespace cyclekit
