#include "cyclekit/cycle_space.hpp"

#include <algorithm>

#include "cyclekit/errors.hpp"

namespace cyclekit {

bool CycleVec::test(std::uint32_t i) const {
    return std::binary_search(bits.begin(), bits.end(), i);
}

CycleVec vec_xor(const CycleVec& a, const CycleVec& b) {
    CycleVec r;
    r.bits.reserve(a.bits.size() + b.bits.size());
    std::set_symmetric_difference(a.bits.begin(), a.bits.end(), b.bits.begin(), b.bits.end(),
                                  std::back_inserter(r.bits));
    return r;
}

int vec_dot(const CycleVec& a, const CycleVec& b) {
    size_t i = 0, j = 0, shared = 0;
    while (i < a.bits.size() && j < b.bits.size()) {
        if (a.bits[i] < b.bits[j])
            ++i;
        else if (a.bits[i] > b.bits[j])
            ++j;
        else {
            ++shared;
            ++i;
            ++j;
        }
    }
    return static_cast<int>(shared & 1);
}

CycleVec unit_vec(std::uint32_t i) { return CycleVec{{i}}; }

EdgeCycle cycle_xor(const EdgeCycle& a, const EdgeCycle& b) {
    EdgeCycle r;
    r.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool is_cycle(const Graph& g, const EdgeCycle& c) {
    std::vector<std::uint32_t> deg(g.num_nodes(), 0);
    for (edge_t e : c) {
        if (e >= g.num_edges()) return false;
        ++deg[g.edge(e).first];
        ++deg[g.edge(e).second];
    }
    for (auto d : deg)
        if (d & 1) return false;
    return true;
}

bool is_simple_loop(const Graph& g, const EdgeCycle& c) {
    if (c.empty()) return false;
    std::vector<std::uint32_t> deg(g.num_nodes(), 0);
    for (edge_t e : c) {
        ++deg[g.edge(e).first];
        ++deg[g.edge(e).second];
    }
    for (edge_t e : c)
        if (deg[g.edge(e).first] != 2 || deg[g.edge(e).second] != 2) return false;
    // Connectivity: walk from one endpoint.
    node_t start = g.edge(c.front()).first;
    std::vector<bool> in_cycle(g.num_edges(), false);
    for (edge_t e : c) in_cycle[e] = true;
    std::vector<bool> seen(g.num_nodes(), false);
    std::vector<node_t> stack{start};
    seen[start] = true;
    size_t nodes_seen = 1;
    while (!stack.empty()) {
        node_t u = stack.back();
        stack.pop_back();
        const auto& nb = g.neighbors(u);
        const auto& ne = g.edge_ids(u);
        for (size_t i = 0; i < nb.size(); ++i) {
            if (!in_cycle[ne[i]] || seen[nb[i]]) continue;
            seen[nb[i]] = true;
            ++nodes_seen;
            stack.push_back(nb[i]);
        }
    }
    return nodes_seen == c.size(); // simple loop: #nodes == #edges
}

EdgeCycle fundamental_cycle(const Graph& g, const SpanningForest& f, std::uint32_t nontree_idx) {
    edge_t e = f.nontree[nontree_idx];
    auto [u, v] = g.edge(e);
    EdgeCycle c{e};
    // Walk both endpoints up to their LCA.
    node_t a = u, b = v;
    while (a != b) {
        if (f.depth[a] >= f.depth[b]) {
            c.push_back(static_cast<edge_t>(f.parent_edge[a]));
            a = static_cast<node_t>(f.parent[a]);
        } else {
            c.push_back(static_cast<edge_t>(f.parent_edge[b]));
            b = static_cast<node_t>(f.parent[b]);
        }
    }
    std::sort(c.begin(), c.end());
    return c;
}

CycleVec edges_to_vec(const Graph& g, const SpanningForest& f, const EdgeCycle& c) {
    if (!is_cycle(g, c)) fail(errc::not_a_cycle, "edge set has odd-degree nodes");
    CycleVec v;
    for (std::uint32_t i = 0; i < f.nontree.size(); ++i)
        if (std::binary_search(c.begin(), c.end(), f.nontree[i])) v.bits.push_back(i);
    return v;
}

EdgeCycle vec_to_edges(const Graph& g, const SpanningForest& f, const CycleVec& v) {
    EdgeCycle acc;
    for (std::uint32_t i : v.bits) acc = cycle_xor(acc, fundamental_cycle(g, f, i));
    return acc;
}

std::vector<node_t> circulation(const Graph& g, const EdgeCycle& c) {
    if (!is_simple_loop(g, c)) fail(errc::not_simple_loop, "not a simple loop");
    node_t lowest = g.num_nodes();
    for (edge_t e : c) lowest = std::min({lowest, g.edge(e).first, g.edge(e).second});
    // Neighbors of `lowest` on the loop.
    std::vector<node_t> nb;
    for (edge_t e : c) {
        if (g.edge(e).first == lowest) nb.push_back(g.edge(e).second);
        if (g.edge(e).second == lowest) nb.push_back(g.edge(e).first);
    }
    std::sort(nb.begin(), nb.end());

    std::vector<node_t> loop{lowest, nb.front()};
    std::vector<bool> in_cycle(g.num_edges(), false);
    for (edge_t e : c) in_cycle[e] = true;
    node_t prev = lowest, cur = nb.front();
    while (cur != lowest) {
        const auto& ns = g.neighbors(cur);
        const auto& es = g.edge_ids(cur);
        for (size_t i = 0; i < ns.size(); ++i) {
            if (!in_cycle[es[i]] || ns[i] == prev) continue;
            prev = cur;
            cur = ns[i];
            break;
        }
        if (cur != lowest) loop.push_back(cur);
    }
    return loop;
}

int sparse_dense_dot(const CycleVec& a, const Gf2V& b) {
    int p = 0;
    for (std::uint32_t i : a.bits) p ^= b.test(i) ? 1 : 0;
    return p;
}

} // namespace cyclekit
