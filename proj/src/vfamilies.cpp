#include "cyclekit/vfamilies.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace cyclekit {

namespace {

void ck_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

/*
 * Walk from `start` down the DAG to the distance-0 endpoint, always taking the
 * lowest-numbered parent that still has a usable path count.  For the first
 * step of an odd family the parent must lie on the requested side.
 */
EdgeCycle walk_arm_lowest(const Graph& g, const PathDag& dag, node_t start, std::uint8_t side,
                          bool restrict_first) {
    EdgeCycle arm;
    node_t cur = start;
    bool first = true;
    while (dag.distance[cur] > 0) {
        node_t best = g.num_nodes();
        for (node_t x : dag.parents[cur]) {
            if (dag.num_paths[x] == 0) continue;
            if (first && restrict_first && dag.anc[x] != side) continue;
            best = std::min(best, x);
        }
        ck_check(best < g.num_nodes(), "family arm walk hit a dead end");
        arm.push_back(static_cast<edge_t>(g.edge_id(cur, best)));
        cur = best;
        first = false;
    }
    return arm;
}

/* Weighted variant: step to a parent with probability num_paths[x]/sum. */
EdgeCycle walk_arm_random(const Graph& g, const PathDag& dag, node_t start, std::uint8_t side,
                          bool restrict_first, std::mt19937_64& rng) {
    EdgeCycle arm;
    node_t cur = start;
    bool first = true;
    while (dag.distance[cur] > 0) {
        std::vector<node_t> cand;
        std::vector<bigint> weights;
        for (node_t x : dag.parents[cur]) {
            if (dag.num_paths[x] == 0) continue;
            if (first && restrict_first && dag.anc[x] != side) continue;
            cand.push_back(x);
            weights.push_back(dag.num_paths[x]);
        }
        ck_check(!cand.empty(), "family arm walk hit a dead end");
        node_t next = cand[weighted_pick(weights, rng)];
        arm.push_back(static_cast<edge_t>(g.edge_id(cur, next)));
        cur = next;
        first = false;
    }
    return arm;
}

EdgeCycle assemble_cycle(const Graph& g, edge_t root_edge, const VFamily& fam, EdgeCycle arm_u,
                         const EdgeCycle& arm_v) {
    EdgeCycle c = std::move(arm_u);
    c.insert(c.end(), arm_v.begin(), arm_v.end());
    c.push_back(root_edge);
    if (!fam.odd) c.push_back(static_cast<edge_t>(g.edge_id(fam.p, fam.q)));
    std::sort(c.begin(), c.end());
    ck_check(std::adjacent_find(c.begin(), c.end()) == c.end(), "family member repeats an edge");
    ck_check(c.size() == fam.length, "family member has wrong length");
    return c;
}

/* One bidirectional BFS rooted at non-tree edge j; emits this root's families. */
void process_root(const Graph& g, const SpanningForest& f, const std::vector<long>& nt_index,
                  std::uint32_t j, std::vector<VFamily>& out, PathDag& dag) {
    const node_t n = g.num_nodes();
    const edge_t root_edge = f.nontree[j];
    const auto [u, v] = g.edge(root_edge);

    dag.root = j;
    dag.root_edge = root_edge;
    dag.distance.assign(n, -1);
    dag.anc.assign(n, 0);
    dag.valid.assign(n, 1);
    dag.num_paths.assign(n, bigint(0));
    dag.parents.assign(n, {});

    dag.distance[u] = dag.distance[v] = 0;
    dag.anc[u] = 1;
    dag.anc[v] = 2;
    dag.num_paths[u] = dag.num_paths[v] = 1;

    std::vector<node_t> queue{u, v};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        node_t p = queue[qi];
        if (dag.anc[p] == 3 && dag.valid[p]) {
            // p closes an odd cycle: count path pairs split by side.
            bigint n1 = 0, n2 = 0;
            for (node_t x : dag.parents[p]) {
                if (dag.anc[x] == 1) n1 += dag.num_paths[x];
                if (dag.anc[x] == 2) n2 += dag.num_paths[x];
            }
            if (n1 > 0 && n2 > 0) {
                VFamily fam;
                fam.root = j;
                fam.odd = true;
                fam.p = p;
                fam.q = p;
                fam.length = 2 * static_cast<std::uint32_t>(dag.distance[p]) + 1;
                fam.count = n1 * n2;
                out.push_back(std::move(fam));
            }
        }
        const auto& nb = g.neighbors(p);
        const auto& ne = g.edge_ids(p);
        for (size_t i = 0; i < nb.size(); ++i) {
            node_t q = nb[i];
            edge_t eid = ne[i];
            // Paths may not use non-tree edges indexed above the root.
            bool blocked = nt_index[eid] > static_cast<long>(j);
            if (dag.distance[q] < 0) {
                dag.distance[q] = dag.distance[p] + 1;
                dag.anc[q] = dag.anc[p];
                if (blocked) {
                    dag.num_paths[q] = 0;
                } else {
                    dag.num_paths[q] = dag.num_paths[p];
                    dag.parents[q].push_back(p);
                }
                queue.push_back(q);
            } else if (dag.distance[q] == dag.distance[p] + 1) {
                dag.anc[q] |= dag.anc[p];
                if (dag.anc[p] == 3) dag.valid[q] = 0;
                if (!blocked && dag.num_paths[p] > 0) {
                    dag.num_paths[q] += dag.num_paths[p];
                    dag.parents[q].push_back(p);
                }
            } else if (dag.anc[p] == 1 && dag.anc[q] == 2) {
                // Equidistant pair on opposite sides: even-family descriptor.
                // The root edge itself is skipped (it closes no cycle).
                if (eid != root_edge && !blocked && dag.num_paths[p] > 0 && dag.num_paths[q] > 0) {
                    VFamily fam;
                    fam.root = j;
                    fam.odd = false;
                    fam.p = p;
                    fam.q = q;
                    fam.length =
                        static_cast<std::uint32_t>(dag.distance[p] + dag.distance[q]) + 2;
                    fam.count = dag.num_paths[p] * dag.num_paths[q];
                    out.push_back(std::move(fam));
                }
            }
        }
    }

    for (auto& fam : out) {
        EdgeCycle arm_u, arm_v;
        if (fam.odd) {
            arm_u = walk_arm_lowest(g, dag, fam.p, 1, true);
            arm_v = walk_arm_lowest(g, dag, fam.p, 2, true);
        } else {
            arm_u = walk_arm_lowest(g, dag, fam.p, 1, false);
            arm_v = walk_arm_lowest(g, dag, fam.q, 2, false);
        }
        fam.prototype = assemble_cycle(g, root_edge, fam, std::move(arm_u), arm_v);
        fam.vec = edges_to_vec(g, f, fam.prototype);
        ck_check(!fam.vec.empty() && fam.vec.top() == fam.root,
                 "family prototype does not peak at its root coordinate");
    }
}

} // namespace

VFamilyResult compute_vfamilies(const Graph& g, const SpanningForest& f,
                                const VFamilyOptions& opts) {
    const std::uint32_t nu = static_cast<std::uint32_t>(f.nontree.size());
    VFamilyResult res;
    if (nu == 0) return res;

    std::vector<long> nt_index(g.num_edges(), -1);
    for (std::uint32_t j = 0; j < nu; ++j) nt_index[f.nontree[j]] = j;

    std::vector<std::vector<VFamily>> by_root(nu);
    if (opts.keep_dags) res.dags.resize(nu);

    unsigned workers = std::max(1u, opts.workers);
    workers = std::min<unsigned>(workers, nu);

    auto run = [&](unsigned tid) {
        PathDag scratch;
        for (std::uint32_t j = tid; j < nu; j += workers) {
            PathDag& dag = opts.keep_dags ? res.dags[j] : scratch;
            process_root(g, f, nt_index, j, by_root[j], dag);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
        for (auto& t : pool) t.join();
    }

    for (std::uint32_t j = 0; j < nu; ++j) {
        ck_check(by_root[j].size() <= nu, "more families than nu at a single root");
        for (auto& fam : by_root[j]) res.families.push_back(std::move(fam));
    }
    return res;
}

EdgeCycle sample_family_cycle(const Graph& g, const PathDag& dag, const VFamily& fam,
                              std::mt19937_64& rng) {
    EdgeCycle arm_u, arm_v;
    if (fam.odd) {
        arm_u = walk_arm_random(g, dag, fam.p, 1, true, rng);
        arm_v = walk_arm_random(g, dag, fam.p, 2, true, rng);
    } else {
        arm_u = walk_arm_random(g, dag, fam.p, 1, false, rng);
        arm_v = walk_arm_random(g, dag, fam.q, 2, false, rng);
    }
    return assemble_cycle(g, dag.root_edge, fam, std::move(arm_u), arm_v);
}

R0Matrix build_r0(const std::vector<VFamily>& families, std::uint32_t nu) {
    R0Matrix r0;
    r0.rows.resize(families.size());
    for (std::uint32_t i = 0; i < families.size(); ++i) r0.rows[i] = i;
    std::stable_sort(r0.rows.begin(), r0.rows.end(), [&](std::uint32_t a, std::uint32_t b) {
        return families[a].length < families[b].length;
    });
    ck_check(families.size() >= nu, "candidate matrix has fewer rows than nu");
    ck_check(families.size() <= static_cast<size_t>(nu) * nu,
             "candidate matrix exceeds the nu^2 row bound");
    return r0;
}

} // namespace cyclekit
