#include "cyclekit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclekit/errors.hpp"

namespace cyclekit {

namespace {

std::atomic<std::uint64_t> g_enum_calls{0};

void ck_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

std::uint64_t to_mask(const CycleVec& v) {
    std::uint64_t m = 0;
    for (std::uint32_t b : v.bits) m |= std::uint64_t{1} << b;
    return m;
}

/* Reduce against pivots held in descending leading-bit order. */
std::uint64_t reduce(std::uint64_t m, const std::vector<std::uint64_t>& pivot) {
    for (std::uint64_t p : pivot) {
        if (m == 0) break;
        std::uint64_t high = std::uint64_t{1} << (63 - std::countl_zero(p));
        if (m & high) m ^= p;
    }
    return m;
}

/* Keep pivots with strictly decreasing leading bits. */
bool insert_pivot(std::vector<std::uint64_t>& pivot, std::uint64_t m) {
    m = reduce(m, pivot);
    if (m == 0) return false;
    pivot.push_back(m);
    std::sort(pivot.begin(), pivot.end(), std::greater<>());
    return true;
}

} // namespace

std::vector<OracleCycle> enumerate_cycles(const Graph& g, const SpanningForest& f,
                                          bool override_cap) {
    ++g_enum_calls;
    const std::uint32_t nu = static_cast<std::uint32_t>(f.nontree.size());
    if (!override_cap && g.num_edges() > 20)
        fail(errc::too_large, "enumeration needs m <= 20 unless overridden");
    if (nu >= 63) fail(errc::too_large, "cycle space too large to enumerate");

    std::vector<OracleCycle> out;
    out.reserve((std::uint64_t{1} << nu) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << nu); ++mask) {
        CycleVec v;
        for (std::uint32_t b = 0; b < nu; ++b)
            if ((mask >> b) & 1) v.bits.push_back(b);
        OracleCycle oc;
        oc.vec = v;
        oc.edges = vec_to_edges(g, f, v);
        oc.simple = is_simple_loop(g, oc.edges);
        out.push_back(std::move(oc));
    }
    std::sort(out.begin(), out.end(), [](const OracleCycle& a, const OracleCycle& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return a.edges < b.edges;
    });
    return out;
}

std::vector<size_t> relevant_oracle(const std::vector<OracleCycle>& cycles) {
    std::vector<size_t> relevant;
    std::vector<std::uint64_t> shorter; // pivot basis of strictly shorter cycles
    size_t i = 0;
    while (i < cycles.size()) {
        size_t j = i;
        while (j < cycles.size() && cycles[j].edges.size() == cycles[i].edges.size()) ++j;
        for (size_t t = i; t < j; ++t)
            if (reduce(to_mask(cycles[t].vec), shorter) != 0) relevant.push_back(t);
        for (size_t t = i; t < j; ++t) insert_pivot(shorter, to_mask(cycles[t].vec));
        i = j;
    }
    return relevant;
}

std::vector<std::vector<size_t>> enumerate_mcbs(const std::vector<OracleCycle>& cycles,
                                                std::uint32_t nu, bool override_cap) {
    if (nu == 0) return {{}};
    if (!override_cap && cycles.size() > (std::uint64_t{1} << 20))
        fail(errc::too_large, "too many cycles to enumerate bases");

    // Greedy pass gives the minimum cost (independence systems over GF(2)).
    std::uint64_t min_cost = 0;
    {
        std::vector<std::uint64_t> pivot;
        std::uint32_t got = 0;
        for (const OracleCycle& c : cycles) {
            if (insert_pivot(pivot, to_mask(c.vec))) {
                min_cost += c.edges.size();
                if (++got == nu) break;
            }
        }
        ck_check(got == nu, "cycle list does not span the cycle space");
    }

    // Cheapest completion from each suffix, ignoring independence: a valid
    // lower bound for pruning.
    const size_t n = cycles.size();
    std::vector<std::vector<std::uint64_t>> tail_cost(n + 1,
                                                      std::vector<std::uint64_t>(nu + 1, 0));
    for (size_t idx = n; idx-- > 0;) {
        for (std::uint32_t need = 1; need <= nu; ++need) {
            std::uint64_t take = n - idx >= need
                                     ? cycles[idx].edges.size() + tail_cost[idx + 1][need - 1]
                                     : UINT64_MAX;
            std::uint64_t skip = tail_cost[idx + 1][need];
            if (n - idx - 1 < need) skip = UINT64_MAX;
            tail_cost[idx][need] = std::min(take, skip);
        }
    }

    std::vector<std::vector<size_t>> result;
    std::vector<size_t> chosen;
    std::vector<std::uint64_t> pivot;
    auto rec = [&](auto&& self, size_t idx, std::uint64_t cost) -> void {
        const std::uint32_t need = nu - static_cast<std::uint32_t>(chosen.size());
        if (need == 0) {
            if (cost == min_cost) result.push_back(chosen);
            return;
        }
        if (idx >= n || tail_cost[idx][need] == UINT64_MAX ||
            cost + tail_cost[idx][need] > min_cost)
            return;
        // take
        std::vector<std::uint64_t> saved = pivot;
        if (insert_pivot(pivot, to_mask(cycles[idx].vec))) {
            chosen.push_back(idx);
            self(self, idx + 1, cost + cycles[idx].edges.size());
            chosen.pop_back();
        }
        pivot = std::move(saved);
        // skip
        self(self, idx + 1, cost);
    };
    rec(rec, 0, 0);
    std::sort(result.begin(), result.end());
    ck_check(!result.empty(), "no minimum basis found");
    return result;
}

std::vector<std::vector<size_t>> pi_oracle(const std::vector<OracleCycle>& cycles,
                                           const std::vector<size_t>& relevant,
                                           const std::vector<std::vector<size_t>>& mcbs) {
    (void)cycles;
    std::set<std::vector<size_t>> basis_set(mcbs.begin(), mcbs.end());
    std::vector<size_t> parent(relevant.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (size_t a = 0; a < relevant.size(); ++a) {
        for (size_t b = a + 1; b < relevant.size(); ++b) {
            bool related = false;
            for (const auto& m : mcbs) {
                if (!std::binary_search(m.begin(), m.end(), relevant[b])) continue;
                if (std::binary_search(m.begin(), m.end(), relevant[a])) continue;
                std::vector<size_t> swapped;
                for (size_t c : m)
                    swapped.push_back(c == relevant[b] ? relevant[a] : c);
                std::sort(swapped.begin(), swapped.end());
                if (basis_set.count(swapped)) {
                    related = true;
                    break;
                }
            }
            if (related) parent[find(a)] = find(b);
        }
    }
    std::vector<std::vector<size_t>> classes;
    std::vector<long> class_of(relevant.size(), -1);
    for (size_t a = 0; a < relevant.size(); ++a) {
        size_t root = find(a);
        if (class_of[root] < 0) {
            class_of[root] = static_cast<long>(classes.size());
            classes.emplace_back();
        }
        classes[class_of[root]].push_back(relevant[a]);
    }
    return classes;
}

std::vector<std::vector<size_t>> sli_oracle(const std::vector<OracleCycle>& cycles,
                                            const std::vector<size_t>& relevant) {
    std::vector<size_t> parent(relevant.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t a = 0; a < relevant.size(); ++a) {
        for (size_t b = a + 1; b < relevant.size(); ++b) {
            const OracleCycle& ca = cycles[relevant[a]];
            const OracleCycle& cb = cycles[relevant[b]];
            if (ca.edges.size() != cb.edges.size()) continue;
            std::vector<std::uint64_t> shorter;
            for (const OracleCycle& c : cycles) {
                if (c.edges.size() >= ca.edges.size()) break; // sorted by size
                insert_pivot(shorter, to_mask(c.vec));
            }
            if (reduce(to_mask(ca.vec) ^ to_mask(cb.vec), shorter) == 0)
                parent[find(a)] = find(b);
        }
    }
    std::vector<std::vector<size_t>> classes;
    std::vector<long> class_of(relevant.size(), -1);
    for (size_t a = 0; a < relevant.size(); ++a) {
        size_t root = find(a);
        if (class_of[root] < 0) {
            class_of[root] = static_cast<long>(classes.size());
            classes.emplace_back();
        }
        classes[class_of[root]].push_back(relevant[a]);
    }
    return classes;
}

OracleReport oracle_report(const Graph& g, bool override_cap) {
    OracleReport r;
    SpanningForest f = spanning_forest(g);
    r.cycles = enumerate_cycles(g, f, override_cap);
    r.relevant = relevant_oracle(r.cycles);
    r.mcbs = enumerate_mcbs(r.cycles, static_cast<std::uint32_t>(f.nontree.size()),
                            override_cap);
    for (size_t c : r.mcbs.front()) r.min_cost += r.cycles[c].edges.size();
    r.pi_classes = pi_oracle(r.cycles, r.relevant, r.mcbs);
    r.sli_classes = sli_oracle(r.cycles, r.relevant);

    // Relevance defined through spans must coincide with union-of-bases.
    std::set<size_t> in_some;
    for (const auto& m : r.mcbs) in_some.insert(m.begin(), m.end());
    ck_check(std::vector<size_t>(in_some.begin(), in_some.end()) == r.relevant,
             "relevant set differs from the union of all minimum bases");
    return r;
}

namespace {

void arm_paths(const Graph& g, const PathDag& dag, node_t start, std::uint8_t side,
               bool restrict_first, EdgeCycle& acc, std::vector<EdgeCycle>& out) {
    if (dag.distance[start] == 0) {
        out.push_back(acc);
        return;
    }
    for (node_t x : dag.parents[start]) {
        if (dag.num_paths[x] == 0) continue;
        if (restrict_first && dag.anc[x] != side) continue;
        acc.push_back(static_cast<edge_t>(g.edge_id(start, x)));
        arm_paths(g, dag, x, side, false, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<EdgeCycle> enumerate_family_members(const Graph& g, const PathDag& dag,
                                                const VFamily& fam) {
    std::vector<EdgeCycle> arms_u, arms_v;
    EdgeCycle acc;
    if (fam.odd) {
        arm_paths(g, dag, fam.p, 1, true, acc, arms_u);
        arm_paths(g, dag, fam.p, 2, true, acc, arms_v);
    } else {
        arm_paths(g, dag, fam.p, 1, false, acc, arms_u);
        arm_paths(g, dag, fam.q, 2, false, acc, arms_v);
    }
    std::vector<EdgeCycle> out;
    for (const EdgeCycle& au : arms_u) {
        for (const EdgeCycle& av : arms_v) {
            EdgeCycle c = au;
            c.insert(c.end(), av.begin(), av.end());
            c.push_back(dag.root_edge);
            if (!fam.odd) c.push_back(static_cast<edge_t>(g.edge_id(fam.p, fam.q)));
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t oracle_enumeration_calls() { return g_enum_calls.load(); }

namespace {

using Canon = std::vector<edge_t>; // sorted parent-graph edge ids

Canon canon_of(const OracleCycle& c) {
    Canon e = c.edges;
    std::sort(e.begin(), e.end());
    return e;
}

/* All member cycles of one family, translated to parent edge ids. */
std::vector<Canon> family_members_parent(const ComponentDecomposition& comp, std::uint32_t fi) {
    const VFamily& fam = comp.vres.families[fi];
    auto local = enumerate_family_members(comp.sub.graph, comp.vres.dags[fam.root], fam);
    std::vector<Canon> out;
    out.reserve(local.size());
    for (const EdgeCycle& c : local) {
        Canon e;
        e.reserve(c.size());
        for (edge_t le : c) e.push_back(comp.sub.edge_map[le]);
        std::sort(e.begin(), e.end());
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

OracleComparison compare_with_oracle(const Decomposition& d, const OracleReport& rep) {
    OracleComparison out;

    std::set<Canon> pipe_relevant;
    std::set<std::set<Canon>> pipe_pi, pipe_sli;
    std::map<std::set<Canon>, std::uint32_t> pipe_poly;
    bigint pipe_count = 0;
    out.pipeline_mcbs = 1;

    for (const auto& comp : d.components) {
        if (comp.vres.dags.empty())
            fail(errc::invalid_argument, "oracle comparison needs the decomposition's dags");
        std::vector<std::vector<Canon>> row_members(comp.classes.rows.size());
        for (std::size_t ri = 0; ri < comp.classes.rows.size(); ++ri) {
            row_members[ri] = family_members_parent(comp, comp.classes.rows[ri].family);
            pipe_relevant.insert(row_members[ri].begin(), row_members[ri].end());
        }
        pipe_count += comp.classes.relevant_count;
        for (const auto& pc : comp.classes.pi_classes) {
            std::set<Canon> cls;
            for (auto ri : pc.rows) cls.insert(row_members[ri].begin(), row_members[ri].end());
            std::uint32_t npoly = 0;
            for (const auto& poly : comp.classes.polyhedra)
                if (std::find(pc.sli_rows.begin(), pc.sli_rows.end(), poly.sli_row) !=
                    pc.sli_rows.end())
                    ++npoly;
            pipe_poly[cls] = npoly;
            pipe_pi.insert(std::move(cls));
        }
        for (const auto& sc : comp.classes.sli) {
            std::set<Canon> cls;
            for (auto ri : sc.members) cls.insert(row_members[ri].begin(), row_members[ri].end());
            pipe_sli.insert(std::move(cls));
        }
        out.pipeline_mcbs *= count_mcbs(comp.classes);
        out.pipeline_cost += comp.mcb.cost;
    }

    std::set<Canon> ora_relevant;
    for (std::size_t i : rep.relevant) ora_relevant.insert(canon_of(rep.cycles[i]));

    std::set<std::size_t> mcb0;
    if (!rep.mcbs.empty()) mcb0.insert(rep.mcbs.front().begin(), rep.mcbs.front().end());

    std::set<std::set<Canon>> ora_pi, ora_sli;
    std::map<std::set<Canon>, std::uint32_t> ora_poly;
    for (const auto& cls : rep.pi_classes) {
        std::set<Canon> s;
        std::uint32_t rank = 0;
        for (std::size_t i : cls) {
            s.insert(canon_of(rep.cycles[i]));
            if (mcb0.count(i)) ++rank;
        }
        std::uint32_t nsli = 0;
        for (const auto& sc : rep.sli_classes)
            if (!sc.empty() && std::find(cls.begin(), cls.end(), sc.front()) != cls.end()) ++nsli;
        ck_check(nsli >= rank, "class has fewer merged rows than basis members");
        ora_poly[s] = nsli - rank;
        ora_pi.insert(std::move(s));
    }
    for (const auto& sc : rep.sli_classes) {
        std::set<Canon> s;
        for (std::size_t i : sc) s.insert(canon_of(rep.cycles[i]));
        ora_sli.insert(std::move(s));
    }

    out.pipeline_relevant = pipe_count;
    out.oracle_relevant = rep.relevant.size();
    out.relevant_ok =
        pipe_relevant == ora_relevant && pipe_count == bigint(rep.relevant.size());
    out.oracle_mcbs = bigint(rep.mcbs.size());
    out.mcb_count_ok = out.pipeline_mcbs == out.oracle_mcbs;
    out.oracle_cost = rep.min_cost;
    out.cost_ok = out.pipeline_cost == out.oracle_cost;
    out.pi_ok = pipe_pi == ora_pi;
    out.sli_ok = pipe_sli == ora_sli;
    out.polyhedra_ok = pipe_poly == ora_poly;
    return out;
}

} // namespace cyclekit
