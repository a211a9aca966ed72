#include "cyclekit/intersections.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclekit/bigint.hpp"
#include "cyclekit/errors.hpp"

namespace cyclekit {

namespace {

void ck_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

bool contains(const std::vector<edge_t>& sorted, edge_t e) {
    return std::binary_search(sorted.begin(), sorted.end(), e);
}

std::vector<node_t> cycle_nodes(const Graph& g, const EdgeCycle& c) {
    std::vector<node_t> nodes;
    for (edge_t e : c) {
        auto [u, v] = g.edge(e);
        nodes.push_back(u);
        nodes.push_back(v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

/* Rotate a node loop so no shared run straddles the wrap-around point. */
std::vector<node_t> rotate_off_shared(const std::vector<node_t>& seq, const Graph& g,
                                      const std::vector<edge_t>& shared_edges) {
    const size_t n = seq.size();
    size_t r = 0;
    for (; r < n; ++r) {
        node_t prev = seq[(r + n - 1) % n];
        if (!contains(shared_edges, static_cast<edge_t>(g.edge_id(prev, seq[r])))) break;
    }
    ck_check(r < n, "one cycle is contained in the other");
    std::vector<node_t> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = seq[(r + i) % n];
    return out;
}

struct Run {
    size_t start, end; // positions in the rotated loop, start <= end
    std::vector<node_t> nodes;
};

std::vector<Run> extract_runs(const std::vector<node_t>& seq, const Graph& g,
                              const std::vector<node_t>& shared_nodes,
                              const std::vector<edge_t>& shared_edges) {
    auto node_shared = [&](node_t v) {
        return std::binary_search(shared_nodes.begin(), shared_nodes.end(), v);
    };
    std::vector<Run> runs;
    const size_t n = seq.size();
    for (size_t i = 0; i < n;) {
        if (!node_shared(seq[i])) {
            ++i;
            continue;
        }
        Run run{i, i, {seq[i]}};
        while (run.end + 1 < n &&
               contains(shared_edges,
                        static_cast<edge_t>(g.edge_id(seq[run.end], seq[run.end + 1])))) {
            ++run.end;
            run.nodes.push_back(seq[run.end]);
        }
        i = run.end + 1;
        runs.push_back(std::move(run));
    }
    return runs;
}

/* Arc of the loop from position `from` to position `to`, inclusive; taking
 * the full loop when they coincide. */
std::vector<node_t> arc_between(const std::vector<node_t>& seq, size_t from, size_t to) {
    const size_t n = seq.size();
    const size_t edges = (to + n - from - 1) % n + 1;
    std::vector<node_t> out;
    out.reserve(edges + 1);
    for (size_t i = 0; i <= edges; ++i) out.push_back(seq[(from + i) % n]);
    return out;
}

EdgeCycle arc_edges(const Graph& g, const std::vector<node_t>& arc) {
    EdgeCycle out;
    for (size_t i = 0; i + 1 < arc.size(); ++i)
        out.push_back(static_cast<edge_t>(g.edge_id(arc[i], arc[i + 1])));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

const char* violation_name(ViolationKind k) {
    switch (k) {
    case ViolationKind::orientation: return "orientation";
    case ViolationKind::sm_path_equal: return "sm_path_equal";
    case ViolationKind::sm_path_len: return "sm_path_len";
    case ViolationKind::lg_path_equal: return "lg_path_equal";
    case ViolationKind::lg_path_len: return "lg_path_len";
    }
    return "?";
}

IntersectionResult decompose_intersection(const Graph& g, const EdgeCycle& a, const EdgeCycle& b) {
    if (!is_simple_loop(g, a) || !is_simple_loop(g, b))
        fail(errc::invalid_argument, "both cycles must be simple loops");
    if (a == b) fail(errc::invalid_argument, "cycles are identical");

    IntersectionDecomposition d;
    d.swapped = a.size() > b.size();
    const EdgeCycle& c1 = d.swapped ? b : a;
    const EdgeCycle& c2 = d.swapped ? a : b;
    d.len1 = static_cast<std::uint32_t>(c1.size());
    d.len2 = static_cast<std::uint32_t>(c2.size());

    std::vector<edge_t> shared_edges;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(),
                          std::back_inserter(shared_edges));
    std::vector<node_t> n1 = cycle_nodes(g, c1);
    std::vector<node_t> n2 = cycle_nodes(g, c2);
    std::vector<node_t> shared_nodes;
    std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(),
                          std::back_inserter(shared_nodes));
    if (shared_nodes.empty()) fail(errc::disjoint_cycles, "cycles share no node");

    d.circ1 = rotate_off_shared(circulation(g, c1), g, shared_edges);
    std::vector<Run> runs1 = extract_runs(d.circ1, g, shared_nodes, shared_edges);
    const size_t k = runs1.size();

    std::vector<Run> runs2;
    size_t shift = 0;
    bool matched = false;
    std::vector<node_t> base2 = circulation(g, c2);
    for (int orient = 0; orient < 2 && !matched; ++orient) {
        if (orient == 1) std::reverse(base2.begin(), base2.end());
        std::vector<node_t> cand = rotate_off_shared(base2, g, shared_edges);
        std::vector<Run> runs = extract_runs(cand, g, shared_nodes, shared_edges);
        ck_check(runs.size() == k, "shared components differ between the two cycles");
        for (size_t s = 0; s < k && !matched; ++s) {
            bool ok = true;
            for (size_t i = 0; i < k && ok; ++i) ok = runs[(i + s) % k].nodes == runs1[i].nodes;
            if (ok) {
                matched = true;
                shift = s;
                d.circ2 = std::move(cand);
                runs2 = std::move(runs);
            }
        }
    }
    if (!matched)
        return FormatViolation{ViolationKind::orientation,
                               "shared paths do not align in order and orientation"};

    for (size_t i = 0; i < k; ++i) {
        d.paths.push_back({runs1[i].nodes});
        SeparatorPair pair;
        pair.q1 = arc_between(d.circ1, runs1[i].end, runs1[(i + 1) % k].start);
        const Run& r2a = runs2[(i + shift) % k];
        const Run& r2b = runs2[(i + 1 + shift) % k];
        pair.q2 = arc_between(d.circ2, r2a.end, r2b.start);
        d.pairs.push_back(std::move(pair));
    }

    // Order the arc pairs so the one absorbing the length difference is last.
    size_t unequal = 0, last = 0;
    for (size_t i = 0; i < k; ++i)
        if (d.pairs[i].len1() != d.pairs[i].len2()) {
            ++unequal;
            last = i;
        }
    if (unequal > 1)
        return FormatViolation{ViolationKind::sm_path_equal,
                               "more than one arc pair differs in length"};
    if (unequal == 0) {
        std::uint32_t best = 0;
        for (size_t i = 0; i < k; ++i) {
            std::uint32_t m = std::max(d.pairs[i].len1(), d.pairs[i].len2());
            if (m > best) {
                best = m;
                last = i;
            }
        }
    }
    if (last != k - 1) {
        std::rotate(d.paths.begin(), d.paths.begin() + (last + 1), d.paths.end());
        std::rotate(d.pairs.begin(), d.pairs.begin() + (last + 1), d.pairs.end());
    }

    for (size_t i = 0; i + 1 < k; ++i) {
        const SeparatorPair& p = d.pairs[i];
        if (2 * p.len1() > d.len1 || 2 * p.len2() > d.len1)
            return FormatViolation{ViolationKind::sm_path_len,
                                   "a non-final arc exceeds half the shorter cycle"};
    }
    const SeparatorPair& lg = d.pairs.back();
    if (lg.len2() != lg.len1() + d.len2 - d.len1)
        return FormatViolation{ViolationKind::lg_path_equal,
                               "final arcs do not absorb the length difference"};
    if (2 * lg.len1() < d.len1 || 2 * lg.len2() < d.len2)
        return FormatViolation{ViolationKind::lg_path_len,
                               "a final arc is shorter than half its cycle"};
    return d;
}

std::uint32_t intersection_path_count(const Graph& g, const EdgeCycle& a, const EdgeCycle& b) {
    try {
        IntersectionResult r = decompose_intersection(g, a, b);
        ck_check(std::holds_alternative<IntersectionDecomposition>(r),
                 "basis pair violates the intersection format");
        return static_cast<std::uint32_t>(std::get<IntersectionDecomposition>(r).paths.size());
    } catch (const error& e) {
        if (e.code() == errc::disjoint_cycles) return 0;
        throw;
    }
}

namespace {

/* GF(2) expansion of `target` over `basis` cycles, by elimination on edge
 * bitsets with selection bookkeeping. */
std::vector<size_t> expand_over(const Graph& g, const std::vector<EdgeCycle>& basis,
                                const EdgeCycle& target) {
    const size_t words = (g.num_edges() + 63) / 64;
    auto to_bits = [&](const EdgeCycle& c) {
        std::vector<std::uint64_t> w(words, 0);
        for (edge_t e : c) w[e >> 6] |= std::uint64_t{1} << (e & 63);
        return w;
    };
    struct Row {
        std::vector<std::uint64_t> bits;
        std::vector<std::uint64_t> sel; // which basis cycles were folded in
    };
    const size_t sel_words = (basis.size() + 63) / 64;
    std::vector<Row> rows;
    std::vector<long> pivot_of(g.num_edges(), -1);
    for (size_t i = 0; i < basis.size(); ++i) {
        Row r{to_bits(basis[i]), std::vector<std::uint64_t>(sel_words, 0)};
        r.sel[i >> 6] |= std::uint64_t{1} << (i & 63);
        for (size_t e = 0; e < g.num_edges(); ++e) {
            if (!((r.bits[e >> 6] >> (e & 63)) & 1)) continue;
            if (pivot_of[e] < 0) {
                pivot_of[e] = static_cast<long>(rows.size());
                rows.push_back(std::move(r));
                break;
            }
            const Row& p = rows[pivot_of[e]];
            for (size_t w = 0; w < words; ++w) r.bits[w] ^= p.bits[w];
            for (size_t w = 0; w < sel_words; ++w) r.sel[w] ^= p.sel[w];
        }
    }
    Row t{to_bits(target), std::vector<std::uint64_t>(sel_words, 0)};
    for (size_t e = 0; e < g.num_edges(); ++e) {
        if (!((t.bits[e >> 6] >> (e & 63)) & 1)) continue;
        ck_check(pivot_of[e] >= 0, "cycle lies outside the basis span");
        const Row& p = rows[pivot_of[e]];
        for (size_t w = 0; w < words; ++w) t.bits[w] ^= p.bits[w];
        for (size_t w = 0; w < sel_words; ++w) t.sel[w] ^= p.sel[w];
    }
    std::vector<size_t> out;
    for (size_t i = 0; i < basis.size(); ++i)
        if ((t.sel[i >> 6] >> (i & 63)) & 1) out.push_back(i);
    return out;
}

} // namespace

size_t single_path_exchange(const Graph& g, std::vector<EdgeCycle>& mcb, size_t a, size_t b) {
    IntersectionResult res = decompose_intersection(g, mcb[a], mcb[b]);
    ck_check(std::holds_alternative<IntersectionDecomposition>(res),
             "basis pair violates the intersection format");
    const IntersectionDecomposition& d = std::get<IntersectionDecomposition>(res);
    const size_t k = d.paths.size();
    if (k < 2) fail(errc::not_applicable, "pair already meets over a single path");

    const size_t short_idx = d.swapped ? b : a;
    const EdgeCycle& c1 = mcb[short_idx];

    EdgeCycle replacement;
    const bool antipodal = k == 2 && d.paths[0].nodes.size() == 1 &&
                           d.paths[1].nodes.size() == 1 && 2 * d.pairs[0].len1() == d.len1;
    if (antipodal) {
        // Both arcs of the shorter cycle are half-length: either arc may be
        // swapped against the other cycle's short arc, but only the candidate
        // whose expansion covers the original keeps the basis minimal.
        EdgeCycle shared2 = arc_edges(g, d.pairs[0].q2);
        EdgeCycle cand1 = cycle_xor(arc_edges(g, d.pairs[0].q1), shared2);
        EdgeCycle cand2 = cycle_xor(arc_edges(g, d.pairs[1].q1), shared2);
        std::vector<size_t> exp = expand_over(g, mcb, cand1);
        if (std::find(exp.begin(), exp.end(), short_idx) != exp.end()) {
            replacement = std::move(cand1);
        } else {
            exp = expand_over(g, mcb, cand2);
            ck_check(std::find(exp.begin(), exp.end(), short_idx) != exp.end(),
                     "neither half-swap candidate expands over the original cycle");
            replacement = std::move(cand2);
        }
    } else {
        replacement = c1;
        for (size_t i = 0; i + 1 < k; ++i) {
            EdgeCycle exch =
                cycle_xor(arc_edges(g, d.pairs[i].q1), arc_edges(g, d.pairs[i].q2));
            ck_check(exch.size() < c1.size(), "exchange cycle not shorter than the target");
            replacement = cycle_xor(replacement, exch);
        }
    }

    ck_check(replacement.size() == c1.size(), "exchange changed the cycle length");
    ck_check(is_simple_loop(g, replacement), "exchange produced a non-loop");
    mcb[short_idx] = std::move(replacement);
    const size_t other_idx = short_idx == a ? b : a;
    ck_check(intersection_path_count(g, mcb[short_idx], mcb[other_idx]) == 1,
             "exchange did not reach a single shared path");
    return short_idx;
}

PostprocessResult postprocess_mcb(const Graph& g, std::vector<EdgeCycle> mcb,
                                  std::mt19937_64& rng, unsigned n_max) {
    const size_t n = mcb.size();
    std::vector<std::vector<char>> multi(n, std::vector<char>(n, 0));
    auto refresh = [&](size_t i, size_t j) {
        multi[i][j] = multi[j][i] = (intersection_path_count(g, mcb[i], mcb[j]) > 1);
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) refresh(i, j);

    PostprocessResult out;
    for (unsigned iter = 0; iter <= n_max; ++iter) {
        std::vector<std::pair<size_t, size_t>> bad;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                if (multi[i][j]) bad.emplace_back(i, j);
        if (bad.empty()) {
            out.mcb = std::move(mcb);
            return out;
        }
        if (iter == n_max) break;
        auto [a, b] = bad[uniform_u64(bad.size(), rng)];
        size_t changed = single_path_exchange(g, mcb, a, b);
        ++out.exchanges;
        for (size_t j = 0; j < n; ++j)
            if (j != changed) refresh(changed, j);
    }
    fail(errc::not_converged, "postprocessing did not reach pairwise single paths");
}

DualGraph build_dual_graph(const Graph& g, const std::vector<EdgeCycle>& mcb) {
    DualGraph dg;
    for (const EdgeCycle& c : mcb)
        dg.node_weights.push_back(static_cast<std::uint32_t>(c.size()));
    for (size_t i = 0; i < mcb.size(); ++i) {
        for (size_t j = i + 1; j < mcb.size(); ++j) {
            std::uint32_t k = intersection_path_count(g, mcb[i], mcb[j]);
            if (k == 0) continue;
            if (k > 1) fail(errc::multi_path_pair, "a basis pair still meets over several paths");
            IntersectionResult r = decompose_intersection(g, mcb[i], mcb[j]);
            const auto& d = std::get<IntersectionDecomposition>(r);
            dg.edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                d.paths[0].edge_count()});
        }
    }
    return dg;
}

} // namespace cyclekit
