#include <doctest.h>

#include <random>
#include <set>

#include "cyclekit/fixtures.hpp"
#include "cyclekit/mcb.hpp"
#include "cyclekit/oracle.hpp"

using namespace cyclekit;

namespace {

struct Built {
    Graph g;
    SpanningForest f;
    VFamilyResult res;
    R0Matrix r0;
    McbBasis mcb;
};

Built build(const std::string& name) {
    Built b{fixture_graph(name), {}, {}, {}, {}};
    b.f = spanning_forest(b.g);
    b.res = compute_vfamilies(b.g, b.f);
    b.r0 = build_r0(b.res.families, static_cast<std::uint32_t>(b.f.nontree.size()));
    b.mcb = compute_mcb(b.res.families, b.r0, static_cast<std::uint32_t>(b.f.nontree.size()));
    return b;
}

} // namespace

TEST_CASE("barallene basis: first two hexagons, cost 12") {
    Built b = build("barallene");
    REQUIRE(b.mcb.cycles.size() == 2);
    CHECK(b.mcb.cost == 12);
    CHECK(b.mcb.cycles[0].length == 6);
    CHECK(b.mcb.cycles[1].length == 6);
    // The remaining hexagon expands over both basis cycles.
    for (const auto& fam : b.res.families) {
        bool in_basis = fam.vec == b.mcb.cycles[0].vec || fam.vec == b.mcb.cycles[1].vec;
        if (!in_basis) CHECK(expand_in_mcb(b.mcb, fam.vec) == std::vector<std::uint32_t>{0, 1});
    }
}

TEST_CASE("cube basis: five squares, the sixth face expands over all") {
    Built b = build("cube");
    REQUIRE(b.mcb.cycles.size() == 5);
    CHECK(b.mcb.cost == 20);
    std::set<std::uint32_t> used;
    for (const auto& c : b.mcb.cycles) {
        CHECK(c.length == 4);
        used.insert(c.family);
    }
    for (std::uint32_t fi = 0; fi < b.res.families.size(); ++fi) {
        const auto& fam = b.res.families[fi];
        if (fam.length != 4 || used.count(fi)) continue;
        CHECK(expand_in_mcb(b.mcb, fam.vec) ==
              std::vector<std::uint32_t>{0, 1, 2, 3, 4});
    }
}

TEST_CASE("square pyramid: the unique basis is the four triangles") {
    Built b = build("square-pyramid");
    REQUIRE(b.mcb.cycles.size() == 4);
    CHECK(b.mcb.cost == 12);
    for (const auto& c : b.mcb.cycles) CHECK(c.length == 3);
}

TEST_CASE("dual witnesses expand basis cycles to unit vectors") {
    for (const auto& name : {"barallene", "cube", "prism-hex", "glued-cubes"}) {
        Built b = build(name);
        for (std::uint32_t i = 0; i < b.mcb.cycles.size(); ++i)
            CHECK(expand_in_mcb(b.mcb, b.mcb.cycles[i].vec) == std::vector<std::uint32_t>{i});
    }
}

TEST_CASE("expansion reconstructs the expanded vector") {
    Built b = build("prism-hex");
    for (const auto& fam : b.res.families) {
        auto coords = expand_in_mcb(b.mcb, fam.vec);
        CycleVec acc;
        for (std::uint32_t c : coords) acc = vec_xor(acc, b.mcb.cycles[c].vec);
        CHECK(acc == fam.vec);
    }
}

TEST_CASE("basis cost matches brute force on random graphs") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 50; ++it) {
        node_t n = 4 + static_cast<node_t>(rng() % 5);
        std::set<Edge> picked;
        for (node_t v = 1; v < n; ++v)
            picked.insert({static_cast<node_t>(rng() % v), v});
        edge_t target = std::min(static_cast<edge_t>(picked.size() + rng() % 5),
                                 static_cast<edge_t>(n * (n - 1) / 2));
        while (picked.size() < target) {
            node_t u = static_cast<node_t>(rng() % n);
            node_t v = static_cast<node_t>(rng() % n);
            if (u != v) picked.insert({std::min(u, v), std::max(u, v)});
        }
        Graph g(n, {picked.begin(), picked.end()});
        SpanningForest f = spanning_forest(g);
        auto nu = static_cast<std::uint32_t>(f.nontree.size());
        if (nu == 0) continue;
        VFamilyResult res = compute_vfamilies(g, f);
        R0Matrix r0 = build_r0(res.families, nu);
        McbBasis mcb = compute_mcb(res.families, r0, nu);

        auto cycles = enumerate_cycles(g, f);
        auto mcbs = enumerate_mcbs(cycles, nu);
        std::uint64_t want = 0;
        for (size_t c : mcbs.front()) want += cycles[c].edges.size();
        CHECK(mcb.cost == want);
    }
}
