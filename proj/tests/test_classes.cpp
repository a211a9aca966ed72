#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyclekit/classes.hpp"
#include "cyclekit/decompose.hpp"
#include "cyclekit/fixtures.hpp"
#include "cyclekit/oracle.hpp"

using namespace cyclekit;

namespace {

const ComponentDecomposition& only_component(const Decomposition& d) {
    REQUIRE(d.components.size() == 1);
    return d.components.front();
}

} // namespace

TEST_CASE("barallene: one class of rank two, three merged rows, one closed surface") {
    Decomposition d = decompose(fixture_graph("barallene"));
    const auto& cd = only_component(d).classes;
    CHECK(cd.relevant_count == 3);
    REQUIRE(cd.rows.size() == 3);
    REQUIRE(cd.pi_classes.size() == 1);
    CHECK(cd.pi_classes[0].basis_cols.size() == 2);
    CHECK(cd.pi_classes[0].rows == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(cd.sli.size() == 3);
    REQUIRE(cd.polyhedra.size() == 1);
    CHECK(cd.polyhedra[0].num_faces == 3);
    CHECK(cd.polyhedra[0].unique);
    CHECK(count_mcbs(cd) == 3);
}

TEST_CASE("prism-hex: the five-cycle interchange class") {
    Decomposition d = decompose(fixture_graph("prism-hex"));
    const auto& comp = only_component(d);
    const auto& cd = comp.classes;

    REQUIRE(comp.vres.families.size() == 12);
    CHECK(cd.relevant_count == 9);
    REQUIRE(cd.rows.size() == 8);

    // Two triangles, the doubled-rung square, five six-rings; six in basis.
    std::multiset<std::uint32_t> lens;
    unsigned in_basis = 0;
    for (const auto& row : cd.rows) {
        lens.insert(row.length);
        in_basis += row.in_basis;
        if (row.in_basis) {
            CHECK(row.expansion == std::vector<std::uint32_t>{row.basis_pos});
            CHECK(row.diag == std::vector<std::uint32_t>{row.basis_pos});
        }
    }
    CHECK(lens == std::multiset<std::uint32_t>{3, 3, 4, 6, 6, 6, 6, 6});
    CHECK(in_basis == 6);

    // One class couples four of the six-rings over two basis columns; its five
    // member cycles include both routes through the doubled rung.
    REQUIRE(cd.pi_classes.size() == 5);
    const PiClass* big = nullptr;
    for (const auto& pc : cd.pi_classes)
        if (pc.rows.size() > 1) {
            CHECK(big == nullptr);
            big = &pc;
        }
    REQUIRE(big != nullptr);
    CHECK(big->length == 6);
    CHECK(big->rows.size() == 4);
    CHECK(big->basis_cols.size() == 2);
    bigint members = 0;
    for (std::uint32_t r : big->rows) members += comp.vres.families[cd.rows[r].family].count;
    CHECK(members == 5);

    // The two six-rings that differ by the square merge into one basis row;
    // the doubled-rung pair stays its own non-basis row.
    REQUIRE(cd.sli.size() == 7);
    const SliClass* merged = nullptr;
    const SliClass* outside = nullptr;
    for (const auto& sc : cd.sli) {
        if (sc.members.size() == 2) merged = &sc;
        if (!sc.in_basis) {
            CHECK(outside == nullptr);
            outside = &sc;
        }
    }
    REQUIRE(merged != nullptr);
    CHECK(merged->length == 6);
    CHECK(merged->count == 2);
    CHECK(merged->in_basis);
    REQUIRE(outside != nullptr);
    CHECK(outside->members.size() == 1);
    CHECK(outside->count == 2); // the family with two equal-length cycles
    for (std::uint32_t r : merged->members) {
        const RRow& row = cd.rows[r];
        if (row.in_basis) continue;
        std::multiset<std::uint32_t> exp_lens;
        for (std::uint32_t c : row.expansion) exp_lens.insert(comp.mcb.cycles[c].length);
        CHECK(exp_lens == std::multiset<std::uint32_t>{4, 6});
    }

    // The closed surface: two triangles and three six-rings, not unique
    // because the representative's row holds two cycles.
    REQUIRE(cd.polyhedra.size() == 1);
    const auto& poly = cd.polyhedra[0];
    CHECK(cd.rows[cd.sli[poly.sli_row].representative].family == poly.rep_family);
    CHECK(poly.num_faces == 5);
    std::multiset<std::uint32_t> face_lens;
    for (std::uint32_t b : poly.faces_basis) face_lens.insert(comp.mcb.cycles[b].length);
    CHECK(face_lens == std::multiset<std::uint32_t>{3, 3, 6, 6});
    CHECK(comp.vres.families[poly.rep_family].length == 6);
    CHECK(comp.vres.families[poly.rep_family].count == 2);
    CHECK_FALSE(poly.unique);

    CHECK(count_mcbs(cd) == 8);
}

TEST_CASE("hex-prism: hexagon pair merges, no closed surface") {
    Decomposition d = decompose(fixture_graph("hex-prism"));
    const auto& cd = only_component(d).classes;
    CHECK(cd.rows.size() == 8);
    CHECK(cd.pi_classes.size() == 7);
    CHECK(cd.sli.size() == 7);
    CHECK(cd.polyhedra.empty());
    CHECK(count_mcbs(cd) == 2);

    auto merged = std::find_if(cd.sli.begin(), cd.sli.end(),
                               [](const SliClass& s) { return s.members.size() == 2; });
    REQUIRE(merged != cd.sli.end());
    CHECK(merged->length == 6);
    CHECK(merged->count == 2);
    CHECK(merged->in_basis);
}

TEST_CASE("bracelet large loops: one merged row of size 2^k") {
    for (unsigned k = 2; k <= 6; ++k) {
        CAPTURE(k);
        Decomposition d = decompose(bracelet_graph(k));
        const auto& cd = only_component(d).classes;
        bigint want = bigint(1) << k;
        const SliClass* large = nullptr;
        for (const auto& sc : cd.sli)
            if (sc.length > 4) {
                CHECK(large == nullptr);
                large = &sc;
            }
        REQUIRE(large != nullptr);
        CHECK(large->count == want);
        CHECK(count_mcbs(cd) == want);
        CHECK(cd.relevant_count == bigint(k) + want);
    }
}

TEST_CASE("overlapping diamonds admit four bases") {
    Decomposition d = decompose(fixture_graph("overlapping-diamonds"));
    CHECK(count_mcbs(only_component(d).classes) == 4);
}

TEST_CASE("twistane: two closed surfaces, eight bases") {
    Decomposition d = decompose(fixture_graph("twistane"));
    const auto& cd = only_component(d).classes;
    CHECK(cd.polyhedra.size() == 2);
    CHECK(count_mcbs(cd) == 8);
}

TEST_CASE("glued cubes: thirty-five bases") {
    Decomposition d = decompose(fixture_graph("glued-cubes"));
    CHECK(count_mcbs(only_component(d).classes) == 35);
}

TEST_CASE("adamantane: one class of four hexagons at rank three") {
    Decomposition d = decompose(fixture_graph("adamantane"));
    const auto& cd = only_component(d).classes;
    REQUIRE(cd.pi_classes.size() == 1);
    CHECK(cd.pi_classes[0].rows.size() == 4);
    CHECK(cd.pi_classes[0].basis_cols.size() == 3);
    CHECK(cd.sli.size() == 4);
    REQUIRE(cd.polyhedra.size() == 1);
    CHECK(cd.polyhedra[0].num_faces == 4);
    CHECK(count_mcbs(cd) == 4);
}

TEST_CASE("every polyhedron closes: faces xor to the representative") {
    for (const auto& name : {"barallene", "prism-hex", "twistane", "adamantane", "glued-cubes"}) {
        CAPTURE(name);
        Decomposition d = decompose(fixture_graph(name));
        for (const auto& comp : d.components) {
            const auto& cd = comp.classes;
            for (const auto& poly : cd.polyhedra) {
                const auto& rep_row = cd.rows[cd.sli[poly.sli_row].representative];
                CHECK(rep_row.expansion == poly.faces_basis);
                CycleVec acc = comp.vres.families[poly.rep_family].vec;
                for (std::uint32_t b : poly.faces_basis)
                    acc = vec_xor(acc, comp.mcb.cycles[b].vec);
                CHECK(acc.empty());
                CHECK(poly.num_faces == poly.faces_basis.size() + 1);
            }
        }
    }
}

TEST_CASE("pipeline equals brute force on assorted fixtures") {
    for (const auto& name :
         {"triangle", "two-hexagons", "barallene", "square-pyramid", "three-diamonds"}) {
        CAPTURE(name);
        Graph g = fixture_graph(name);
        OracleComparison cmp = compare_with_oracle(decompose(g), oracle_report(g));
        CHECK(cmp.relevant_ok);
        CHECK(cmp.mcb_count_ok);
        CHECK(cmp.cost_ok);
        CHECK(cmp.pi_ok);
        CHECK(cmp.sli_ok);
        CHECK(cmp.polyhedra_ok);
    }
}

TEST_CASE("three diamonds: eleven relevant cycles, eight bases") {
    Decomposition d = decompose(fixture_graph("three-diamonds"));
    const auto& cd = only_component(d).classes;
    CHECK(cd.relevant_count == 11);
    CHECK(count_mcbs(cd) == 8);
}
