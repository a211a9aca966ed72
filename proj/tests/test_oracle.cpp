#include <doctest.h>

#include <set>

#include "cyclekit/errors.hpp"
#include "cyclekit/fixtures.hpp"
#include "cyclekit/oracle.hpp"

using namespace cyclekit;

TEST_CASE("triangle: one cycle, one basis") {
    Graph g = fixture_graph("triangle");
    OracleReport r = oracle_report(g);
    REQUIRE(r.cycles.size() == 1);
    CHECK(r.cycles[0].simple);
    CHECK(r.relevant == std::vector<size_t>{0});
    CHECK(r.mcbs == std::vector<std::vector<size_t>>{{0}});
    CHECK(r.min_cost == 3);
    CHECK(r.pi_classes.size() == 1);
    CHECK(r.sli_classes.size() == 1);
}

TEST_CASE("barallene: three hexagons, any two form a basis") {
    Graph g = fixture_graph("barallene");
    OracleReport r = oracle_report(g);
    REQUIRE(r.cycles.size() == 3); // 2^2 - 1
    for (const auto& c : r.cycles) {
        CHECK(c.edges.size() == 6);
        CHECK(c.simple);
    }
    CHECK(r.relevant.size() == 3);
    CHECK(r.mcbs.size() == 3);
    CHECK(r.min_cost == 12);
    REQUIRE(r.pi_classes.size() == 1);
    CHECK(r.pi_classes[0].size() == 3);
    CHECK(r.sli_classes.size() == 3); // no two expand identically
}

TEST_CASE("cube: six faces relevant, any five form a basis") {
    Graph g = fixture_graph("cube");
    OracleReport r = oracle_report(g);
    CHECK(r.cycles.size() == 31);
    CHECK(r.relevant.size() == 6);
    for (size_t i : r.relevant) CHECK(r.cycles[i].edges.size() == 4);
    CHECK(r.mcbs.size() == 6);
    CHECK(r.min_cost == 20);
    REQUIRE(r.pi_classes.size() == 1);
    CHECK(r.pi_classes[0].size() == 6);
}

TEST_CASE("shared-edge hexagons: the ten-ring is never relevant") {
    Graph g = fixture_graph("two-hexagons");
    OracleReport r = oracle_report(g);
    REQUIRE(r.cycles.size() == 3);
    CHECK(r.relevant.size() == 2);
    for (size_t i : r.relevant) CHECK(r.cycles[i].edges.size() == 6);
    CHECK(r.mcbs.size() == 1);
}

TEST_CASE("adamantane: four hexagons in one class, four merged rows") {
    Graph g = fixture_graph("adamantane");
    OracleReport r = oracle_report(g);
    CHECK(r.relevant.size() == 4);
    for (size_t i : r.relevant) CHECK(r.cycles[i].edges.size() == 6);
    REQUIRE(r.pi_classes.size() == 1);
    CHECK(r.pi_classes[0].size() == 4);
    CHECK(r.sli_classes.size() == 4);
    CHECK(r.mcbs.size() == 4); // rank 3: drop any one of the four
}

TEST_CASE("hex-prism: the hexagon pair shares one merged row") {
    Graph g = fixture_graph("hex-prism");
    OracleReport r = oracle_report(g);
    CHECK(r.relevant.size() == 8); // six squares + two hexagons
    CHECK(r.mcbs.size() == 2);
    CHECK(r.min_cost == 30);
    std::multiset<size_t> sli_sizes;
    for (const auto& c : r.sli_classes) sli_sizes.insert(c.size());
    CHECK(sli_sizes == std::multiset<size_t>{1, 1, 1, 1, 1, 1, 2});
}

TEST_CASE("bracelet-2: the four large loops are pairwise interchangeable") {
    Graph g = bracelet_graph(2);
    OracleReport r = oracle_report(g);
    CHECK(r.relevant.size() == 6); // two diamonds + four six-loops
    std::multiset<size_t> sli_sizes;
    for (const auto& c : r.sli_classes) sli_sizes.insert(c.size());
    CHECK(sli_sizes == std::multiset<size_t>{1, 1, 4});
    CHECK(r.mcbs.size() == 4);
}

TEST_CASE("enumeration is capped unless overridden") {
    Graph g = bracelet_graph(5); // 25 edges
    SpanningForest f = spanning_forest(g);
    CHECK_THROWS_AS(enumerate_cycles(g, f), error);
    auto cycles = enumerate_cycles(g, f, true);
    CHECK(cycles.size() == 63); // 2^6 - 1
}

TEST_CASE("enumeration calls are counted") {
    std::uint64_t before = oracle_enumeration_calls();
    Graph g = fixture_graph("triangle");
    oracle_report(g);
    CHECK(oracle_enumeration_calls() == before + 1);
}
