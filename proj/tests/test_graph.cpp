#include <doctest.h>

#include <algorithm>
#include <functional>

#include "cyclekit/errors.hpp"
#include "cyclekit/fixtures.hpp"
#include "cyclekit/graph.hpp"

using namespace cyclekit;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return errc{-1};
}

} // namespace

TEST_CASE("graph construction normalizes and validates") {
    Graph g(4, {{1, 0}, {2, 1}, {0, 2}, {3, 2}});
    CHECK(g.num_nodes() == 4);
    CHECK(g.num_edges() == 4);
    // Lexicographic edge order with u < v.
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{1, 2});
    CHECK(g.edge(3) == Edge{2, 3});
    CHECK(g.neighbors(2) == std::vector<node_t>{0, 1, 3});
    CHECK(g.degree(2) == 3);
    CHECK(g.edge_id(2, 0) == 1);
    CHECK(g.edge_id(0, 3) == -1);
    CHECK(g.has_edge(3, 2));
    CHECK_FALSE(g.has_edge(0, 3));

    CHECK(code_of([] { Graph(3, {{0, 0}}); }) == errc::self_loop);
    CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == errc::duplicate_edge);
    CHECK(code_of([] { Graph(3, {{0, 3}}); }) == errc::index_out_of_range);
}

TEST_CASE("cyclomatic number counts independent cycles per component") {
    CHECK(Graph(3, {{0, 1}, {1, 2}}).cyclomatic_number() == 0);
    CHECK(Graph(3, {{0, 1}, {1, 2}, {0, 2}}).cyclomatic_number() == 1);
    CHECK(fixture_graph("two-hexagons").cyclomatic_number() == 2);
    // Two disjoint triangles: m - n + #components = 6 - 6 + 2.
    Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(two.cyclomatic_number() == 2);

    auto ids = two.connected_component_ids();
    CHECK(ids[0] == ids[1]);
    CHECK(ids[0] == ids[2]);
    CHECK(ids[3] == ids[4]);
    CHECK(ids[0] != ids[3]);
}

TEST_CASE("biconnected components split at cut nodes and bridges") {
    // Triangle - bridge - triangle.
    Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    auto blocks = biconnected_components(g);
    REQUIRE(blocks.size() == 3);
    std::vector<size_t> sizes;
    for (const auto& b : blocks) sizes.push_back(b.edge_ids.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<size_t>{1, 3, 3});

    // Hexagons sharing an edge stay one block.
    CHECK(biconnected_components(fixture_graph("two-hexagons")).size() == 1);
}

TEST_CASE("extract_subgraph relabels consistently") {
    Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    auto blocks = biconnected_components(g);
    for (const auto& b : blocks) {
        Subgraph sub = extract_subgraph(g, b.edge_ids);
        CHECK(sub.graph.num_edges() == b.edge_ids.size());
        for (edge_t le = 0; le < sub.graph.num_edges(); ++le) {
            auto [lu, lv] = sub.graph.edge(le);
            Edge orig = g.edge(sub.edge_map[le]);
            Edge mapped{std::min(sub.node_map[lu], sub.node_map[lv]),
                        std::max(sub.node_map[lu], sub.node_map[lv])};
            CHECK(mapped == orig);
        }
    }
}

TEST_CASE("spanning forest is breadth-first from the lowest node") {
    Graph sq(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    SpanningForest f = spanning_forest(sq);
    CHECK(f.roots == std::vector<node_t>{0});
    CHECK(f.depth == std::vector<node_t>{0, 1, 2, 1});
    CHECK(f.parent[0] == -1);
    CHECK(f.parent[1] == 0);
    CHECK(f.parent[3] == 0);
    CHECK(f.parent[2] == 1); // neighbor 1 enqueued before 3
    REQUIRE(f.nontree.size() == 1);
    CHECK(sq.edge(f.nontree[0]) == Edge{2, 3});
    CHECK_FALSE(f.is_tree_edge[f.nontree[0]]);

    // One root per connected component, lowest node first.
    Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    SpanningForest f2 = spanning_forest(two);
    CHECK(f2.roots == std::vector<node_t>{0, 3});
    CHECK(f2.nontree.size() == 2);
}

TEST_CASE("fixtures resolve by name") {
    for (const auto& name : fixture_names()) {
        Graph g = fixture_graph(name);
        CHECK(g.num_nodes() > 0);
    }
    CHECK(fixture_graph("bracelet-5").num_nodes() == 20);
    CHECK(code_of([] { fixture_graph("nope"); }) == errc::invalid_argument);
    CHECK(code_of([] { fixture_graph("bracelet-1"); }) == errc::invalid_argument);
}
