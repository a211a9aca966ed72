#include "cyclekit/fixtures.hpp"

#include <cstdlib>

namespace cyclekit {

namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

/* Two hexagons sharing the edge (0,5); the outer 10-ring is their sum. */
Graph two_hexagons() {
    return Graph(10, {{0, 1},
                      {1, 2},
                      {2, 3},
                      {3, 4},
                      {4, 5},
                      {0, 5},
                      {5, 6},
                      {6, 7},
                      {7, 8},
                      {8, 9},
                      {0, 9}});
}

/*
 * Carbon skeleton of barallene (bicyclo[2.2.2]octa-2,5,7-triene): two
 * bridgehead nodes joined by three 2-node bridges.  Three hexagons, any two
 * of which form a minimum basis.
 */
Graph barallene() {
    return Graph(8, {{0, 1},
                     {1, 2},
                     {2, 7},
                     {0, 3},
                     {3, 4},
                     {4, 7},
                     {0, 5},
                     {5, 6},
                     {6, 7}});
}

Graph cube() {
    return Graph(8, {// bottom face 0-1-2-3, top face 4-5-6-7
                     {0, 1},
                     {1, 2},
                     {2, 3},
                     {0, 3},
                     {4, 5},
                     {5, 6},
                     {6, 7},
                     {4, 7},
                     {0, 4},
                     {1, 5},
                     {2, 6},
                     {3, 7}});
}

/* Base square 0-1-2-3 plus apex 4.  The base is the sum of the triangles. */
Graph square_pyramid() {
    return Graph(5, {{0, 1},
                     {1, 2},
                     {2, 3},
                     {0, 3},
                     {0, 4},
                     {1, 4},
                     {2, 4},
                     {3, 4}});
}

/*
 * Adamantane carbon skeleton: tertiary carbons 0-3, one secondary carbon
 * between each pair.  Four hexagonal faces, one per triple of tertiary
 * carbons; each edge lies on exactly two faces so the faces sum to zero.
 */
Graph adamantane() {
    std::vector<Edge> edges;
    node_t next = 4;
    for (node_t i = 0; i < 4; ++i) {
        for (node_t j = i + 1; j < 4; ++j) {
            edges.push_back({i, next});
            edges.push_back({j, next});
            ++next;
        }
    }
    return Graph(next, edges);
}

/*
 * Twistane carbon skeleton: hexagon 0-5 plus bridges 0-6-7-3 and 1-8-9-4.
 * Five hexagonal rings; the two rings through each bridge sum to the base
 * hexagon, giving two distinct three-face null sums.
 */
Graph twistane() {
    return Graph(10, {{0, 1},
                      {1, 2},
                      {2, 3},
                      {3, 4},
                      {4, 5},
                      {0, 5},
                      {0, 6},
                      {6, 7},
                      {3, 7},
                      {1, 8},
                      {8, 9},
                      {4, 9}});
}

/*
 * Three diamonds chained into a loop.  Kept separate from bracelet_graph(3)
 * because the node numbering here pins down which of the eight 9-rings land
 * in which search family.
 */
Graph three_diamonds() {
    return Graph(12, {
                         {0, 1},
                         {1, 3},
                         {2, 3},
                         {0, 2}, // diamond 0-1-3-2
                         {4, 5},
                         {5, 7},
                         {6, 7},
                         {4, 6}, // diamond 4-5-7-6
                         {8, 10},
                         {10, 11},
                         {9, 11},
                         {8, 9}, // diamond 8-10-11-9
                         {1, 4},
                         {7, 9},
                         {2, 10}, // connectors
                     });
}

/*
 * Square 0-1-2-3 with two length-4 chords: 0-4-5-6-2 and 1-7-8-9-3.  The two
 * 6-rings on each chord differ by the central square, so they collapse to one
 * class apiece; the left and right classes never trade places in a basis.
 */
Graph overlapping_diamonds() {
    return Graph(10, {{0, 1},
                      {1, 2},
                      {2, 3},
                      {0, 3},
                      {0, 4},
                      {4, 5},
                      {5, 6},
                      {2, 6},
                      {1, 7},
                      {7, 8},
                      {8, 9},
                      {3, 9}});
}

/*
 * Triangular prism with its rungs subdivided, one rung doubled into the twin
 * paths 3-7-12 and 3-8-12, and a six-ring glued along the rung 0-5-2.
 * Corners: top triangle 0-3-9, bottom 2-11-12; rungs 0-5-2 and 9-1-11.
 * The prism's three six-sided faces plus the doubled-rung twins form one
 * five-cycle interchange class; the glued six-ring stays on its own.
 */
Graph prism_hex() {
    return Graph(13, {{0, 3},
                      {0, 9},
                      {3, 9}, // top triangle
                      {2, 12},
                      {11, 12},
                      {2, 11}, // bottom triangle
                      {0, 5},
                      {2, 5}, // rung 0-5-2
                      {1, 9},
                      {1, 11}, // rung 9-1-11
                      {3, 7},
                      {7, 12},
                      {3, 8},
                      {8, 12}, // doubled rung
                      {0, 10},
                      {6, 10},
                      {4, 6},
                      {2, 4}}); // six-ring arc 0-10-6-4-2
}

/* Hexagonal prism: the two hexagons differ by the six squares. */
Graph hex_prism() {
    std::vector<Edge> edges;
    for (node_t i = 0; i < 6; ++i) {
        edges.push_back({i, (i + 1) % 6});
        edges.push_back({node_t(i + 6), node_t((i + 1) % 6 + 6)});
        edges.push_back({i, node_t(i + 6)});
    }
    return Graph(12, edges);
}

/* Two cubes sharing the face 4-5-6-7; all eleven squares interchange. */
Graph glued_cubes() {
    std::vector<Edge> edges;
    for (node_t layer = 0; layer < 3; ++layer) {
        node_t base = layer * 4;
        for (node_t i = 0; i < 4; ++i) {
            edges.push_back({node_t(base + i), node_t(base + (i + 1) % 4)});
            if (layer > 0) edges.push_back({node_t(base - 4 + i), node_t(base + i)});
        }
    }
    return Graph(12, edges);
}

} // namespace

Graph bracelet_graph(unsigned k) {
    if (k < 2) fail(errc::invalid_argument, "bracelet needs k >= 2");
    std::vector<Edge> edges;
    for (node_t i = 0; i < k; ++i) {
        node_t in = 4 * i, top = 4 * i + 1, bottom = 4 * i + 2, out = 4 * i + 3;
        edges.push_back({in, top});
        edges.push_back({in, bottom});
        edges.push_back({top, out});
        edges.push_back({bottom, out});
        edges.push_back({out, node_t(4 * ((i + 1) % k))});
    }
    return Graph(4 * k, edges);
}

Graph fixture_graph(const std::string& name) {
    if (name == "triangle") return triangle();
    if (name == "two-hexagons") return two_hexagons();
    if (name == "barallene") return barallene();
    if (name == "cube") return cube();
    if (name == "square-pyramid") return square_pyramid();
    if (name == "adamantane") return adamantane();
    if (name == "twistane") return twistane();
    if (name == "three-diamonds") return three_diamonds();
    if (name == "overlapping-diamonds") return overlapping_diamonds();
    if (name == "prism-hex") return prism_hex();
    if (name == "hex-prism") return hex_prism();
    if (name == "glued-cubes") return glued_cubes();
    if (name.rfind("bracelet-", 0) == 0) {
        char* end = nullptr;
        long k = std::strtol(name.c_str() + 9, &end, 10);
        if (end && *end == '\0' && k >= 2) return bracelet_graph(unsigned(k));
    }
    fail(errc::invalid_argument, "unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
    return {"triangle",       "two-hexagons",  "barallene",
            "cube",           "square-pyramid", "adamantane",
            "twistane",       "three-diamonds", "overlapping-diamonds",
            "prism-hex",      "hex-prism",      "glued-cubes",
            "bracelet-2",     "bracelet-3",     "bracelet-4"};
}

} // namespace cyclekit
