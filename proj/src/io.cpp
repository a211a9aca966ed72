#include "cyclekit/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cyclekit/errors.hpp"
#include "cyclekit/fixtures.hpp"

namespace cyclekit {

namespace {

[[noreturn]] void bad_line(std::size_t lineno, const std::string& what) {
    fail(errc::parse_error, "line " + std::to_string(lineno) + ": " + what);
}

/* Strip a '#' comment and surrounding whitespace. */
std::string clean(const std::string& raw) {
    std::string s = raw.substr(0, raw.find('#'));
    auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string::npos) return {};
    auto to = s.find_last_not_of(" \t\r\n");
    return s.substr(from, to - from + 1);
}

bool parse_u64(const std::string& tok, std::uint64_t& out) {
    if (tok.empty()) return false;
    std::uint64_t v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9') return false;
        std::uint64_t d = static_cast<std::uint64_t>(c - '0');
        if (v > (UINT64_MAX - d) / 10) return false;
        v = v * 10 + d;
    }
    out = v;
    return true;
}

node_t parse_node(const std::string& tok, std::size_t lineno) {
    std::uint64_t v = 0;
    if (!parse_u64(tok, v) || v > 0xffffffffULL)
        bad_line(lineno, "expected a node id, got '" + tok + "'");
    return static_cast<node_t>(v);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

Graph make_graph(std::uint64_t declared_n, bool have_n, const std::vector<Edge>& edges) {
    std::uint64_t need = 0;
    for (auto [u, v] : edges) need = std::max<std::uint64_t>(need, std::max(u, v) + 1ULL);
    std::uint64_t n = have_n ? declared_n : need;
    if (n < need) fail(errc::parse_error, "declared node count smaller than max node id");
    if (n > 0xffffffffULL) fail(errc::parse_error, "node count out of range");
    return Graph(static_cast<node_t>(n), edges);
}

} // namespace

GraphFormat parse_format(const std::string& name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "json") return GraphFormat::json;
    if (name == "bonds") return GraphFormat::bonds;
    fail(errc::invalid_argument, "unknown format '" + name + "'");
}

GraphFormat sniff_format(const std::string& path) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json") return GraphFormat::json;
    if (ext == "bonds") return GraphFormat::bonds;
    return GraphFormat::edgelist;
}

Graph read_edgelist(std::istream& in) {
    std::vector<Edge> edges;
    std::uint64_t declared_n = 0;
    bool have_n = false;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = split_ws(clean(raw));
        if (toks.empty()) continue;
        if (toks[0] == "n") {
            if (toks.size() != 2 || !parse_u64(toks[1], declared_n))
                bad_line(lineno, "malformed node count");
            have_n = true;
            continue;
        }
        if (toks.size() != 2) bad_line(lineno, "expected 'u v'");
        node_t u = parse_node(toks[0], lineno);
        node_t v = parse_node(toks[1], lineno);
        if (u == v) bad_line(lineno, "self loop");
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (edges.empty() && !have_n) fail(errc::parse_error, "no graph data");
    return make_graph(declared_n, have_n, edges);
}

void write_edgelist(std::ostream& out, const Graph& g) {
    out << "n " << g.num_nodes() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

Graph read_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        fail(errc::parse_error, "expected an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_unsigned()) fail(errc::parse_error, "\"n\" must be a nonnegative integer");
    if (!j["edges"].is_array()) fail(errc::parse_error, "\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
            !item[1].is_number_unsigned())
            fail(errc::parse_error, "each edge must be a [u, v] pair");
        std::uint64_t u = item[0].get<std::uint64_t>();
        std::uint64_t v = item[1].get<std::uint64_t>();
        if (u > 0xffffffffULL || v > 0xffffffffULL) fail(errc::parse_error, "node id out of range");
        if (u == v) fail(errc::parse_error, "self loop");
        edges.push_back({static_cast<node_t>(std::min(u, v)), static_cast<node_t>(std::max(u, v))});
    }
    return make_graph(j["n"].get<std::uint64_t>(), true, edges);
}

void write_graph_json(std::ostream& out, const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.num_nodes();
    auto& arr = j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    out << j.dump(2) << "\n";
}

std::vector<BondFrame> read_bond_frames(std::istream& in) {
    struct RawFrame {
        std::uint64_t time;
        std::vector<Edge> edges;
    };
    std::vector<RawFrame> frames;
    std::uint64_t declared_n = 0;
    bool have_n = false;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = split_ws(clean(raw));
        if (toks.empty()) continue;
        if (toks[0] == "n") {
            if (!frames.empty()) bad_line(lineno, "node count must precede the first frame");
            if (toks.size() != 2 || !parse_u64(toks[1], declared_n))
                bad_line(lineno, "malformed node count");
            have_n = true;
            continue;
        }
        if (toks[0] == "frame") {
            std::uint64_t t = 0;
            if (toks.size() != 2 || !parse_u64(toks[1], t)) bad_line(lineno, "malformed frame header");
            frames.push_back({t, {}});
            continue;
        }
        if (frames.empty()) bad_line(lineno, "bond before the first frame header");
        if (toks.size() != 2) bad_line(lineno, "expected 'u v'");
        node_t u = parse_node(toks[0], lineno);
        node_t v = parse_node(toks[1], lineno);
        if (u == v) bad_line(lineno, "self loop");
        frames.back().edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (frames.empty()) fail(errc::parse_error, "no frames");

    std::uint64_t need = 0;
    for (const auto& f : frames)
        for (auto [u, v] : f.edges) need = std::max<std::uint64_t>(need, std::max(u, v) + 1ULL);
    std::uint64_t n = have_n ? declared_n : need;
    if (n < need) fail(errc::parse_error, "declared node count smaller than max node id");

    std::vector<BondFrame> out;
    out.reserve(frames.size());
    for (auto& f : frames) out.push_back({f.time, Graph(static_cast<node_t>(n), std::move(f.edges))});
    return out;
}

std::vector<BondFrame> load_graphs(const std::string& path, GraphFormat fmt) {
    if (path.rfind("fixture:", 0) == 0)
        return {{0, fixture_graph(path.substr(8))}};
    std::ifstream in(path);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    switch (fmt) {
    case GraphFormat::edgelist: return {{0, read_edgelist(in)}};
    case GraphFormat::json: return {{0, read_graph_json(in)}};
    case GraphFormat::bonds: return read_bond_frames(in);
    }
    fail(errc::invalid_argument, "unknown format");
}

} // namespace cyclekit
