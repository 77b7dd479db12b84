#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "alp/graph.hpp"

namespace alp {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_uint(std::string_view field, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

double parse_weight(std::string_view field, std::size_t line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line, "invalid weight '" + std::string(field) + "'");
    }
    if (!(value > 0.0)) {
        throw ParseError(line, "nonpositive weight " + std::string(field));
    }
    return value;
}

Graph finish(std::size_t n, const std::vector<EdgeSpec>& edges) {
    Graph g;
    try {
        g = Graph::build(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
    if (!is_connected(g)) {
        throw ParseError(0, "graph is not connected");
    }
    return g;
}

std::string format_weight(Weight w) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, w);
    return std::string(buf, ptr);
}

}  // namespace

Graph load_dimacs(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_problem = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t arcs_seen = 0;
    // unordered pair -> (weight, line of first arc)
    std::map<std::pair<VertexId, VertexId>, std::pair<Weight, std::size_t>> pairs;
    std::map<std::pair<VertexId, VertexId>, std::size_t> directed;

    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == 'c') continue;
        auto f = split_fields(line);
        if (f[0] == "p") {
            if (have_problem) throw ParseError(line_no, "second problem line");
            if (f.size() != 4 || f[1] != "sp") throw ParseError(line_no, "expected 'p sp <n> <m>'");
            n = parse_uint(f[2], line_no, "vertex count");
            m = parse_uint(f[3], line_no, "arc count");
            have_problem = true;
        } else if (f[0] == "a") {
            if (!have_problem) throw ParseError(line_no, "arc before problem line");
            if (f.size() != 4) throw ParseError(line_no, "expected 'a <u> <v> <w>'");
            auto u = parse_uint(f[1], line_no, "vertex id");
            auto v = parse_uint(f[2], line_no, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n) throw ParseError(line_no, "vertex id out of range");
            if (u == v) throw ParseError(line_no, "self-loop");
            const Weight w = parse_weight(f[3], line_no);
            ++arcs_seen;
            const auto a = static_cast<VertexId>(u - 1);
            const auto b = static_cast<VertexId>(v - 1);
            if (!directed.emplace(std::pair{a, b}, line_no).second) {
                throw ParseError(line_no, "duplicate arc " + std::string(f[1]) + " -> " + std::string(f[2]));
            }
            auto key = std::pair{std::min(a, b), std::max(a, b)};
            auto [it, inserted] = pairs.emplace(key, std::pair{w, line_no});
            if (!inserted && it->second.first != w) {
                throw ParseError(line_no, "reciprocal arc weight differs from line " +
                                              std::to_string(it->second.second));
            }
        } else {
            throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
        }
    }
    if (!have_problem) throw ParseError(0, "missing problem line");
    if (arcs_seen != m) {
        throw ParseError(0, "problem line declares " + std::to_string(m) + " arcs, body has " +
                                std::to_string(arcs_seen));
    }
    std::vector<EdgeSpec> edges;
    edges.reserve(pairs.size());
    for (const auto& [key, value] : pairs) edges.push_back({key.first, key.second, value.first});
    return finish(n, edges);
}

Graph load_edge_list(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::uint64_t> n;
    std::vector<EdgeSpec> edges;
    while (std::getline(in, raw)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        auto f = split_fields(line);
        if (!n) {
            if (f.size() != 1) throw ParseError(line_no, "expected vertex count header");
            n = parse_uint(f[0], line_no, "vertex count");
            continue;
        }
        if (f.size() != 2 && f.size() != 3) throw ParseError(line_no, "expected 'u v [w]'");
        auto u = parse_uint(f[0], line_no, "vertex id");
        auto v = parse_uint(f[1], line_no, "vertex id");
        if (u >= *n || v >= *n) throw ParseError(line_no, "vertex id out of range");
        const Weight w = f.size() == 3 ? parse_weight(f[2], line_no) : 1.0;
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    }
    if (!n) throw ParseError(0, "missing vertex count header");
    return finish(*n, edges);
}

Graph load_graph(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream probe(text);
    std::string raw;
    bool dimacs = false;
    while (std::getline(probe, raw)) {
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        dimacs = line.front() == 'p' || line.front() == 'c';
        break;
    }
    std::istringstream body(text);
    return dimacs ? load_dimacs(body) : load_edge_list(body);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    return load_graph(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    out << "p sp " << g.vertex_count() << ' ' << 2 * g.edge_count() << '\n';
    for (const auto& e : g.edges()) {
        const auto w = format_weight(e.weight);
        out << "a " << e.u + 1 << ' ' << e.v + 1 << ' ' << w << '\n';
        out << "a " << e.v + 1 << ' ' << e.u + 1 << ' ' << w << '\n';
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << '\n';
    for (const auto& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << format_weight(e.weight) << '\n';
    }
}

}  // namespace alp
