// graph.hpp - undirected positive-weight graph, generators and file readers.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace alp {

using VertexId = std::uint32_t;
using Weight = double;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr Weight kUnreached = std::numeric_limits<Weight>::infinity();

struct Arc {
    VertexId to;
    Weight weight;
};

struct EdgeSpec {
    VertexId u;
    VertexId v;
    Weight weight = 1.0;
};

// Malformed graph input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Immutable undirected graph in compressed adjacency form. Each undirected
// edge appears as two arcs; neighbor lists are sorted by neighbor id.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on out-of-range endpoints, weights <= 0
    // (or non-finite), self-loops and duplicate unordered pairs.
    static Graph build(std::size_t vertex_count, std::span<const EdgeSpec> edges);

    std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return arcs_.size() / 2; }

    std::span<const Arc> neighbors(VertexId v) const {
        return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::optional<Weight> edge_weight(VertexId u, VertexId v) const;

    // Each undirected edge once, with u < v, ordered by (u, v).
    std::vector<EdgeSpec> edges() const;

    bool contains(VertexId v) const noexcept { return v < vertex_count(); }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
};

bool is_connected(const Graph& g);

// ---- generators -----------------------------------------------------------

// 4-neighbor lattice, unit weights, id = row * cols + col.
Graph generate_grid(std::size_t rows, std::size_t cols);

// Uniform-attachment spanning tree plus `extra_edges` distinct non-tree edges,
// unit weights. Bit-deterministic for a fixed seed.
Graph generate_random_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed);

// ---- file formats ---------------------------------------------------------

// DIMACS shortest-path `.gr`: `c` comments, one `p sp <n> <m>` line and m
// `a <u> <v> <w>` arc lines with 1-based ids. Reciprocal arcs are merged and
// lone arcs are symmetrized. The result must be connected.
Graph load_dimacs(std::istream& in);

// Edge list: first data line `<n>`, then `u v [w]` per line with 0-based ids.
// Blank lines and lines starting with '#' are ignored. Must be connected.
Graph load_edge_list(std::istream& in);

// Picks the reader from the content: DIMACS if the first data line starts
// with `p` or `c`, edge list otherwise.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

// Writes each undirected edge as a pair of reciprocal arcs.
void write_dimacs(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace alp
