#include "alp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "alp/random.hpp"

namespace alp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

Graph Graph::build(std::size_t vertex_count, std::span<const EdgeSpec> edges) {
    if (vertex_count >= kNoVertex) {
        throw std::invalid_argument("vertex count too large");
    }
    std::vector<std::size_t> degree(vertex_count, 0);
    for (const auto& e : edges) {
        if (e.u >= vertex_count || e.v >= vertex_count) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") has an endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") has nonpositive weight");
        }
        ++degree[e.u];
        ++degree[e.v];
    }

    Graph g;
    g.offsets_.assign(vertex_count + 1, 0);
    for (std::size_t v = 0; v < vertex_count; ++v) {
        g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    }
    g.arcs_.resize(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& e : edges) {
        g.arcs_[fill[e.u]++] = Arc{e.v, e.weight};
        g.arcs_[fill[e.v]++] = Arc{e.u, e.weight};
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto first = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.arcs_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last, [](const Arc& a, const Arc& b) { return a.to < b.to; });
        auto dup = std::adjacent_find(first, last, [](const Arc& a, const Arc& b) { return a.to == b.to; });
        if (dup != last) {
            throw std::invalid_argument("duplicate edge between " + std::to_string(v) + " and " +
                                        std::to_string(dup->to));
        }
    }
    return g;
}

std::optional<Weight> Graph::edge_weight(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) {
        return std::nullopt;
    }
    auto adj = neighbors(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v, [](const Arc& a, VertexId x) { return a.to < x; });
    if (it == adj.end() || it->to != v) {
        return std::nullopt;
    }
    return it->weight;
}

std::vector<EdgeSpec> Graph::edges() const {
    std::vector<EdgeSpec> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < vertex_count(); ++u) {
        for (const auto& a : neighbors(u)) {
            if (u < a.to) {
                out.push_back({u, a.to, a.weight});
            }
        }
    }
    return out;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (const auto& a : g.neighbors(u)) {
            if (!seen[a.to]) {
                seen[a.to] = 1;
                ++reached;
                stack.push_back(a.to);
            }
        }
    }
    return reached == n;
}

Graph generate_grid(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    std::vector<EdgeSpec> edges;
    edges.reserve(2 * rows * cols);
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
        }
    }
    return Graph::build(rows * cols, edges);
}

Graph generate_random_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("random graph needs at least one vertex");
    }
    const std::size_t capacity = n * (n - 1) / 2 - (n - 1);
    if (extra_edges > capacity) {
        throw std::invalid_argument("extra_edges " + std::to_string(extra_edges) + " exceeds capacity " +
                                    std::to_string(capacity));
    }

    Rng rng(seed);
    std::vector<EdgeSpec> edges;
    edges.reserve(n - 1 + extra_edges);
    std::unordered_set<std::uint64_t> present;
    auto key = [n](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return static_cast<std::uint64_t>(a) * n + b;
    };
    for (VertexId v = 1; v < n; ++v) {
        auto parent = static_cast<VertexId>(uniform_below(rng, v));
        edges.push_back({parent, v, 1.0});
        present.insert(key(parent, v));
    }

    if (extra_edges * 2 <= capacity) {
        // Sparse: rejection sampling terminates quickly.
        while (edges.size() < n - 1 + extra_edges) {
            auto a = static_cast<VertexId>(uniform_below(rng, n));
            auto b = static_cast<VertexId>(uniform_below(rng, n));
            if (a == b || !present.insert(key(a, b)).second) {
                continue;
            }
            edges.push_back({std::min(a, b), std::max(a, b), 1.0});
        }
    } else {
        // Dense: enumerate the complement and take a partial shuffle.
        std::vector<EdgeSpec> candidates;
        candidates.reserve(capacity);
        for (VertexId a = 0; a < n; ++a) {
            for (VertexId b = a + 1; b < n; ++b) {
                if (!present.count(key(a, b))) candidates.push_back({a, b, 1.0});
            }
        }
        for (std::size_t i = 0; i < extra_edges; ++i) {
            auto j = i + uniform_below(rng, candidates.size() - i);
            std::swap(candidates[i], candidates[j]);
            edges.push_back(candidates[i]);
        }
    }
    return Graph::build(n, edges);
}

}  // namespace alp
