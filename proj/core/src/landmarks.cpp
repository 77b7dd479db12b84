#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "alp/embedding.hpp"
#include "alp/random.hpp"

namespace alp {
namespace {

void check_k(const Graph& g, std::size_t k) {
    if (k < 1 || k > g.vertex_count()) {
        throw std::invalid_argument("landmark count " + std::to_string(k) + " must be in [1, " +
                                    std::to_string(g.vertex_count()) + "]");
    }
}

// Smallest-id vertex maximizing score, skipping excluded ones.
VertexId argmax_vertex(std::span<const Weight> score, const std::vector<char>& excluded) {
    VertexId best = kNoVertex;
    for (VertexId v = 0; v < score.size(); ++v) {
        if (excluded[v]) continue;
        if (best == kNoVertex || score[v] > score[best]) best = v;
    }
    return best;
}

}  // namespace

LandmarkSet::LandmarkSet(std::vector<VertexId> ids, std::size_t vertex_count) : ids_(std::move(ids)) {
    if (ids_.empty()) {
        throw std::invalid_argument("landmark set is empty");
    }
    std::vector<VertexId> sorted = ids_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= vertex_count) {
        throw std::invalid_argument("landmark " + std::to_string(sorted.back()) + " out of range");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("landmark set has duplicates");
    }
}

LandmarkStrategy parse_strategy(const std::string& name) {
    if (name == "random") return LandmarkStrategy::random;
    if (name == "farthest") return LandmarkStrategy::farthest;
    if (name == "avoid") return LandmarkStrategy::avoid;
    throw std::invalid_argument("unknown landmark strategy '" + name + "'");
}

const char* to_string(LandmarkStrategy s) {
    switch (s) {
        case LandmarkStrategy::random: return "random";
        case LandmarkStrategy::farthest: return "farthest";
        case LandmarkStrategy::avoid: return "avoid";
    }
    return "?";
}

LandmarkSet select_random(const Graph& g, std::size_t k, std::uint64_t seed) {
    check_k(g, k);
    Rng rng(seed);
    std::vector<VertexId> pool(g.vertex_count());
    std::iota(pool.begin(), pool.end(), VertexId{0});
    for (std::size_t i = 0; i < k; ++i) {
        auto j = i + uniform_below(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return LandmarkSet(std::move(pool), g.vertex_count());
}

LandmarkSet select_farthest_from(const Graph& g, std::size_t k, VertexId start) {
    check_k(g, k);
    if (!g.contains(start)) throw std::out_of_range("farthest selection: start vertex out of range");
    const std::size_t n = g.vertex_count();
    std::vector<char> chosen(n, 0);
    std::vector<VertexId> ids;
    ids.reserve(k);

    const auto from_start = shortest_path_tree(g, start);
    VertexId next = argmax_vertex(from_start.dist, chosen);
    std::vector<Weight> min_dist(n, kUnreached);
    while (true) {
        ids.push_back(next);
        chosen[next] = 1;
        if (ids.size() == k) break;
        const auto run = shortest_path_tree(g, next);
        for (VertexId v = 0; v < n; ++v) min_dist[v] = std::min(min_dist[v], run.dist[v]);
        next = argmax_vertex(min_dist, chosen);
    }
    return LandmarkSet(std::move(ids), n);
}

LandmarkSet select_farthest(const Graph& g, std::size_t k, std::uint64_t seed) {
    check_k(g, k);
    Rng rng(seed);
    const auto start = static_cast<VertexId>(uniform_below(rng, g.vertex_count()));
    return select_farthest_from(g, k, start);
}

VertexId avoid_step(const Graph& g, VertexId root, std::span<const VertexId> chosen,
                    std::span<const std::vector<Weight>> chosen_rows) {
    const std::size_t n = g.vertex_count();
    if (!g.contains(root)) throw std::out_of_range("avoid selection: root out of range");
    if (chosen.size() != chosen_rows.size()) {
        throw std::invalid_argument("avoid selection: one distance row per chosen landmark required");
    }
    std::vector<char> is_landmark(n, 0);
    for (VertexId l : chosen) is_landmark[l] = 1;

    const auto tree = shortest_path_tree(g, root);
    std::vector<Weight> size(n, 0.0);
    std::vector<char> holds_landmark(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        if (!tree.reached(v)) continue;
        Weight bound = 0.0;
        for (const auto& row : chosen_rows) bound = std::max(bound, std::abs(row[root] - row[v]));
        size[v] = std::max(0.0, tree.dist[v] - bound);
        holds_landmark[v] = is_landmark[v];
    }

    // Children settle strictly after their parents, so descending distance
    // visits every child before its parent.
    std::vector<VertexId> order;
    order.reserve(n);
    for (VertexId v = 0; v < n; ++v) {
        if (tree.reached(v)) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](VertexId a, VertexId b) { return tree.dist[a] > tree.dist[b]; });
    std::vector<std::vector<VertexId>> children(n);
    for (VertexId v : order) {
        const VertexId p = tree.parent[v];
        if (p == kNoVertex) continue;
        size[p] += size[v];
        holds_landmark[p] = holds_landmark[p] || holds_landmark[v];
        children[p].push_back(v);
    }
    for (VertexId v = 0; v < n; ++v) {
        if (holds_landmark[v]) size[v] = 0.0;
    }

    const std::vector<char> none(n, 0);
    VertexId w = argmax_vertex(size, none);
    if (w == kNoVertex || size[w] <= 0.0) {
        std::vector<Weight> coverage(n, kUnreached);
        for (const auto& row : chosen_rows) {
            for (VertexId v = 0; v < n; ++v) coverage[v] = std::min(coverage[v], row[v]);
        }
        return argmax_vertex(coverage, is_landmark);
    }
    while (!children[w].empty()) {
        VertexId best = kNoVertex;
        for (VertexId c : children[w]) {
            if (best == kNoVertex || size[c] > size[best] || (size[c] == size[best] && c < best)) best = c;
        }
        w = best;
    }
    return w;
}

LandmarkSet select_avoid(const Graph& g, std::size_t k, std::uint64_t seed) {
    check_k(g, k);
    Rng rng(seed);
    std::vector<VertexId> ids;
    std::vector<std::vector<Weight>> rows;
    while (ids.size() < k) {
        const auto root = static_cast<VertexId>(uniform_below(rng, g.vertex_count()));
        const VertexId next = avoid_step(g, root, ids, rows);
        ids.push_back(next);
        rows.push_back(shortest_path_tree(g, next).dist);
    }
    return LandmarkSet(std::move(ids), g.vertex_count());
}

LandmarkSet select_landmarks(const Graph& g, LandmarkStrategy strategy, std::size_t k, std::uint64_t seed) {
    switch (strategy) {
        case LandmarkStrategy::random: return select_random(g, k, seed);
        case LandmarkStrategy::farthest: return select_farthest(g, k, seed);
        case LandmarkStrategy::avoid: return select_avoid(g, k, seed);
    }
    throw std::invalid_argument("unknown landmark strategy");
}

}  // namespace alp
