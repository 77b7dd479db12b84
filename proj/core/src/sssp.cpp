#include "alp/sssp.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace alp {
namespace {

using HeapEntry = std::pair<Weight, VertexId>;
using MinHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

void check_sources(const Graph& g, std::span<const VertexId> sources, const char* what) {
    if (sources.empty()) {
        throw std::invalid_argument(std::string(what) + ": source set is empty");
    }
    std::vector<VertexId> sorted(sources.begin(), sources.end());
    std::sort(sorted.begin(), sorted.end());
    if (!g.contains(sorted.back())) {
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(sorted.back()) + " out of range");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument(std::string(what) + ": duplicate source vertices");
    }
}

// Lazy-deletion Dijkstra. `rank[i]` orders sources for owner tie-breaks
// (smaller wins). When `stop_after` is nonempty the run ends once all of
// those vertices are settled.
DistanceMap run_dijkstra(const Graph& g, std::span<const VertexId> sources, std::span<const std::size_t> rank,
                         std::span<const VertexId> stop_after, KernelStats* stats) {
    const std::size_t n = g.vertex_count();
    DistanceMap out;
    out.sources.assign(sources.begin(), sources.end());
    out.dist.assign(n, kUnreached);
    out.owner.assign(n, kNoVertex);
    out.parent.assign(n, kNoVertex);

    // source vertex -> rank, consulted only for tie-breaks
    std::vector<std::size_t> rank_of(n, 0);
    std::vector<char> settled(n, 0);
    MinHeap heap;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const VertexId s = sources[i];
        out.dist[s] = 0.0;
        out.owner[s] = s;
        rank_of[s] = rank[i];
        heap.emplace(0.0, s);
    }

    std::vector<char> wanted;
    std::size_t remaining = stop_after.size();
    if (!stop_after.empty()) {
        wanted.assign(n, 0);
        for (VertexId v : stop_after) wanted[v] = 1;
    }

    std::size_t settled_count = 0;
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (settled[u] || d > out.dist[u]) continue;
        settled[u] = 1;
        ++settled_count;
        if (!wanted.empty() && wanted[u] && --remaining == 0) break;
        const std::size_t owner_rank = rank_of[out.owner[u]];
        for (const auto& arc : g.neighbors(u)) {
            const VertexId v = arc.to;
            if (settled[v]) continue;
            const Weight nd = d + arc.weight;
            if (nd < out.dist[v]) {
                out.dist[v] = nd;
                out.owner[v] = out.owner[u];
                out.parent[v] = u;
                heap.emplace(nd, v);
            } else if (nd == out.dist[v] && owner_rank < rank_of[out.owner[v]]) {
                out.owner[v] = out.owner[u];
                out.parent[v] = u;
            }
        }
    }

    if (stats) {
        if (stop_after.empty()) {
            ++stats->full_passes;
        } else {
            ++stats->truncated_runs;
        }
        stats->vertices_settled += settled_count;
    }
    return out;
}

}  // namespace

DistanceMap shortest_path_tree(const Graph& g, VertexId source, KernelStats* stats) {
    if (!g.contains(source)) {
        throw std::out_of_range("shortest_path_tree: source " + std::to_string(source) + " out of range");
    }
    const VertexId src[] = {source};
    const std::size_t rank[] = {0};
    return run_dijkstra(g, src, rank, {}, stats);
}

DistanceMap multi_source_spt(const Graph& g, std::span<const VertexId> sources, KernelStats* stats) {
    check_sources(g, sources, "multi_source_spt");
    std::vector<std::size_t> rank(sources.begin(), sources.end());
    return run_dijkstra(g, sources, rank, {}, stats);
}

DistanceMap multi_source_spt_ordered(const Graph& g, std::span<const VertexId> sources, KernelStats* stats) {
    check_sources(g, sources, "multi_source_spt");
    std::vector<std::size_t> rank(sources.size());
    for (std::size_t i = 0; i < rank.size(); ++i) rank[i] = i;
    return run_dijkstra(g, sources, rank, {}, stats);
}

SquareMatrix landmark_matrix(const Graph& g, std::span<const VertexId> landmarks, KernelStats* stats) {
    check_sources(g, landmarks, "landmark_matrix");
    const std::size_t k = landmarks.size();
    SquareMatrix m(k);
    const std::size_t rank[] = {0};
    for (std::size_t i = 0; i < k; ++i) {
        const VertexId src[] = {landmarks[i]};
        auto run = run_dijkstra(g, src, rank, landmarks, stats);
        for (std::size_t j = 0; j < k; ++j) m(i, j) = run.dist[landmarks[j]];
    }
    // Both directions come from independent runs; they agree exactly for
    // integral weights and to rounding otherwise. Keep the matrix symmetric.
    for (std::size_t i = 0; i < k; ++i) {
        m(i, i) = 0.0;
        for (std::size_t j = i + 1; j < k; ++j) m(j, i) = m(i, j);
    }
    return m;
}

SquareMatrix all_pairs_oracle(const Graph& g, std::size_t cap) {
    const std::size_t n = g.vertex_count();
    if (n > cap) {
        throw std::length_error("all_pairs_oracle: " + std::to_string(n) + " vertices exceeds cap " +
                                std::to_string(cap));
    }
    SquareMatrix table(n, kUnreached);
    for (VertexId s = 0; s < n; ++s) {
        auto run = shortest_path_tree(g, s);
        for (VertexId v = 0; v < n; ++v) table(s, v) = run.dist[v];
    }
    return table;
}

}  // namespace alp
