// embedding.hpp - landmark selection and the two landmark embeddings.
//
// AltEmbedding keeps every landmark-to-vertex distance. DistributedEmbedding
// assigns each vertex to its nearest landmark (Voronoi partition) and keeps
// only that one distance, plus the landmark-to-landmark matrix.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "alp/graph.hpp"
#include "alp/sssp.hpp"

namespace alp {

using LandmarkIndex = std::uint32_t;

// Ordered, nonempty set of distinct in-range vertices.
class LandmarkSet {
public:
    LandmarkSet() = default;
    // Throws std::invalid_argument if empty, duplicated or out of range.
    LandmarkSet(std::vector<VertexId> ids, std::size_t vertex_count);

    std::span<const VertexId> ids() const noexcept { return ids_; }
    std::size_t size() const noexcept { return ids_.size(); }
    VertexId operator[](LandmarkIndex i) const { return ids_[i]; }

    friend bool operator==(const LandmarkSet&, const LandmarkSet&) = default;

private:
    std::vector<VertexId> ids_;
};

enum class LandmarkStrategy { random, farthest, avoid };

LandmarkStrategy parse_strategy(const std::string& name);
const char* to_string(LandmarkStrategy s);

LandmarkSet select_random(const Graph& g, std::size_t k, std::uint64_t seed);

// Greedy farthest-point traversal. The first landmark is the vertex farthest
// from `start`; each next one maximizes its minimum distance to those already
// chosen. Ties go to the smallest id.
LandmarkSet select_farthest_from(const Graph& g, std::size_t k, VertexId start);
// Start vertex drawn from the seed.
LandmarkSet select_farthest(const Graph& g, std::size_t k, std::uint64_t seed);

// One round of avoid selection rooted at `root`. Each vertex is weighted by
// d(root, v) minus the best landmark lower bound on it (clamped at zero);
// subtrees holding a landmark count as zero. From the heaviest subtree root
// the walk follows the heaviest child down to a leaf. When every weight is
// zero, falls back to the non-landmark vertex farthest from the chosen set.
VertexId avoid_step(const Graph& g, VertexId root, std::span<const VertexId> chosen,
                    std::span<const std::vector<Weight>> chosen_rows);
// Roots drawn from the seed, one per round.
LandmarkSet select_avoid(const Graph& g, std::size_t k, std::uint64_t seed);

LandmarkSet select_landmarks(const Graph& g, LandmarkStrategy strategy, std::size_t k, std::uint64_t seed);

struct SpaceReport {
    std::size_t entries = 0;          // distance values actually stored
    std::size_t formula_entries = 0;  // closed-form prediction
};

struct AltEmbedding {
    LandmarkSet landmarks;
    std::size_t vertex_count = 0;
    std::vector<Weight> table;  // row-major |L| x |V|, table[i*|V| + v] = d(l_i, v)
    SquareMatrix lmatrix;
    KernelStats build_stats;

    Weight dist(LandmarkIndex i, VertexId v) const { return table[static_cast<std::size_t>(i) * vertex_count + v]; }
    std::span<const Weight> row(LandmarkIndex i) const {
        return {table.data() + static_cast<std::size_t>(i) * vertex_count, vertex_count};
    }
};

struct DistributedEmbedding {
    LandmarkSet landmarks;
    std::vector<LandmarkIndex> owner;  // per vertex, index into landmarks
    std::vector<Weight> dist_to_owner;
    SquareMatrix lmatrix;
    KernelStats build_stats;

    std::size_t vertex_count() const noexcept { return owner.size(); }
};

// Both builders require every vertex to be reachable from the landmarks and
// throw std::invalid_argument otherwise.
AltEmbedding build_alt_embedding(const Graph& g, const LandmarkSet& landmarks);
DistributedEmbedding build_distributed_embedding(const Graph& g, const LandmarkSet& landmarks);

SpaceReport space_accounting(const AltEmbedding& e);
SpaceReport space_accounting(const DistributedEmbedding& e);

// ---- binary serialization (layout in docs/embedding_format.md) -------------

enum class EmbeddingKind : std::uint32_t { alt = 1, distributed = 2 };

void write_embedding(const AltEmbedding& e, std::ostream& out);
void write_embedding(const DistributedEmbedding& e, std::ostream& out);

// Throws ParseError on a bad magic tag, unknown version or kind, truncated
// payload, or a payload that violates the embedding invariants.
std::variant<AltEmbedding, DistributedEmbedding> read_embedding(std::istream& in);

}  // namespace alp
