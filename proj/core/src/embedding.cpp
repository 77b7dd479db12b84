#include "alp/embedding.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace alp {

AltEmbedding build_alt_embedding(const Graph& g, const LandmarkSet& landmarks) {
    const std::size_t n = g.vertex_count();
    const std::size_t k = landmarks.size();
    AltEmbedding e;
    e.landmarks = landmarks;
    e.vertex_count = n;
    e.table.resize(k * n);
    for (LandmarkIndex i = 0; i < k; ++i) {
        auto run = shortest_path_tree(g, landmarks[i], &e.build_stats);
        for (VertexId v = 0; v < n; ++v) {
            if (!run.reached(v)) {
                throw std::invalid_argument("alt embedding: vertex " + std::to_string(v) +
                                            " unreachable from landmark " + std::to_string(landmarks[i]));
            }
            e.table[i * n + v] = run.dist[v];
        }
    }
    // Upper triangle from row i, mirrored, exactly as landmark_matrix does.
    e.lmatrix = SquareMatrix(k);
    for (LandmarkIndex i = 0; i < k; ++i) {
        for (LandmarkIndex j = i + 1; j < k; ++j) {
            e.lmatrix(i, j) = e.dist(i, landmarks[j]);
            e.lmatrix(j, i) = e.lmatrix(i, j);
        }
    }
    return e;
}

DistributedEmbedding build_distributed_embedding(const Graph& g, const LandmarkSet& landmarks) {
    const std::size_t n = g.vertex_count();
    DistributedEmbedding e;
    e.landmarks = landmarks;

    // Landmark order is the tie-break order for the partition.
    auto regions = multi_source_spt_ordered(g, landmarks.ids(), &e.build_stats);
    std::vector<LandmarkIndex> index_of(n, 0);
    for (LandmarkIndex i = 0; i < landmarks.size(); ++i) index_of[landmarks[i]] = i;

    e.owner.resize(n);
    e.dist_to_owner = std::move(regions.dist);
    for (VertexId v = 0; v < n; ++v) {
        if (regions.owner[v] == kNoVertex) {
            throw std::invalid_argument("distributed embedding: vertex " + std::to_string(v) +
                                        " unreachable from every landmark");
        }
        e.owner[v] = index_of[regions.owner[v]];
    }
    e.lmatrix = landmark_matrix(g, landmarks.ids(), &e.build_stats);
    return e;
}

SpaceReport space_accounting(const AltEmbedding& e) {
    const std::size_t k = e.landmarks.size();
    return {e.table.size() + e.lmatrix.entry_count(), k * e.vertex_count + k * k};
}

SpaceReport space_accounting(const DistributedEmbedding& e) {
    const std::size_t k = e.landmarks.size();
    return {e.dist_to_owner.size() + e.lmatrix.entry_count(), e.vertex_count() + k * k};
}

// ---- serialization ----------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'A', 'L', 'P', 'E', 'M', 'B', 'E', 'D'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t x) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64(std::ostream& out, std::uint64_t x) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((x >> (8 * i)) & 0xff);
    out.write(b, 8);
}

void put_f64(std::ostream& out, double x) { put_u64(out, std::bit_cast<std::uint64_t>(x)); }

std::uint64_t get_bytes(std::istream& in, int count) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), count)) throw ParseError(0, "embedding file truncated");
    std::uint64_t x = 0;
    for (int i = 0; i < count; ++i) x |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return x;
}

std::uint32_t get_u32(std::istream& in) { return static_cast<std::uint32_t>(get_bytes(in, 4)); }
std::uint64_t get_u64(std::istream& in) { return get_bytes(in, 8); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

void write_header(std::ostream& out, EmbeddingKind kind, std::size_t n, const LandmarkSet& landmarks) {
    out.write(kMagic, sizeof kMagic);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(kind));
    put_u64(out, n);
    put_u64(out, landmarks.size());
    for (VertexId id : landmarks.ids()) put_u32(out, id);
}

void write_matrix(std::ostream& out, const SquareMatrix& m) {
    for (Weight w : m.data()) put_f64(out, w);
}

SquareMatrix read_matrix(std::istream& in, std::size_t k) {
    std::vector<Weight> values;
    for (std::size_t i = 0; i < k * k; ++i) values.push_back(get_f64(in));
    SquareMatrix m(k);
    std::copy(values.begin(), values.end(), &m(0, 0));
    for (std::size_t i = 0; i < k; ++i) {
        if (m(i, i) != 0.0) throw ParseError(0, "landmark matrix diagonal is not zero");
        for (std::size_t j = 0; j < i; ++j) {
            if (m(i, j) != m(j, i)) throw ParseError(0, "landmark matrix is not symmetric");
        }
    }
    return m;
}

void check_ok(std::ostream& out) {
    if (!out) throw std::runtime_error("failed writing embedding");
}

}  // namespace

void write_embedding(const AltEmbedding& e, std::ostream& out) {
    write_header(out, EmbeddingKind::alt, e.vertex_count, e.landmarks);
    for (Weight w : e.table) put_f64(out, w);
    write_matrix(out, e.lmatrix);
    check_ok(out);
}

void write_embedding(const DistributedEmbedding& e, std::ostream& out) {
    write_header(out, EmbeddingKind::distributed, e.vertex_count(), e.landmarks);
    for (LandmarkIndex o : e.owner) put_u32(out, o);
    for (Weight w : e.dist_to_owner) put_f64(out, w);
    write_matrix(out, e.lmatrix);
    check_ok(out);
}

namespace {

// Grows element by element so a corrupt count fails on the first missing value
// instead of allocating up front.
std::vector<Weight> get_f64s(std::istream& in, std::uint64_t count) {
    std::vector<Weight> out;
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(get_f64(in));
    return out;
}

void expect_end(std::istream& in) {
    if (in.peek() != std::char_traits<char>::eof()) throw ParseError(0, "trailing bytes after embedding payload");
}

}  // namespace

std::variant<AltEmbedding, DistributedEmbedding> read_embedding(std::istream& in) {
    char magic[sizeof kMagic];
    if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + sizeof magic, kMagic)) {
        throw ParseError(0, "not an embedding file (bad magic tag)");
    }
    if (const auto version = get_u32(in); version != kVersion) {
        throw ParseError(0, "unsupported embedding version " + std::to_string(version));
    }
    const auto kind = get_u32(in);
    const auto n = get_u64(in);
    const auto k = get_u64(in);
    if (k == 0 || k > n || n >= kNoVertex) throw ParseError(0, "bad embedding dimensions");
    std::vector<VertexId> ids;
    for (std::uint64_t i = 0; i < k; ++i) ids.push_back(get_u32(in));
    LandmarkSet landmarks;
    try {
        landmarks = LandmarkSet(std::move(ids), n);
    } catch (const std::invalid_argument& err) {
        throw ParseError(0, err.what());
    }

    if (kind == static_cast<std::uint32_t>(EmbeddingKind::alt)) {
        AltEmbedding e;
        e.landmarks = std::move(landmarks);
        e.vertex_count = n;
        e.table = get_f64s(in, k * n);
        e.lmatrix = read_matrix(in, k);
        expect_end(in);
        for (LandmarkIndex i = 0; i < k; ++i) {
            if (e.dist(i, e.landmarks[i]) != 0.0) throw ParseError(0, "landmark row has nonzero self distance");
        }
        return e;
    }
    if (kind == static_cast<std::uint32_t>(EmbeddingKind::distributed)) {
        DistributedEmbedding e;
        e.landmarks = std::move(landmarks);
        for (std::uint64_t v = 0; v < n; ++v) {
            e.owner.push_back(get_u32(in));
            if (e.owner.back() >= k) throw ParseError(0, "owner index out of range");
        }
        e.dist_to_owner = get_f64s(in, n);
        e.lmatrix = read_matrix(in, k);
        expect_end(in);
        for (LandmarkIndex i = 0; i < k; ++i) {
            const VertexId l = e.landmarks[i];
            if (e.owner[l] != i || e.dist_to_owner[l] != 0.0) {
                throw ParseError(0, "landmark " + std::to_string(l) + " does not own itself");
            }
        }
        return e;
    }
    throw ParseError(0, "unknown embedding kind " + std::to_string(kind));
}

}  // namespace alp
