#include "corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "alp/random.hpp"

namespace alp::testing {

CorpusCase make_corpus_case(std::uint64_t seed) {
    Rng rng(derive_seed(seed, 100));
    const std::size_t n = 10 + uniform_below(rng, 191);
    const std::size_t capacity = n * (n - 1) / 2 - (n - 1);
    const std::size_t extra = std::min<std::size_t>(capacity, uniform_below(rng, n + 1));
    const std::size_t k = 1 + uniform_below(rng, std::min<std::size_t>(8, n));
    CorpusCase c;
    c.seed = seed;
    c.graph = generate_random_connected(n, extra, derive_seed(seed, 101));
    c.strategy = static_cast<LandmarkStrategy>(seed % 3);
    c.landmarks = select_landmarks(c.graph, c.strategy, k, derive_seed(seed, 102));
    return c;
}

Graph reweighted(const Graph& g, std::uint64_t seed, int max_weight) {
    Rng rng(seed);
    auto edges = g.edges();
    for (auto& e : edges) e.weight = 1.0 + static_cast<double>(uniform_below(rng, static_cast<std::uint64_t>(max_weight)));
    return Graph::build(g.vertex_count(), edges);
}

std::vector<std::vector<Weight>> floyd_warshall(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Weight>> d(n, std::vector<Weight>(n, kUnreached));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const auto& e : g.edges()) {
        d[e.u][e.v] = std::min(d[e.u][e.v], e.weight);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.weight);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] == kUnreached) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Weight via = d[i][k] + d[k][j];
                if (via < d[i][j]) d[i][j] = via;
            }
        }
    }
    return d;
}

std::vector<std::pair<VertexId, VertexId>> evaluation_pairs(std::size_t n, std::uint64_t seed, std::size_t cap) {
    std::vector<std::pair<VertexId, VertexId>> out;
    if (n <= 60) {
        for (VertexId s = 0; s < n; ++s) {
            for (VertexId t = 0; t < n; ++t) out.emplace_back(s, t);
        }
        return out;
    }
    Rng rng(derive_seed(seed, 200));
    out.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) {
        out.emplace_back(static_cast<VertexId>(uniform_below(rng, n)), static_cast<VertexId>(uniform_below(rng, n)));
    }
    return out;
}

Graph path_graph(std::size_t n) {
    std::vector<EdgeSpec> edges;
    for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return Graph::build(n, edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<EdgeSpec> edges;
    for (VertexId i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
    return Graph::build(leaves + 1, edges);
}

const char* to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::alt_exceeds_alp: return "alt_exceeds_alp";
        case WitnessKind::alp_exceeds_alt: return "alp_exceeds_alt";
        case WitnessKind::inconsistency: return "inconsistency";
    }
    return "?";
}

namespace {

WitnessKind kind_from(const std::string& s) {
    for (auto k : {WitnessKind::alt_exceeds_alp, WitnessKind::alp_exceeds_alt, WitnessKind::inconsistency}) {
        if (s == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown witness kind " + s);
}

std::vector<VertexId> sorted_ids(const LandmarkSet& l) {
    std::vector<VertexId> v(l.ids().begin(), l.ids().end());
    std::sort(v.begin(), v.end());
    return v;
}

Witness base_witness(WitnessKind kind, const CorpusCase& c, const LandmarkSet& alt_landmarks) {
    Witness w;
    w.kind = kind;
    w.corpus_seed = c.seed;
    w.vertex_count = c.graph.vertex_count();
    w.edges = c.graph.edges();
    w.alp_landmarks.assign(c.landmarks.ids().begin(), c.landmarks.ids().end());
    w.alt_landmarks.assign(alt_landmarks.ids().begin(), alt_landmarks.ids().end());
    return w;
}

}  // namespace

LandmarkSet alternate_landmarks(const Graph& g, const LandmarkSet& alp_landmarks, std::uint64_t seed) {
    const auto base = sorted_ids(alp_landmarks);
    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        auto candidate = select_random(g, alp_landmarks.size(), derive_seed(seed, 300 + attempt));
        if (sorted_ids(candidate) != base) return candidate;
    }
    throw std::runtime_error("could not draw a different landmark set");
}

std::vector<Witness> find_witnesses(const CorpusCase& c) {
    std::vector<Witness> found;
    const Graph& g = c.graph;
    const auto alt_same = build_alt_embedding(g, c.landmarks);
    const auto alp = build_distributed_embedding(g, c.landmarks);
    const auto other = alternate_landmarks(g, c.landmarks, c.seed);
    const auto alt_other = build_alt_embedding(g, other);
    const auto pairs = evaluation_pairs(g.vertex_count(), c.seed);

    for (const auto& [v, t] : pairs) {
        const double a = alt_h(alt_same, v, t).value;
        const double p = alp_dual_h(alp, v, t).value;
        if (a > p) {
            auto w = base_witness(WitnessKind::alt_exceeds_alp, c, c.landmarks);
            w.v = v;
            w.t = t;
            w.alt_value = a;
            w.alp_value = p;
            found.push_back(std::move(w));
            break;
        }
    }
    for (const auto& [v, t] : pairs) {
        const double a = alt_h(alt_other, v, t).value;
        const double p = alp_dual_h(alp, v, t).value;
        if (p > a) {
            auto w = base_witness(WitnessKind::alp_exceeds_alt, c, other);
            w.v = v;
            w.t = t;
            w.alt_value = a;
            w.alp_value = p;
            found.push_back(std::move(w));
            break;
        }
    }

    std::optional<Witness> any;
    const auto edges = g.edges();
    for (VertexId t = 0; t < g.vertex_count(); ++t) {
        for (const auto& e : edges) {
            if (alp.owner[e.u] == alp.owner[e.v]) continue;
            for (auto [v, vn] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
                const double hv = alp_dual_h(alp, v, t).value;
                const double hn = alp_dual_h(alp, vn, t).value;
                if (!(hv > e.weight + hn)) continue;
                auto w = base_witness(WitnessKind::inconsistency, c, c.landmarks);
                w.v = v;
                w.t = t;
                w.v_next = vn;
                w.edge_weight = e.weight;
                w.alp_value = hv;
                w.alp_value_next = hn;
                const auto l2 = alp.owner[t];
                w.proof_condition = alp.lmatrix(alp.owner[v], l2) > e.weight + alp.lmatrix(alp.owner[vn], l2);
                if (w.proof_condition) {
                    found.push_back(std::move(w));
                    return found;
                }
                if (!any) any = std::move(w);
            }
        }
    }
    if (any) found.push_back(std::move(*any));
    return found;
}

bool replay_witness(const Witness& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Graph g = Graph::build(w.vertex_count, w.edges);
    const auto oracle = floyd_warshall(g);
    const LandmarkSet alp_l(w.alp_landmarks, g.vertex_count());
    const auto alp = build_distributed_embedding(g, alp_l);
    const double p = alp_dual_h(alp, w.v, w.t).value;
    if (p > oracle[w.v][w.t]) return fail("alp bound exceeds the true distance");
    switch (w.kind) {
        case WitnessKind::alt_exceeds_alp:
        case WitnessKind::alp_exceeds_alt: {
            const LandmarkSet alt_l(w.alt_landmarks, g.vertex_count());
            if (w.kind == WitnessKind::alt_exceeds_alp && !(alt_l == alp_l)) {
                return fail("alt_exceeds_alp witness must share the landmark set");
            }
            if (w.kind == WitnessKind::alp_exceeds_alt && sorted_ids(alt_l) == sorted_ids(alp_l)) {
                return fail("alp_exceeds_alt witness must use a different landmark set");
            }
            const auto alt = build_alt_embedding(g, alt_l);
            const double a = alt_h(alt, w.v, w.t).value;
            if (a != w.alt_value || p != w.alp_value) return fail("recorded values do not reproduce");
            const bool holds = w.kind == WitnessKind::alt_exceeds_alp ? a > p : p > a;
            return holds ? true : fail("inequality no longer holds");
        }
        case WitnessKind::inconsistency: {
            const auto weight = g.edge_weight(w.v, w.v_next);
            if (!weight || *weight != w.edge_weight) return fail("edge (v, v') missing");
            if (alp.owner[w.v] == alp.owner[w.v_next]) return fail("edge does not cross a partition boundary");
            const double pn = alp_dual_h(alp, w.v_next, w.t).value;
            if (p != w.alp_value || pn != w.alp_value_next) return fail("recorded values do not reproduce");
            return p > *weight + pn ? true : fail("consistency is not violated");
        }
    }
    return fail("unknown kind");
}

std::string witnesses_to_json(const std::vector<Witness>& ws) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& w : ws) {
        nlohmann::ordered_json o;
        o["kind"] = to_string(w.kind);
        o["corpus_seed"] = w.corpus_seed;
        o["vertex_count"] = w.vertex_count;
        auto edges = nlohmann::ordered_json::array();
        for (const auto& e : w.edges) edges.push_back({e.u, e.v, e.weight});
        o["edges"] = std::move(edges);
        o["alp_landmarks"] = w.alp_landmarks;
        o["alt_landmarks"] = w.alt_landmarks;
        o["v"] = w.v;
        o["t"] = w.t;
        if (w.kind == WitnessKind::inconsistency) {
            o["v_next"] = w.v_next;
            o["edge_weight"] = w.edge_weight;
            o["alp_value_next"] = w.alp_value_next;
            o["proof_condition"] = w.proof_condition;
        }
        o["alt_value"] = w.alt_value;
        o["alp_value"] = w.alp_value;
        doc.push_back(std::move(o));
    }
    return doc.dump(1) + "\n";
}

std::vector<Witness> witnesses_from_json(const std::string& text) {
    const auto doc = nlohmann::json::parse(text);
    std::vector<Witness> out;
    for (const auto& o : doc) {
        Witness w;
        w.kind = kind_from(o.at("kind").get<std::string>());
        w.corpus_seed = o.at("corpus_seed").get<std::uint64_t>();
        w.vertex_count = o.at("vertex_count").get<std::size_t>();
        for (const auto& e : o.at("edges")) {
            w.edges.push_back({e.at(0).get<VertexId>(), e.at(1).get<VertexId>(), e.at(2).get<double>()});
        }
        w.alp_landmarks = o.at("alp_landmarks").get<std::vector<VertexId>>();
        w.alt_landmarks = o.at("alt_landmarks").get<std::vector<VertexId>>();
        w.v = o.at("v").get<VertexId>();
        w.t = o.at("t").get<VertexId>();
        if (w.kind == WitnessKind::inconsistency) {
            w.v_next = o.at("v_next").get<VertexId>();
            w.edge_weight = o.at("edge_weight").get<double>();
            w.alp_value_next = o.at("alp_value_next").get<double>();
            w.proof_condition = o.at("proof_condition").get<bool>();
        }
        w.alt_value = o.at("alt_value").get<double>();
        w.alp_value = o.at("alp_value").get<double>();
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace alp::testing
