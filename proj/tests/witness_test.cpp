#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "support/corpus.hpp"

namespace alp {
namespace {

using testing::Witness;
using testing::WitnessKind;

const std::string kFixture = std::string(ALP_TEST_FIXTURES) + "/heuristic_witnesses.json";

std::vector<Witness> load_fixture() {
    std::ifstream in(kFixture);
    const std::string text{std::istreambuf_iterator<char>(in), {}};
    return testing::witnesses_from_json(text);
}

TEST(Witnesses, FixtureCoversEveryKind) {
    const auto ws = load_fixture();
    std::set<WitnessKind> kinds;
    for (const auto& w : ws) kinds.insert(w.kind);
    EXPECT_EQ(kinds.size(), 3u);
}

TEST(Witnesses, FixtureReplays) {
    for (const auto& w : load_fixture()) {
        std::string why;
        EXPECT_TRUE(testing::replay_witness(w, &why)) << testing::to_string(w.kind) << ": " << why;
    }
}

TEST(Witnesses, FixtureRegeneratesFromCorpus) {
    for (const auto& w : load_fixture()) {
        const auto c = testing::make_corpus_case(w.corpus_seed);
        const auto again = testing::find_witnesses(c);
        const auto hit = std::find_if(again.begin(), again.end(), [&](const Witness& x) { return x.kind == w.kind; });
        ASSERT_NE(hit, again.end()) << testing::to_string(w.kind);
        EXPECT_EQ(hit->v, w.v);
        EXPECT_EQ(hit->t, w.t);
        EXPECT_EQ(hit->alp_value, w.alp_value);
    }
}

TEST(Witnesses, JsonRoundTrip) {
    const auto ws = load_fixture();
    const auto back = testing::witnesses_from_json(testing::witnesses_to_json(ws));
    ASSERT_EQ(back.size(), ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        EXPECT_EQ(back[i].kind, ws[i].kind);
        EXPECT_EQ(back[i].edges.size(), ws[i].edges.size());
        EXPECT_EQ(back[i].alt_landmarks, ws[i].alt_landmarks);
        EXPECT_EQ(back[i].alp_value, ws[i].alp_value);
    }
}

TEST(Witnesses, ReplayRejectsTampering) {
    auto ws = load_fixture();
    ASSERT_FALSE(ws.empty());
    for (auto& w : ws) {
        w.alp_value += 0.5;
        EXPECT_FALSE(testing::replay_witness(w));
    }
}

}  // namespace
}  // namespace alp
