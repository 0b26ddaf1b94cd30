#include "fixedpoint/families.hpp"
#include "fixedpoint/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace fixedpoint;

namespace {

SearchSpace space(std::size_t k, std::size_t n, Weight w) {
    SearchSpace s;
    s.point_count = k;
    s.half_dim = n;
    s.max_weight = w;
    return s;
}

} // namespace

TEST(CanonicalWeightSets, CountsAndOrder) {
    auto sets = canonical_weight_sets(2, 2);
    EXPECT_EQ(sets.size(), 10u);
    for (std::size_t j = 1; j < sets.size(); ++j)
        EXPECT_TRUE(canonical_compare(sets[j - 1], sets[j]) < 0);
    EXPECT_EQ(sets.front(), (WeightSet{2, 2}));
    EXPECT_EQ(sets[7], (WeightSet{-1, -1}));
    EXPECT_EQ(sets.back(), (WeightSet{-2, -2}));
    EXPECT_EQ(canonical_weight_sets(3, 3).size(), 56u);
}

TEST(Enumerate, OnePointNothing) {
    EXPECT_TRUE(enumerate(space(1, 2, 3)).empty());
}

TEST(Enumerate, TwoPointsDimFourNothing) {
    EXPECT_TRUE(enumerate(space(2, 2, 3)).empty());
}

TEST(Enumerate, ThreePointsDimFour) {
    auto got = enumerate(space(3, 2, 3));
    std::vector<Datum> want{cp2_triple(1, 2), cp2_triple(2, 1), cp2_triple(1, 1)};
    std::sort(want.begin(), want.end(),
              [](const Datum &a, const Datum &b) { return canonical_compare(a, b) < 0; });
    EXPECT_EQ(got, want);
}

TEST(Enumerate, TwoPointsDimSix) {
    auto got = enumerate(space(2, 3, 4));
    std::set<std::string> have, want;
    for (const auto &d : got)
        have.insert(to_string(d));
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 2}})
        want.insert(to_string(sphere6(a, b)));
    EXPECT_EQ(have, want);
}

TEST(Enumerate, WeightlessPoint) {
    EXPECT_EQ(enumerate(space(1, 0, 1)).size(), 1u);
    EXPECT_TRUE(enumerate(space(2, 0, 1)).empty());
}

TEST(Enumerate, DedupNegation) {
    auto s = space(3, 2, 4);
    auto all = enumerate(s);
    s.dedup_negation = true;
    auto reps = enumerate(s);
    EXPECT_EQ(all.size(), 6u);
    EXPECT_EQ(reps.size(), 4u);
    for (const auto &d : reps)
        EXPECT_TRUE(canonical_compare(d, negate(d)) <= 0);
}

TEST(Enumerate, PrimitiveOnly) {
    auto s = space(2, 1, 4);
    EXPECT_EQ(enumerate(s).size(), 4u);
    s.primitive_only = true;
    auto prim = enumerate(s);
    ASSERT_EQ(prim.size(), 1u);
    EXPECT_EQ(prim[0], sphere2(1));
}

TEST(Enumerate, ThreadsDoNotChangeOutput) {
    auto s = space(3, 2, 4);
    auto serial = enumerate(s);
    s.threads = 4;
    EXPECT_EQ(enumerate(s), serial);
}

TEST(Enumerate, PruningIsSafe) {
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 2; ++n)
            for (Weight w = 1; w <= 2; ++w) {
                auto s = space(k, n, w);
                s.config = CheckConfig{CheckId::WeightBalance, CheckId::ChernTotal};
                auto pruned = enumerate(s);
                s.prune = false;
                EXPECT_EQ(enumerate(s), pruned) << k << " " << n << " " << w;
            }
}

TEST(Enumerate, NodeCap) {
    auto s = space(3, 2, 4);
    s.node_cap = 10;
    EXPECT_THROW(enumerate(s), SearchOverflow);
    s.threads = 3;
    EXPECT_THROW(enumerate(s), SearchOverflow);
}

TEST(Enumerate, BadBounds) {
    EXPECT_THROW(enumerate(space(0, 1, 1)), std::invalid_argument);
    EXPECT_THROW(enumerate(space(1, 1, 0)), std::invalid_argument);
}

TEST(Enumerate, StreamingSinkMatches) {
    auto s = space(2, 3, 3);
    std::vector<Datum> streamed;
    enumerate(s, [&](const Datum &d) { streamed.push_back(d); });
    EXPECT_EQ(streamed, enumerate(s));
}

TEST(MutationBattery, Examples) {
    auto cp = mutation_battery(cp2_triple(1, 1));
    EXPECT_EQ(cp.front(), (Datum{{3, 1}, {-1, 1}, {-1, -2}}));
    EXPECT_EQ(cp.size(), 6u + 6u + 3u + 3u);

    auto s = mutation_battery(sphere2(1));
    EXPECT_NE(std::find(s.begin(), s.end(), Datum{{1}}), s.end());
}

TEST(MutationBattery, SinglePointSkipsDrop) {
    auto m = mutation_battery(Datum{{1, 2}});
    EXPECT_EQ(m.size(), 2u + 2u + 1u);
}

TEST(ClassifyReport, Examples) {
    auto summary = classify_report(enumerate(space(3, 2, 3)));
    ASSERT_EQ(summary.groups.size(), 1u);
    EXPECT_EQ(summary.total, 3u);
    EXPECT_EQ(summary.groups[0].count, 3u);
    EXPECT_DOUBLE_EQ(summary.groups[0].kosniowski_ratio, 2.0 / 3.0);
    EXPECT_FALSE(summary.groups[0].exceeds_conjectured_bound);

    auto empty = classify_report({});
    EXPECT_TRUE(empty.groups.empty());
    EXPECT_EQ(empty.total, 0u);

    auto flagged = classify_report({Datum{{1, 1, 1, 1, 1}}});
    EXPECT_TRUE(flagged.groups[0].exceeds_conjectured_bound);
    auto j = summary_to_json(flagged);
    EXPECT_EQ(j["groups"][0]["flag"], "exceeds conjectured bound");
    EXPECT_EQ(j["certified"], false);
    EXPECT_NE(summary_to_text(flagged).find("not certified"), std::string::npos);
}
