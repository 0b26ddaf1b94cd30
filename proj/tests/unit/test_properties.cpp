#include "fixedpoint/constraints.hpp"
#include "fixedpoint/families.hpp"
#include "fixedpoint/isotropy.hpp"
#include "fixedpoint/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace fixedpoint;

namespace {

LaurentPoly random_poly(std::mt19937 &rng) {
    std::uniform_int_distribution<int> len(0, 5), ex(-4, 6), co(-5, 5);
    std::vector<LaurentPoly::Term> terms;
    for (int j = len(rng); j > 0; --j)
        terms.push_back({ex(rng), co(rng)});
    return LaurentPoly::from_terms(terms);
}

Weight random_weight(std::mt19937 &rng, Weight max_weight) {
    std::uniform_int_distribution<Weight> mag(1, max_weight);
    std::bernoulli_distribution neg(0.5);
    Weight w = mag(rng);
    return neg(rng) ? -w : w;
}

Datum random_datum(std::mt19937 &rng, std::size_t max_k, std::size_t max_n, Weight max_w) {
    std::uniform_int_distribution<std::size_t> kd(1, max_k), nd(1, max_n);
    const std::size_t k = kd(rng), n = nd(rng);
    std::vector<WeightSet> pts;
    for (std::size_t p = 0; p < k; ++p) {
        std::vector<Weight> ws;
        for (std::size_t j = 0; j < n; ++j)
            ws.push_back(random_weight(rng, max_w));
        pts.emplace_back(ws);
    }
    return canonicalize(Datum(pts));
}

// Random data are mostly unbalanced; mix in family members and near misses.
std::vector<Datum> sample_data(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::vector<Datum> out;
    for (std::size_t j = 0; j < count; ++j)
        out.push_back(random_datum(rng, 4, 3, 4));
    for (Weight a = 1; a <= 3; ++a)
        for (Weight b = 1; b <= 3; ++b) {
            out.push_back(cp2_triple(a, b));
            out.push_back(sphere6(a, b));
            for (const auto &m : mutation_battery(cp2_triple(a, b)))
                out.push_back(m);
        }
    return out;
}

LaurentPoly subset_sigma(const std::vector<std::int64_t> &w, int i) {
    LaurentPoly out;
    const std::size_t n = w.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != i)
            continue;
        std::int64_t e = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j))
                e += w[j];
        out = out + LaurentPoly::monomial(1, e);
    }
    return out;
}

std::vector<Status> statuses(const Datum &d, const CheckConfig &cfg = CheckConfig::all()) {
    std::vector<Status> out;
    for (const auto &c : run_suite(d, cfg).checks)
        out.push_back(c.verdict.status);
    return out;
}

const CheckConfig global_checks{CheckId::IndexIdentities, CheckId::ProfileSymmetry,
                                CheckId::WeightBalance,   CheckId::ChernTotal,
                                CheckId::Parity,          CheckId::AdjacentProfile,
                                CheckId::Abbv,            CheckId::MinimumCounts};

} // namespace

TEST(LaurentProperties, RingLaws) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
        EXPECT_EQ(a * LaurentPoly::constant(1), a);
    }
}

TEST(LaurentProperties, ElementarySymmetricMatchesSubsets) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::int64_t> w;
        for (int j = std::uniform_int_distribution<int>(0, 5)(rng); j > 0; --j)
            w.push_back(random_weight(rng, 5));
        for (int i = 0; i <= static_cast<int>(w.size()); ++i)
            EXPECT_EQ(elementary_symmetric(w, i), subset_sigma(w, i));
    }
}

TEST(LaurentProperties, OppositePairNormalizes) {
    for (std::int64_t w = -6; w <= 6; ++w) {
        if (w == 0)
            continue;
        std::vector<std::int64_t> ws{w, -w};
        auto f = normalize_term(ws);
        EXPECT_EQ(f.numerator, LaurentPoly::monomial(-1, std::abs(w)));
        EXPECT_EQ(f.denominator, (std::vector<std::int64_t>{std::abs(w), std::abs(w)}));
    }
}

TEST(LaurentProperties, NumeratorRecovery) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::int64_t> w;
        for (int j = std::uniform_int_distribution<int>(1, 4)(rng); j > 0; --j)
            w.push_back(random_weight(rng, 5));
        auto f = normalize_term(w);
        EXPECT_TRUE(f.is_normalized());
        EXPECT_EQ(f.numerator * one_minus_product(w), one_minus_product(f.denominator));
    }
}

TEST(IdentityProperties, SeriesAgreesWithCrossMultiplication) {
    for (const auto &d : sample_data(21, 150))
        for (int i = 0; i <= static_cast<int>(d.half_dim()); ++i)
            EXPECT_EQ(check_index_identity(d, i).pass, check_index_identity_series(d, i).pass)
                << to_string(d) << " i=" << i;
}

TEST(IdentityProperties, IdentitiesImplyProfileSymmetry) {
    for (const auto &d : sample_data(22, 300)) {
        auto all = check_index_all(d);
        bool pass = std::all_of(all.begin(), all.end(), [](const auto &v) { return v.pass; });
        if (pass)
            EXPECT_EQ(check_profile_symmetry(d).status, Status::Pass) << to_string(d);
    }
}

TEST(InvarianceProperties, Negation) {
    for (const auto &d : sample_data(31, 150))
        EXPECT_EQ(statuses(d), statuses(negate(d))) << to_string(d);
}

TEST(InvarianceProperties, PointPermutation) {
    std::mt19937 rng(32);
    for (const auto &d : sample_data(33, 100)) {
        auto pts = d.points();
        std::shuffle(pts.begin(), pts.end(), rng);
        Datum shuffled(pts);
        EXPECT_EQ(statuses(shuffled), statuses(d)) << to_string(d);
        EXPECT_EQ(canonicalize(shuffled), d);
    }
}

TEST(InvarianceProperties, ScalingGlobalChecks) {
    for (const auto &d : sample_data(34, 100))
        for (Weight m : {2, 3})
            EXPECT_EQ(statuses(scale(d, m), global_checks), statuses(d, global_checks))
                << to_string(d) << " m=" << m;
}

TEST(InvarianceProperties, ModkScaleCorrespondence) {
    for (const auto &d : sample_data(35, 100))
        for (Weight m : {2, 3})
            for (Weight k = 2; k <= 4; ++k) {
                auto base = check_modk(d, k);
                auto scaled = check_modk(scale(d, m), m * k);
                EXPECT_EQ(base.pass, scaled.pass) << to_string(d) << " m=" << m << " k=" << k;
                EXPECT_EQ(base.partition, scaled.partition);
            }
}

TEST(SearchProperties, SoundAndComplete) {
    // Independent generation: all point-lists, canonicalized and deduplicated.
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t n = 1; n <= 2; ++n)
            for (Weight w = 1; w <= 2; ++w) {
                std::vector<WeightSet> sets;
                std::vector<Weight> vals;
                for (Weight v = -w; v <= w; ++v)
                    if (v != 0)
                        vals.push_back(v);
                std::vector<std::size_t> idx(n, 0);
                while (true) {
                    std::vector<Weight> ws;
                    for (auto j : idx)
                        ws.push_back(vals[j]);
                    sets.emplace_back(ws);
                    std::size_t pos = 0;
                    while (pos < n && ++idx[pos] == vals.size())
                        idx[pos++] = 0;
                    if (pos == n)
                        break;
                }
                std::set<std::string> expected;
                std::vector<std::size_t> pick(k, 0);
                while (true) {
                    std::vector<WeightSet> pts;
                    for (auto j : pick)
                        pts.push_back(sets[j]);
                    Datum d = canonicalize(Datum(pts));
                    if (run_suite(d).overall)
                        expected.insert(to_string(d));
                    std::size_t pos = 0;
                    while (pos < k && ++pick[pos] == sets.size())
                        pick[pos++] = 0;
                    if (pos == k)
                        break;
                }

                SearchSpace s;
                s.point_count = k;
                s.half_dim = n;
                s.max_weight = w;
                auto got = enumerate(s);
                std::set<std::string> have;
                for (const auto &d : got) {
                    EXPECT_TRUE(run_suite(d).overall);
                    EXPECT_EQ(canonicalize(d), d);
                    have.insert(to_string(d));
                }
                EXPECT_EQ(have.size(), got.size());
                EXPECT_EQ(have, expected) << k << " " << n << " " << w;
            }
}

TEST(SearchProperties, CanonicalOrderAndDeterminism) {
    SearchSpace s;
    s.point_count = 3;
    s.half_dim = 2;
    s.max_weight = 4;
    s.config = CheckConfig{CheckId::WeightBalance, CheckId::ChernTotal};
    auto a = enumerate(s);
    for (std::size_t j = 1; j < a.size(); ++j)
        EXPECT_TRUE(canonical_compare(a[j - 1], a[j]) < 0);
    s.threads = 5;
    EXPECT_EQ(enumerate(s), a);
}

TEST(SearchProperties, MonotoneInChecks) {
    SearchSpace s;
    s.point_count = 3;
    s.half_dim = 2;
    s.max_weight = 3;
    s.config = CheckConfig::none();
    std::size_t previous = enumerate(s).size();
    for (auto id : report_order) {
        s.config.enable(id);
        std::size_t now = enumerate(s).size();
        EXPECT_LE(now, previous) << check_name(id);
        previous = now;
    }
    EXPECT_EQ(previous, 3u);
}

TEST(MutationProperties, FamiliesAreIsolated) {
    for (Weight a = 1; a <= 3; ++a)
        for (Weight b = 1; b <= 3; ++b)
            for (const auto &m : mutation_battery(cp2_triple(a, b)))
                EXPECT_FALSE(run_suite(m).overall) << to_string(m);
}
