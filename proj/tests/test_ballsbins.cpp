#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <numeric>

#include "choicepa/ballsbins.hpp"
#include "choicepa/errors.hpp"
#include "stat_helpers.hpp"

using namespace choicepa;

namespace {

void expect_consistent(const BinsState& s) {
    const auto loads = s.loads();
    ASSERT_EQ(std::accumulate(loads.begin(), loads.end(), std::uint64_t{0}), s.balls());
    const auto recomputed = levels_from_loads(loads);
    ASSERT_TRUE(std::equal(recomputed.begin(), recomputed.end(), s.levels().begin(), s.levels().end()));
    ASSERT_EQ(s.level(0), s.bins());
    std::uint64_t accounted = 0;
    for (std::uint32_t k = 1; k <= s.max_load(); ++k) {
        ASSERT_LE(s.level(k), s.level(k - 1));
        accounted += (s.level(k) - s.level(k + 1)) * k;
    }
    ASSERT_EQ(accounted, s.balls());
}

// Exact law of the two-choice level vector after `balls` placements into
// `bins` bins, by enumerating ordered bin pairs and tie coins.
std::map<std::vector<std::uint64_t>, double> exact_levels(std::uint32_t bins, std::uint32_t balls) {
    std::map<std::vector<std::uint32_t>, double> layer{{std::vector<std::uint32_t>(bins, 0), 1.0}};
    for (std::uint32_t b = 0; b < balls; ++b) {
        std::map<std::vector<std::uint32_t>, double> next;
        const double pair = 1.0 / (bins * bins);
        for (const auto& [loads, p] : layer) {
            for (std::uint32_t x = 0; x < bins; ++x) {
                for (std::uint32_t y = 0; y < bins; ++y) {
                    auto add = [&](std::uint32_t target, double w) {
                        auto l = loads;
                        ++l[target];
                        next[l] += p * pair * w;
                    };
                    if (loads[x] < loads[y]) add(x, 1);
                    else if (loads[y] < loads[x]) add(y, 1);
                    else {
                        add(x, 0.5);
                        add(y, 0.5);
                    }
                }
            }
        }
        layer = std::move(next);
    }
    std::map<std::vector<std::uint64_t>, double> out;
    for (const auto& [loads, p] : layer) out[levels_from_loads(loads)] += p;
    return out;
}

} // namespace

TEST(BinsState, FirstBallLandsAtLevelOne) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        BinsState s(4);
        RandomSource rng(seed);
        EXPECT_EQ(s.max_load(), 0u);
        place_two_choice(s, rng);
        EXPECT_EQ(s.level(1), 1u);
        EXPECT_EQ(s.max_load(), 1u);
        expect_consistent(s);
    }
}

TEST(BinsState, TwoBinsTwoBalls) {
    RandomSource rng(1);
    std::vector<std::uint64_t> counts(2, 0); // max load 1, 2
    for (int i = 0; i < 1'000'000; ++i) {
        BinsState s(2);
        place_two_choice(s, rng);
        place_two_choice(s, rng);
        ++counts[s.max_load() - 1];
    }
    EXPECT_GT(choicepa::testing::chi_square_p(counts, {0.75, 0.25}), 0.01);
}

TEST(BinsState, LevelsConsistentThroughoutRun) {
    BinsState s(1000);
    RandomSource rng(2);
    for (int i = 0; i < 5000; ++i) {
        place_two_choice(s, rng);
        if (i % 97 == 0) expect_consistent(s);
    }
    expect_consistent(s);
    EXPECT_EQ(s.max_load(), *std::max_element(s.loads().begin(), s.loads().end()));
}

TEST(BinsState, ZeroBinsRejected) { EXPECT_THROW(BinsState(0), PreconditionError); }

TEST(LevelChain, Examples) {
    std::vector<std::uint64_t> empty{4, 0};
    EXPECT_EQ(level_chain_step(empty, 4, 0.9), 0u);
    EXPECT_EQ(empty[1], 1u);

    std::vector<std::uint64_t> a{4, 2, 0};
    EXPECT_EQ(level_chain_step(a, 4, 0.20), 1u);
    EXPECT_EQ(a[2], 1u);

    std::vector<std::uint64_t> b{4, 2, 0};
    EXPECT_EQ(level_chain_step(b, 4, 0.30), 0u);
    EXPECT_EQ(b[1], 3u);
}

TEST(LevelChain, RejectsWrongBinCount) {
    std::vector<std::uint64_t> levels{3, 0};
    EXPECT_THROW(level_chain_step(levels, 4, 0.5), PreconditionError);
}

TEST(LevelChain, MatchesPlacementLaw) {
    for (std::uint32_t n : {2u, 3u, 4u}) {
        for (std::uint32_t balls : {1u, 2u, 3u}) {
            const auto exact = exact_levels(n, balls);
            std::map<std::vector<std::uint64_t>, std::uint64_t> chain, placed;
            RandomSource rng(100 * n + balls);
            for (int i = 0; i < 200'000; ++i) {
                std::vector<std::uint64_t> levels{n, 0};
                for (std::uint32_t b = 0; b < balls; ++b) level_chain_step(levels, n, rng.uniform());
                ++chain[levels];

                BinsState s(n);
                for (std::uint32_t b = 0; b < balls; ++b) place_two_choice(s, rng);
                ++placed[std::vector<std::uint64_t>(s.levels().begin(), s.levels().end())];
            }
            EXPECT_LE(choicepa::testing::total_variation(exact, chain), 0.01) << n << "," << balls;
            EXPECT_LE(choicepa::testing::total_variation(exact, placed), 0.01) << n << "," << balls;
        }
    }
}

TEST(Coupling, FirstStep) {
    const auto r = coupled_run(1, 5);
    EXPECT_EQ(r.bins, 2u);
    EXPECT_EQ(r.bins_max_load, 1u);
    EXPECT_EQ(r.tree_max_degree, 1u);
    EXPECT_EQ(r.violations, 0u);
}

TEST(Coupling, NoViolationsAcrossSeeds) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = coupled_run(10'000, seed);
        EXPECT_EQ(r.violations, 0u);
        EXPECT_GT(r.checks, 10'000u);
        EXPECT_LE(r.bins_max_load, r.tree_max_degree);
    }
}

TEST(Coupling, RejectsZeroEdges) { EXPECT_THROW(coupled_run(0, 1), PreconditionError); }
