#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "choicepa/errors.hpp"
#include "choicepa/sampler.hpp"
#include "stat_helpers.hpp"

using namespace choicepa;
using choicepa::testing::chi_square_p;
using choicepa::testing::two_sample_chi_square_p;

namespace {

// P2: v0 - v1, v2 attached to v0; degrees [2, 1, 1].
EndpointList p2_endpoints() {
    EndpointList list;
    list.record_edge(0, 1);
    list.record_edge(2, 0);
    return list;
}

WeightIndex p2_weights(double alpha) {
    WeightIndex index(alpha);
    index.add_vertex(2);
    index.add_vertex(1);
    index.add_vertex(1);
    return index;
}

template <typename Sampler>
std::vector<std::uint64_t> draw_counts(const Sampler& s, std::size_t vertices, int draws, std::uint64_t seed) {
    RandomSource rng(seed);
    std::vector<std::uint64_t> counts(vertices, 0);
    for (int i = 0; i < draws; ++i) ++counts[s.sample(rng)];
    return counts;
}

} // namespace

TEST(EndpointList, RecordEdgeAppendsBothEnds) {
    EndpointList list;
    list.record_edge(0, 1);
    ASSERT_EQ(list.size(), 2u);
    EXPECT_EQ(list.entries()[0], 0u);
    EXPECT_EQ(list.entries()[1], 1u);

    list.record_edge(2, 0);
    ASSERT_EQ(list.size(), 4u);
    EXPECT_EQ(std::count(list.entries().begin(), list.entries().end(), 0u), 2);
}

TEST(EndpointList, LengthIsTwiceEdgeCount) {
    EndpointList list;
    for (VertexId v = 1; v <= 250; ++v) list.record_edge(v, v / 2);
    EXPECT_EQ(list.size(), 500u);
}

TEST(EndpointList, EmptyListThrows) {
    EndpointList list;
    RandomSource rng(1);
    EXPECT_THROW(list.sample(rng), PreconditionError);
}

TEST(EndpointList, OneEdgeTreeIsFair) {
    EndpointList list;
    list.record_edge(0, 1);
    const auto counts = draw_counts(list, 2, 1'000'000, 11);
    EXPECT_GT(chi_square_p(counts, {0.5, 0.5}), 0.01);
}

TEST(EndpointList, SizeBiasedOnP2) {
    const auto counts = draw_counts(p2_endpoints(), 3, 1'000'000, 12);
    EXPECT_GT(chi_square_p(counts, {0.5, 0.25, 0.25}), 0.01);
}

TEST(WeightIndex, LinearWeightsMatchDegrees) {
    const auto index = p2_weights(1.0);
    EXPECT_EQ(index.weight(0), 2.0);
    EXPECT_EQ(index.weight(1), 1.0);
    EXPECT_EQ(index.total_weight(), 4.0);
}

TEST(WeightIndex, AlphaOneMatchesEndpointLaw) {
    const auto counts = draw_counts(p2_weights(1.0), 3, 1'000'000, 13);
    EXPECT_GT(chi_square_p(counts, {0.5, 0.25, 0.25}), 0.01);
    const auto endpoint_counts = draw_counts(p2_endpoints(), 3, 1'000'000, 14);
    EXPECT_GT(two_sample_chi_square_p(counts, endpoint_counts), 0.01);
}

TEST(WeightIndex, AlphaZeroIsUniform) {
    const auto counts = draw_counts(p2_weights(0.0), 3, 600'000, 15);
    EXPECT_GT(chi_square_p(counts, {1.0 / 3, 1.0 / 3, 1.0 / 3}), 0.01);
}

TEST(WeightIndex, AlphaTwoOnP2) {
    const auto counts = draw_counts(p2_weights(2.0), 3, 1'000'000, 16);
    EXPECT_GT(chi_square_p(counts, {4.0 / 6, 1.0 / 6, 1.0 / 6}), 0.01);
}

TEST(WeightIndex, UpdateChangesTotal) {
    auto lin = p2_weights(1.0);
    const double before = lin.total_weight();
    lin.update_weight(1, 2);
    EXPECT_EQ(lin.total_weight() - before, 1.0);

    auto sq = p2_weights(2.0);
    const double before_sq = sq.total_weight();
    sq.update_weight(1, 2);
    EXPECT_EQ(sq.total_weight() - before_sq, 3.0);
}

TEST(WeightIndex, UnknownVertexThrows) {
    auto index = p2_weights(1.0);
    EXPECT_THROW(index.update_weight(3, 2), PreconditionError);
    EXPECT_THROW(index.weight(7), PreconditionError);
}

TEST(WeightIndex, EmptyIndexThrowsOnSample) {
    WeightIndex index(1.5);
    RandomSource rng(1);
    EXPECT_THROW(index.sample(rng), PreconditionError);
}

TEST(WeightIndex, RejectsNegativeAlpha) { EXPECT_THROW(WeightIndex(-0.5), PreconditionError); }

TEST(WeightIndex, OverflowGuard) {
    WeightIndex index(200.0);
    index.add_vertex(1);
    EXPECT_NO_THROW(index.update_weight(0, 2)); // 2^200
    EXPECT_THROW(index.update_weight(0, 64), OverflowError); // 200 * 6 >= 1000
}

TEST(WeightIndex, UpdatedLawMatchesRebuiltIndex) {
    // Random degree sequence, random updates, then compare against an index
    // built from the final degrees directly.
    RandomSource rng(21);
    const double alpha = 1.5;
    std::vector<std::uint32_t> degrees(40);
    WeightIndex incremental(alpha);
    for (auto& d : degrees) {
        d = 1 + static_cast<std::uint32_t>(rng.below(5));
        incremental.add_vertex(d);
    }
    for (int i = 0; i < 500; ++i) {
        const auto v = static_cast<VertexId>(rng.below(degrees.size()));
        degrees[v] = 1 + static_cast<std::uint32_t>(rng.below(9));
        incremental.update_weight(v, degrees[v]);
    }
    WeightIndex rebuilt(alpha);
    double direct_sum = 0;
    for (const auto d : degrees) {
        rebuilt.add_vertex(d);
        direct_sum += std::pow(d, alpha);
    }
    EXPECT_NEAR(incremental.total_weight(), direct_sum, 1e-12 * direct_sum);
    EXPECT_NEAR(rebuilt.total_weight(), direct_sum, 1e-12 * direct_sum);

    std::vector<double> probs;
    for (const auto d : degrees) probs.push_back(std::pow(d, alpha) / direct_sum);
    const auto a = draw_counts(incremental, degrees.size(), 1'000'000, 22);
    const auto b = draw_counts(rebuilt, degrees.size(), 1'000'000, 23);
    EXPECT_GT(chi_square_p(a, probs), 0.01);
    EXPECT_GT(two_sample_chi_square_p(a, b), 0.01);
}

TEST(WeightIndex, TotalStaysConsistentThroughGrowth) {
    WeightIndex index(0.7);
    RandomSource rng(5);
    std::vector<std::uint32_t> degrees;
    for (int i = 0; i < 5000; ++i) {
        if (!degrees.empty() && rng.below(2) == 0) {
            const auto v = static_cast<VertexId>(rng.below(degrees.size()));
            index.update_weight(v, ++degrees[v]);
        } else {
            degrees.push_back(1);
            index.add_vertex(1);
        }
    }
    double sum = 0;
    for (const auto d : degrees) sum += std::pow(d, 0.7);
    EXPECT_NEAR(index.total_weight(), sum, 1e-12 * sum);
}
