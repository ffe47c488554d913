#include "heokit/objective.hpp"
#include "heokit/random.hpp"
#include "heokit/run.hpp"
#include "heokit/search_space.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace heokit;

TEST(RandomStream, EqualSeedsGiveEqualSequences) {
    RandomStream a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        differs = differs || x != c.next_u64();
    }
    EXPECT_TRUE(differs);
}

TEST(RandomStream, UniformStaysInHalfOpenInterval) {
    RandomStream rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform(-3.0, 5.0);
        ASSERT_GE(u, -3.0);
        ASSERT_LT(u, 5.0);
    }
    EXPECT_EQ(rng.uniform(2.0, 2.0), 2.0);
}

TEST(RandomStream, NormalWithZeroSigmaIsExact) {
    RandomStream rng(9);
    for (int i = 0; i < 10; ++i) {
        EXPECT_EQ(rng.normal(1.25, 0.0), 1.25);
    }
}

TEST(RandomStream, NormalMoments) {
    RandomStream rng(5);
    const int n = 200000;
    double s = 0.0, ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal(2.0, 3.0);
        s += z;
        ss += z * z;
    }
    const double mean = s / n;
    const double var = ss / n - mean * mean;
    EXPECT_NEAR(mean, 2.0, 0.03);
    EXPECT_NEAR(std::sqrt(var), 3.0, 0.03);
}

TEST(RandomStream, BelowCoversRangeUniformly) {
    RandomStream rng(3);
    int counts[7] = {};
    for (int i = 0; i < 70000; ++i) {
        const auto k = rng.below(7);
        ASSERT_LT(k, 7u);
        ++counts[k];
    }
    for (int c : counts) {
        EXPECT_NEAR(c, 10000, 400);
    }
}

TEST(SearchSpace, RejectsBadBounds) {
    EXPECT_THROW(SearchSpace({}, {}), std::invalid_argument);
    EXPECT_THROW(SearchSpace({0.0}, {0.0}), std::invalid_argument);
    EXPECT_THROW(SearchSpace({1.0}, {0.0}), std::invalid_argument);
    EXPECT_THROW(SearchSpace({0.0, 0.0}, {1.0}), std::invalid_argument);
    EXPECT_THROW(SearchSpace({0.0}, {std::numeric_limits<double>::infinity()}),
                 std::invalid_argument);
}

TEST(SearchSpace, HalfSideIsPositive) {
    const SearchSpace s({-100.0, 0.0}, {100.0, 3.0});
    EXPECT_EQ(s.half_side(0), 100.0);
    EXPECT_EQ(s.half_side(1), 1.5);
    EXPECT_EQ(s.dim(), 2u);
}

TEST(Clamp, Examples) {
    const auto s = SearchSpace::cube(2, -100.0, 100.0);
    EXPECT_EQ(clamp(std::vector{150.0, 50.0}, s), (Vector{100.0, 50.0}));
    EXPECT_EQ(clamp(std::vector{0.0, 0.0}, s), (Vector{0.0, 0.0}));
    EXPECT_EQ(clamp(std::vector{-200.0, 200.0}, s), (Vector{-100.0, 100.0}));
}

TEST(Clamp, DimensionMismatchThrows) {
    const auto s = SearchSpace::cube(2, -1.0, 1.0);
    EXPECT_THROW(clamp(std::vector{1.0}, s), std::invalid_argument);
}

TEST(Clamp, NonFiniteValuesEndInside) {
    const auto s = SearchSpace::cube(3, -1.0, 1.0);
    const double inf = std::numeric_limits<double>::infinity();
    const Vector out = clamp(std::vector{inf, -inf, std::nan("")}, s);
    EXPECT_EQ(out, (Vector{1.0, -1.0, 0.0}));
}

TEST(Clamp, IsIdempotent) {
    RandomStream rng(11);
    const SearchSpace s({-1.0, 5.0, -50.0}, {2.0, 6.0, 50.0});
    for (int i = 0; i < 1000; ++i) {
        const Vector x{rng.uniform(-10, 10), rng.uniform(0, 10), rng.uniform(-200, 200)};
        const Vector once = clamp(x, s);
        EXPECT_TRUE(s.contains(once));
        EXPECT_EQ(clamp(once, s), once);
    }
}

TEST(SampleUniform, RangeAndMean) {
    RandomStream rng(21);
    const auto s = SearchSpace::cube(1, -100.0, 100.0);
    double lo = 1e9, hi = -1e9, sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double v = sample_uniform(s, rng)[0];
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
    }
    EXPECT_GE(lo, -100.0);
    EXPECT_LT(hi, 100.0);
    EXPECT_NEAR(sum / n, 0.0, 1.0);
}

TEST(SampleUniform, Deterministic) {
    const auto s = SearchSpace::cube(5, -3.0, 3.0);
    RandomStream a(8), b(8);
    EXPECT_EQ(sample_uniform(s, a), sample_uniform(s, b));
}

TEST(Objective, CountsEveryCallAndMapsNanToInfinity) {
    int calls = 0;
    Objective f("probe", SearchSpace::cube(2, -1.0, 1.0), [&](std::span<const double> x) {
        ++calls;
        return x[0] > 0.5 ? std::nan("") : x[0] + x[1];
    });
    EXPECT_EQ(f.evaluate(std::vector{0.25, 0.5}), 0.75);
    EXPECT_EQ(f.evaluate(std::vector{0.25, 0.5}), 0.75);
    EXPECT_EQ(f.evaluate(std::vector{0.75, 0.0}), std::numeric_limits<double>::infinity());
    EXPECT_EQ(f.eval_count(), 3u);
    EXPECT_EQ(calls, 3);
    EXPECT_THROW(f.evaluate(std::vector{0.0}), std::invalid_argument);
    f.reset_count();
    EXPECT_EQ(f.eval_count(), 0u);
}

TEST(RunConfig, Validation) {
    EXPECT_NO_THROW((RunConfig{2, 1, 0, true}.validate()));
    EXPECT_THROW((RunConfig{1, 10, 0, true}.validate()), std::invalid_argument);
    EXPECT_THROW((RunConfig{10, 0, 0, true}.validate()), std::invalid_argument);
}
