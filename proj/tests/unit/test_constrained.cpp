#include "heokit/constrained.hpp"
#include "heokit/heo.hpp"
#include "heokit/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace heokit;
using namespace heokit::constrained;

namespace {

ConstrainedProblem toy(double rho) {
    return ConstrainedProblem{
        "toy", SearchSpace::cube(1, -10.0, 10.0),
        [](std::span<const double>) { return 5.0; },
        {[](std::span<const double> x) { return x[0]; }},
        rho};
}

}  // namespace

TEST(Penalty, ZeroOnFeasibleSet) {
    const auto p = toy(1e6);
    EXPECT_EQ(penalized(p, std::vector{-1.0}), 5.0);
    EXPECT_EQ(penalized(p, std::vector{0.0}), 5.0);
}

TEST(Penalty, DirectFormula) {
    EXPECT_EQ(penalized(toy(1e6), std::vector{2.0}), 5.0 + 4e6);
}

TEST(Penalty, IncreasesWithViolation) {
    const auto p = toy(default_penalty);
    double last = penalized(p, std::vector{0.0});
    for (double g = 0.001; g < 10.0; g *= 1.7) {
        const double now = penalized(p, std::vector{g});
        EXPECT_GT(now, last);
        last = now;
    }
}

TEST(Penalty, NeverBelowObjective) {
    RandomStream rng(3);
    for (const auto& p : {pressure_vessel(), tubular_column()}) {
        for (int i = 0; i < 2000; ++i) {
            const Vector x = sample_uniform(p.space, rng);
            const double f = p.objective(x);
            const double pen = penalized(p, x);
            ASSERT_GE(pen, f);
            bool all_satisfied = true;
            for (double g : constraint_values(p, x)) {
                all_satisfied = all_satisfied && g <= 0.0;
            }
            if (all_satisfied) {
                ASSERT_EQ(pen, f);
            }
        }
    }
}

TEST(Feasible, ToleranceSemantics) {
    const auto p = toy(1.0);
    EXPECT_TRUE(feasible(p, std::vector{0.0}));
    EXPECT_TRUE(feasible(p, std::vector{5e-10}));
    EXPECT_FALSE(feasible(p, std::vector{1.0}));
}

TEST(PressureVessel, PrintedDefinition) {
    const auto p = pressure_vessel();
    EXPECT_EQ(p.space.dim(), 4u);
    EXPECT_EQ(p.constraints.size(), 4u);
    EXPECT_EQ(p.space, SearchSpace({0.00625, 0.00625, 40.0, 40.0}, {1.25, 1.25, 200.0, 200.0}));
    const Vector x{1.25, 0.5625, 57.6567, 47.4311};
    EXPECT_NEAR(p.objective(x), 5599.087071076859, 1e-9);
    EXPECT_NEAR(p.objective(x), oracle::vessel_cost(x.data()), 1e-9);
    // The published point violates the volume constraint of the printed form.
    EXPECT_GT(constraint_values(p, x)[2], 0.0);
    EXPECT_FALSE(feasible(p, x));
}

TEST(PressureVessel, BoundaryConstraints) {
    const auto p = pressure_vessel();
    EXPECT_EQ(p.constraints[3](std::vector{1.0, 1.0, 50.0, 240.0}), 0.0);
    const double x3 = 50.0;
    EXPECT_EQ(p.constraints[0](std::vector{0.0193 * x3, 1.0, x3, 100.0}), 0.0);
    // printed g2 is negative everywhere on the box
    EXPECT_LT(p.constraints[1](std::vector{1.0, 1.0, 40.0, 40.0}), 0.0);
}

TEST(PressureVessel, CanonicalVariant) {
    const auto p = pressure_vessel(VesselFormulation::canonical);
    EXPECT_EQ(p.name, "pressure_vessel_canonical");
    // well-known reference design, cost about 6059.7
    const Vector x{0.8125, 0.4375, 42.0984455958549, 176.6365958424394};
    EXPECT_NEAR(p.objective(x), 6059.714335, 1e-3);
    EXPECT_TRUE(feasible(p, x, 1e-3));
}

TEST(TubularColumn, Definition) {
    const auto p = tubular_column();
    EXPECT_EQ(p.space.dim(), 2u);
    EXPECT_EQ(p.constraints.size(), 6u);
    EXPECT_NEAR(p.objective(std::vector{7.1477, 0.2279}), 30.259216134000006, 1e-9);
    EXPECT_EQ(p.constraints[2](std::vector{2.0, 0.5}), 0.0);
    EXPECT_EQ(p.constraints[5](std::vector{5.0, 8.0}), 0.0);
    RandomStream rng(1);
    for (int i = 0; i < 1000; ++i) {
        EXPECT_LT(p.constraints[5](sample_uniform(p.space, rng)), 0.0);
    }
}

TEST(TubularColumn, HandEvaluatedConstraints) {
    const auto p = tubular_column();
    const auto g = constraint_values(p, std::vector{10.0, 0.5});
    const std::vector<double> expected{-0.6746165607899028, -0.8360758380314495, -0.8,
                                       -0.2857142857142857, -0.6, -0.9375};
    ASSERT_EQ(g.size(), expected.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_NEAR(g[k], expected[k], 1e-12) << "g" << k + 1;
    }
    EXPECT_TRUE(feasible(p, std::vector{10.0, 0.5}));
    EXPECT_TRUE(oracle::column_feasible(10.0, 0.5));
}

TEST(TubularColumn, MatchesOracleFormulas) {
    const auto p = tubular_column();
    RandomStream rng(12);
    for (int i = 0; i < 5000; ++i) {
        const Vector x = sample_uniform(p.space, rng);
        EXPECT_EQ(feasible(p, x), oracle::column_feasible(x[0], x[1]));
        EXPECT_NEAR(p.objective(x), oracle::column_cost(x[0], x[1]), 1e-12);
    }
}

TEST(FindProblem, Names) {
    EXPECT_TRUE(find_problem("pressure_vessel"));
    EXPECT_TRUE(find_problem("pressure_vessel_canonical"));
    EXPECT_TRUE(find_problem("tubular_column"));
    EXPECT_FALSE(find_problem("welded_beam"));
    EXPECT_EQ(problem_names().size(), 3u);
}

TEST(Solve, ReportsBestFeasiblePointSeen) {
    const auto p = tubular_column();
    heo::Params params;
    params.population = 20;
    params.iterations = 100;
    params.skip_trigger = 1;
    const Solution s = solve(p, [&](Objective& f) { return heo::run(f, params, 3, false); });
    EXPECT_TRUE(s.feasible);
    EXPECT_TRUE(p.space.contains(s.x));
    EXPECT_EQ(s.cost, p.objective(s.x));
    EXPECT_LT(s.cost, 35.0);
    const nlohmann::json j = s;
    EXPECT_EQ(j.at("constraint_values").size(), 6u);
    EXPECT_TRUE(j.at("feasible").get<bool>());
}

TEST(Solve, FeasibleRecordTracksMinimum) {
    const auto p = toy(1.0);
    auto record = std::make_shared<FeasibleRecord>();
    Objective f = make_penalized_objective(p, record);
    f.evaluate(std::vector{3.0});
    EXPECT_FALSE(record->found);
    f.evaluate(std::vector{-2.0});
    f.evaluate(std::vector{-1.0});
    EXPECT_TRUE(record->found);
    EXPECT_EQ(record->x, (Vector{-2.0}));
    EXPECT_EQ(record->cost, 5.0);
}
