#include "heokit/constrained.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace heokit::constrained {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

std::vector<double> constraint_values(const ConstrainedProblem& problem, std::span<const double> x) {
    std::vector<double> g;
    g.reserve(problem.constraints.size());
    for (const Constraint& c : problem.constraints) {
        g.push_back(c(x));
    }
    return g;
}

double penalty(const ConstrainedProblem& problem, std::span<const double> x) {
    double sum = 0.0;
    for (const Constraint& c : problem.constraints) {
        const double v = std::max(0.0, c(x));
        sum += v * v;
    }
    return problem.penalty_coefficient * sum;
}

double penalized(const ConstrainedProblem& problem, std::span<const double> x) {
    const double f = problem.objective(x);
    const double p = penalty(problem, x);
    return p == 0.0 ? f : f + p;
}

bool feasible(const ConstrainedProblem& problem, std::span<const double> x, double tolerance) {
    for (const Constraint& c : problem.constraints) {
        const double g = c(x);
        if (!(g <= tolerance)) {
            return false;
        }
    }
    return true;
}

ConstrainedProblem pressure_vessel(VesselFormulation formulation) {
    ConstrainedProblem problem{
        .name = "pressure_vessel",
        .space = SearchSpace({0.00625, 0.00625, 40.0, 40.0}, {1.25, 1.25, 200.0, 200.0}),
        .objective = [](std::span<const double> x) {
            return 0.6224 * x[0] * x[1] * x[2] + 1.7781 * x[0] * x[0] * x[2] +
                   3.1161 * x[1] * x[3] * x[3] + 19.84 * x[3] * x[0] * x[0];
        },
        .constraints = {
            [](std::span<const double> x) { return -x[0] + 0.0193 * x[2]; },
            // As published: both terms use x3, so g2 < 0 on the whole box.
            [](std::span<const double> x) { return -x[2] + 0.000954 * x[2]; },
            [](std::span<const double> x) {
                return -pi * x[2] * x[2] * x[3] + 4.0 / 3.0 * pi * x[2] * x[2] * x[2] + 1296000.0;
            },
            [](std::span<const double> x) { return x[3] - 240.0; },
        },
    };
    if (formulation == VesselFormulation::printed) {
        return problem;
    }

    // x = (Ts, Th, R, L)
    problem.name = "pressure_vessel_canonical";
    problem.space = SearchSpace({0.0625, 0.0625, 10.0, 10.0}, {6.1875, 6.1875, 200.0, 200.0});
    problem.objective = [](std::span<const double> x) {
        return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] * x[2] +
               3.1661 * x[0] * x[0] * x[3] + 19.84 * x[0] * x[0] * x[2];
    };
    problem.constraints = {
        [](std::span<const double> x) { return -x[0] + 0.0193 * x[2]; },
        [](std::span<const double> x) { return -x[1] + 0.00954 * x[2]; },
        [](std::span<const double> x) {
            return -pi * x[2] * x[2] * x[3] - 4.0 / 3.0 * pi * x[2] * x[2] * x[2] + 1296000.0;
        },
        [](std::span<const double> x) { return x[3] - 240.0; },
    };
    return problem;
}

ConstrainedProblem tubular_column(const TubularColumnParams& params) {
    if (!(params.load > 0.0 && params.yield_stress > 0.0 && params.elasticity > 0.0 &&
          params.length > 0.0)) {
        throw std::invalid_argument("tubular column constants must be positive");
    }
    const double p = params.load;
    const double sy = params.yield_stress;
    const double e = params.elasticity;
    const double l = params.length;
    return ConstrainedProblem{
        .name = "tubular_column",
        .space = SearchSpace({2.0, 0.2}, {14.0, 0.8}),
        .objective = [](std::span<const double> x) { return 9.8 * x[0] * x[1] + 2.0 * x[0]; },
        .constraints = {
            [=](std::span<const double> x) { return p / (pi * x[0] * x[1] * sy) - 1.0; },
            [=](std::span<const double> x) {
                return 8.0 * p * l * l /
                           (pi * pi * pi * e * x[0] * x[1] * (x[0] * x[0] + x[1] * x[1])) -
                       1.0;
            },
            [](std::span<const double> x) { return 2.0 / x[0] - 1.0; },
            [](std::span<const double> x) { return x[0] / 14.0 - 1.0; },
            [](std::span<const double> x) { return 0.2 / x[1] - 1.0; },
            [](std::span<const double> x) { return x[1] / 8.0 - 1.0; },
        },
    };
}

std::optional<ConstrainedProblem> find_problem(std::string_view name) {
    if (name == "pressure_vessel") {
        return pressure_vessel(VesselFormulation::printed);
    }
    if (name == "pressure_vessel_canonical") {
        return pressure_vessel(VesselFormulation::canonical);
    }
    if (name == "tubular_column") {
        return tubular_column();
    }
    return std::nullopt;
}

std::vector<std::string> problem_names() {
    return {"pressure_vessel", "pressure_vessel_canonical", "tubular_column"};
}

Objective make_penalized_objective(const ConstrainedProblem& problem,
                                   std::shared_ptr<FeasibleRecord> record) {
    return Objective(problem.name, problem.space,
                     [problem, record](std::span<const double> x) {
                         const double f = problem.objective(x);
                         const double p = penalty(problem, x);
                         if (record && feasible(problem, x) && !std::isnan(f) &&
                             (!record->found || f < record->cost)) {
                             record->found = true;
                             record->x.assign(x.begin(), x.end());
                             record->cost = f;
                         }
                         return p == 0.0 ? f : f + p;
                     });
}

Solution describe(const ConstrainedProblem& problem, std::span<const double> x) {
    Solution s;
    s.x.assign(x.begin(), x.end());
    s.cost = problem.objective(x);
    s.constraint_values = constraint_values(problem, x);
    s.feasible = feasible(problem, x);
    return s;
}

Solution solve(const ConstrainedProblem& problem, const Optimizer& optimize) {
    auto record = std::make_shared<FeasibleRecord>();
    Objective objective = make_penalized_objective(problem, record);
    const RunResult result = optimize(objective);
    if (record->found) {
        return describe(problem, record->x);
    }
    return describe(problem, result.best_position);
}

void to_json(nlohmann::json& j, const Solution& s) {
    j = nlohmann::json{{"x", s.x},
                       {"cost", s.cost},
                       {"feasible", s.feasible},
                       {"constraint_values", s.constraint_values}};
}

}  // namespace heokit::constrained
