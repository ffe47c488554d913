#pragma once

#include "heokit/objective.hpp"
#include "heokit/run.hpp"
#include "heokit/search_space.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace heokit::constrained {

/// g(x) <= 0 means satisfied.
using Constraint = std::function<double(std::span<const double>)>;

inline constexpr double default_penalty = 1e7;
inline constexpr double feasibility_tolerance = 1e-9;

struct ConstrainedProblem {
    std::string name;
    SearchSpace space;
    CostFunction objective;
    std::vector<Constraint> constraints;
    double penalty_coefficient = default_penalty;
};

std::vector<double> constraint_values(const ConstrainedProblem& problem, std::span<const double> x);

/// rho * sum_k max(0, g_k(x))^2
double penalty(const ConstrainedProblem& problem, std::span<const double> x);

/// objective(x) + penalty(x); equals objective(x) exactly on the feasible set.
double penalized(const ConstrainedProblem& problem, std::span<const double> x);

bool feasible(const ConstrainedProblem& problem, std::span<const double> x,
              double tolerance = feasibility_tolerance);

enum class VesselFormulation {
    /// The cost, constraints and ranges exactly as published with the
    /// benchmark study (x1, x2 in [0.00625, 1.25]; x3, x4 in [40, 200]).
    printed,
    /// The usual literature form: x = (Ts, Th, R, L), Ts, Th in
    /// [0.0625, 6.1875], R, L in [10, 200]. For sanity experiments only.
    canonical,
};

ConstrainedProblem pressure_vessel(VesselFormulation formulation = VesselFormulation::printed);

struct TubularColumnParams {
    double load = 2300.0;          // P, kgf
    double yield_stress = 450.0;   // kgf/cm^2
    double elasticity = 0.65e6;    // E, kgf/cm^2
    double length = 300.0;         // L, cm
};

/// x = (d, t): mean diameter and wall thickness in cm.
ConstrainedProblem tubular_column(const TubularColumnParams& params = {});

/// Looks up "pressure_vessel", "pressure_vessel_canonical" or "tubular_column".
std::optional<ConstrainedProblem> find_problem(std::string_view name);
std::vector<std::string> problem_names();

/// Best strictly feasible point seen through a penalized objective.
struct FeasibleRecord {
    bool found = false;
    Vector x;
    double cost = 0.0;
};

/// Penalized objective that also records the best feasible point evaluated
/// into `record` (when non-null).
Objective make_penalized_objective(const ConstrainedProblem& problem,
                                   std::shared_ptr<FeasibleRecord> record = nullptr);

struct Solution {
    Vector x;
    double cost = 0.0;  // raw objective, no penalty
    bool feasible = false;
    std::vector<double> constraint_values;
};

using Optimizer = std::function<RunResult(Objective&)>;

/// Runs `optimize` on the penalized problem and reports the best feasible
/// point it evaluated; falls back to the optimizer's best when none was.
Solution solve(const ConstrainedProblem& problem, const Optimizer& optimize);

Solution describe(const ConstrainedProblem& problem, std::span<const double> x);

void to_json(nlohmann::json& j, const Solution& s);

}  // namespace heokit::constrained
