#pragma once

// Reference optimizers used in the comparison tables. Each follows the
// textbook form of the method; none of them is tuned for these benchmarks.

#include "heokit/objective.hpp"
#include "heokit/run.hpp"

namespace heokit::baselines {

/// Global-best particle swarm.
struct PsoParams {
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    /// Maximum speed per dimension as a fraction of that dimension's range.
    double velocity_clamp = 0.5;

    void validate() const;
};

/// Real-coded genetic algorithm with one elite.
struct GaParams {
    std::size_t tournament_size = 3;
    double crossover_rate = 0.9;
    /// Per-gene mutation probability; a negative value means 1 / dim.
    double mutation_rate = -1.0;
    /// Mutation standard deviation as a fraction of the dimension's range.
    double mutation_scale = 0.1;

    void validate() const;
};

/// Quantum-behaved particle swarm; the contraction-expansion coefficient
/// moves linearly from beta_start to beta_end over the run.
struct QpsoParams {
    double beta_start = 1.0;
    double beta_end = 0.5;

    void validate() const;
};

RunResult pso_run(Objective& objective, const RunConfig& config, const PsoParams& params = {},
                  const IterationObserver& observer = {});

/// Grey wolf optimizer; the control scalar decreases linearly from 2 to 0.
/// The observer's leader_costs carry f(alpha) <= f(beta) <= f(delta).
RunResult gwo_run(Objective& objective, const RunConfig& config,
                  const IterationObserver& observer = {});

RunResult ga_run(Objective& objective, const RunConfig& config, const GaParams& params = {},
                 const IterationObserver& observer = {});

RunResult qpso_run(Objective& objective, const RunConfig& config, const QpsoParams& params = {},
                   const IterationObserver& observer = {});

}  // namespace heokit::baselines
