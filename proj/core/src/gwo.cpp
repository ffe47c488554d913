#include "heokit/baselines.hpp"
#include "heokit/random.hpp"

#include "run_recorder.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace heokit::baselines {

namespace {

struct Leader {
    Vector x;
    double cost = std::numeric_limits<double>::infinity();
};

// Keeps alpha <= beta <= delta by cost. A candidate equal to an existing
// leader's cost does not displace it.
void offer(std::array<Leader, 3>& leaders, const Vector& x, double cost) {
    if (cost < leaders[0].cost) {
        leaders[2] = std::move(leaders[1]);
        leaders[1] = std::move(leaders[0]);
        leaders[0] = {x, cost};
    } else if (cost < leaders[1].cost) {
        leaders[2] = std::move(leaders[1]);
        leaders[1] = {x, cost};
    } else if (cost < leaders[2].cost) {
        leaders[2] = {x, cost};
    }
}

}  // namespace

RunResult gwo_run(Objective& objective, const RunConfig& config,
                  const IterationObserver& observer) {
    config.validate();
    detail::RunRecorder recorder(objective, config.iterations, config.record_history);
    RandomStream rng(config.seed);
    const SearchSpace& space = objective.space();
    const std::size_t n = config.population;
    const std::size_t p = space.dim();

    std::vector<Vector> x(n);
    std::array<Leader, 3> leaders;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = sample_uniform(space, rng);
        offer(leaders, x[i], objective.evaluate(x[i]));
    }
    // With fewer than three distinct costs the lower leaders stay unset;
    // they then follow alpha.
    for (std::size_t k = 1; k < 3; ++k) {
        if (leaders[k].x.empty()) {
            leaders[k] = leaders[k - 1];
        }
    }

    std::array<double, 3> leader_costs{};
    for (std::size_t it = 0; it < config.iterations; ++it) {
        const double a = 2.0 * (1.0 - static_cast<double>(it) / static_cast<double>(config.iterations));
        // Leaders are refreshed after the sweep so every wolf follows the
        // same alpha, beta and delta within one iteration.
        std::array<Leader, 3> next = leaders;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
                double sum = 0.0;
                for (const Leader& leader : leaders) {
                    const double big_a = 2.0 * a * rng.uniform01() - a;
                    const double big_c = 2.0 * rng.uniform01();
                    const double dist = std::abs(big_c * leader.x[j] - x[i][j]);
                    sum += leader.x[j] - big_a * dist;
                }
                x[i][j] = sum / 3.0;
            }
            clamp_in_place(x[i], space);
            offer(next, x[i], objective.evaluate(x[i]));
        }
        leaders = std::move(next);

        recorder.record(leaders[0].cost);
        if (observer) {
            for (std::size_t k = 0; k < 3; ++k) {
                leader_costs[k] = leaders[k].cost;
            }
            observer(IterationView{it + 1, x, leaders[0].cost, leader_costs});
        }
    }
    return recorder.finish(leaders[0].x, leaders[0].cost, objective);
}

}  // namespace heokit::baselines
