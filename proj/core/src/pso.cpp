#include "heokit/baselines.hpp"
#include "heokit/random.hpp"

#include "run_recorder.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace heokit::baselines {

void PsoParams::validate() const {
    if (!(inertia >= 0.0 && cognitive >= 0.0 && social >= 0.0)) {
        throw std::invalid_argument("PSO coefficients must be nonnegative");
    }
    if (!(velocity_clamp > 0.0 && velocity_clamp <= 1.0)) {
        throw std::invalid_argument("PSO velocity clamp must lie in (0, 1]");
    }
}

RunResult pso_run(Objective& objective, const RunConfig& config, const PsoParams& params,
                  const IterationObserver& observer) {
    config.validate();
    params.validate();
    detail::RunRecorder recorder(objective, config.iterations, config.record_history);
    RandomStream rng(config.seed);
    const SearchSpace& space = objective.space();
    const std::size_t n = config.population;
    const std::size_t p = space.dim();

    Vector vmax(p);
    for (std::size_t j = 0; j < p; ++j) {
        vmax[j] = params.velocity_clamp * space.range(j);
    }

    std::vector<Vector> x(n);
    std::vector<Vector> v(n, Vector(p));
    std::vector<Vector> pbest(n);
    std::vector<double> pbest_cost(n);
    Vector gbest;
    double gbest_cost = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < n; ++i) {
        x[i] = sample_uniform(space, rng);
        for (std::size_t j = 0; j < p; ++j) {
            v[i][j] = rng.uniform(-vmax[j], vmax[j]);
        }
        pbest[i] = x[i];
        pbest_cost[i] = objective.evaluate(x[i]);
        if (gbest.empty() || pbest_cost[i] < gbest_cost) {
            gbest = x[i];
            gbest_cost = pbest_cost[i];
        }
    }

    for (std::size_t it = 0; it < config.iterations; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
                const double u1 = rng.uniform01();
                const double u2 = rng.uniform01();
                double vel = params.inertia * v[i][j] +
                             params.cognitive * u1 * (pbest[i][j] - x[i][j]) +
                             params.social * u2 * (gbest[j] - x[i][j]);
                v[i][j] = std::clamp(vel, -vmax[j], vmax[j]);
                x[i][j] += v[i][j];
            }
            clamp_in_place(x[i], space);
            const double cost = objective.evaluate(x[i]);
            if (cost < pbest_cost[i]) {
                pbest_cost[i] = cost;
                pbest[i] = x[i];
                if (cost < gbest_cost) {
                    gbest_cost = cost;
                    gbest = x[i];
                }
            }
        }
        recorder.record(gbest_cost);
        if (observer) {
            observer(IterationView{it + 1, x, gbest_cost, {}});
        }
    }
    return recorder.finish(std::move(gbest), gbest_cost, objective);
}

}  // namespace heokit::baselines
