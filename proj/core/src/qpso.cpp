#include "heokit/baselines.hpp"
#include "heokit/random.hpp"

#include "run_recorder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace heokit::baselines {

void QpsoParams::validate() const {
    if (!(beta_start > 0.0 && beta_end > 0.0)) {
        throw std::invalid_argument("QPSO contraction-expansion coefficients must be positive");
    }
}

RunResult qpso_run(Objective& objective, const RunConfig& config, const QpsoParams& params,
                   const IterationObserver& observer) {
    config.validate();
    params.validate();
    detail::RunRecorder recorder(objective, config.iterations, config.record_history);
    RandomStream rng(config.seed);
    const SearchSpace& space = objective.space();
    const std::size_t n = config.population;
    const std::size_t p = space.dim();

    std::vector<Vector> x(n);
    std::vector<Vector> pbest(n);
    std::vector<double> pbest_cost(n);
    std::size_t g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = sample_uniform(space, rng);
        pbest[i] = x[i];
        pbest_cost[i] = objective.evaluate(x[i]);
        if (pbest_cost[i] < pbest_cost[g]) {
            g = i;
        }
    }

    Vector mbest(p);
    for (std::size_t it = 0; it < config.iterations; ++it) {
        const double beta =
            params.beta_start + (params.beta_end - params.beta_start) *
                                    static_cast<double>(it) / static_cast<double>(config.iterations);
        std::fill(mbest.begin(), mbest.end(), 0.0);
        for (const Vector& pb : pbest) {
            for (std::size_t j = 0; j < p; ++j) {
                mbest[j] += pb[j];
            }
        }
        for (double& m : mbest) {
            m /= static_cast<double>(n);
        }

        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
                const double phi = rng.uniform01();
                const double attractor = phi * pbest[i][j] + (1.0 - phi) * pbest[g][j];
                // 1 - uniform01() lies in (0, 1], so the log stays finite.
                const double u = 1.0 - rng.uniform01();
                const double jump = beta * std::abs(mbest[j] - x[i][j]) * std::log(1.0 / u);
                x[i][j] = rng.coin() ? attractor + jump : attractor - jump;
            }
            clamp_in_place(x[i], space);
            const double cost = objective.evaluate(x[i]);
            if (cost < pbest_cost[i]) {
                pbest_cost[i] = cost;
                pbest[i] = x[i];
                if (cost < pbest_cost[g]) {
                    g = i;
                }
            }
        }
        recorder.record(pbest_cost[g]);
        if (observer) {
            observer(IterationView{it + 1, x, pbest_cost[g], {}});
        }
    }
    return recorder.finish(pbest[g], pbest_cost[g], objective);
}

}  // namespace heokit::baselines
