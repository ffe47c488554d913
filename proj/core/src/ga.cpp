#include "heokit/baselines.hpp"
#include "heokit/random.hpp"

#include "run_recorder.hpp"

#include <algorithm>
#include <stdexcept>

namespace heokit::baselines {

void GaParams::validate() const {
    if (tournament_size < 1) {
        throw std::invalid_argument("GA tournament size must be at least 1");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        throw std::invalid_argument("GA crossover rate must lie in [0, 1]");
    }
    if (!(mutation_rate < 0.0 || mutation_rate <= 1.0)) {
        throw std::invalid_argument("GA mutation rate must lie in [0, 1]");
    }
    if (!(mutation_scale >= 0.0 && mutation_scale <= 1.0)) {
        throw std::invalid_argument("GA mutation scale must lie in [0, 1]");
    }
}

namespace {

std::size_t tournament(std::span<const double> cost, std::size_t size, RandomStream& rng) {
    std::size_t winner = rng.below(cost.size());
    for (std::size_t k = 1; k < size; ++k) {
        const std::size_t challenger = rng.below(cost.size());
        if (cost[challenger] < cost[winner]) {
            winner = challenger;
        }
    }
    return winner;
}

}  // namespace

RunResult ga_run(Objective& objective, const RunConfig& config, const GaParams& params,
                 const IterationObserver& observer) {
    config.validate();
    params.validate();
    detail::RunRecorder recorder(objective, config.iterations, config.record_history);
    RandomStream rng(config.seed);
    const SearchSpace& space = objective.space();
    const std::size_t n = config.population;
    const std::size_t p = space.dim();
    const double rate = params.mutation_rate < 0.0 ? 1.0 / static_cast<double>(p)
                                                   : params.mutation_rate;

    std::vector<Vector> pop(n);
    std::vector<double> cost(n);
    for (std::size_t i = 0; i < n; ++i) {
        pop[i] = sample_uniform(space, rng);
        cost[i] = objective.evaluate(pop[i]);
    }

    std::vector<Vector> next(n);
    std::vector<double> next_cost(n);
    for (std::size_t it = 0; it < config.iterations; ++it) {
        const auto elite = static_cast<std::size_t>(
            std::min_element(cost.begin(), cost.end()) - cost.begin());
        next[0] = pop[elite];
        next_cost[0] = cost[elite];

        for (std::size_t i = 1; i < n; ++i) {
            const Vector& a = pop[tournament(cost, params.tournament_size, rng)];
            const Vector& b = pop[tournament(cost, params.tournament_size, rng)];
            Vector child = a;
            if (rng.uniform01() < params.crossover_rate) {
                for (std::size_t j = 0; j < p; ++j) {
                    if (rng.coin()) {
                        child[j] = b[j];
                    }
                }
            }
            for (std::size_t j = 0; j < p; ++j) {
                if (rng.uniform01() < rate) {
                    child[j] += rng.normal(0.0, params.mutation_scale * space.range(j));
                }
            }
            clamp_in_place(child, space);
            next_cost[i] = objective.evaluate(child);
            next[i] = std::move(child);
        }
        std::swap(pop, next);
        std::swap(cost, next_cost);

        const double best_cost = *std::min_element(cost.begin(), cost.end());
        recorder.record(best_cost);
        if (observer) {
            observer(IterationView{it + 1, pop, best_cost, {}});
        }
    }
    const auto best = static_cast<std::size_t>(
        std::min_element(cost.begin(), cost.end()) - cost.begin());
    return recorder.finish(pop[best], cost[best], objective);
}

}  // namespace heokit::baselines
