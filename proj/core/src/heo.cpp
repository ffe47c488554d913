#include "heokit/heo.hpp"

#include "run_recorder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace heokit::heo {

void Params::validate() const {
    if (population < 2) {
        throw std::invalid_argument("HEO population must be at least 2");
    }
    if (iterations < 1) {
        throw std::invalid_argument("HEO iterations must be at least 1");
    }
    if (energy_ceiling < 1) {
        throw std::invalid_argument("HEO energy ceiling (a_max) must be at least 1");
    }
    if (skip_trigger < 1) {
        throw std::invalid_argument("HEO skip trigger (c_max) must be at least 1");
    }
    if (!(escape_spread > 0.0 && escape_spread <= 1.0)) {
        throw std::invalid_argument("HEO escape spread R must lie in (0, 1]");
    }
}

PositionDraws draw_position_factors(const Params& params, RandomStream& rng) {
    PositionDraws draws;
    draws.r1 = rng.uniform(1.0 - params.escape_spread, 1.0 + params.escape_spread);
    draws.r2 = rng.uniform(0.5, 1.5);
    draws.r3 = rng.uniform(0.0, 1.0);
    return draws;
}

Vector position_update(const Quantum& q, const SwarmState& state, const PositionDraws& draws) {
    const std::size_t p = q.position.size();
    const double reflect = static_cast<double>(state.escape_counter + 1) * draws.r1;
    const double global_weight = draws.r2 * draws.r3;
    const double local_weight = draws.r2 * (1.0 - draws.r3);

    Vector next(p);
    for (std::size_t j = 0; j < p; ++j) {
        const double x = q.position[j];
        const double toward_global = (state.global_best_position[j] - x * reflect) * global_weight;
        const double toward_local = (q.local_best_position[j] - x * reflect) * local_weight;
        next[j] = x + toward_global + toward_local;
    }
    return next;
}

Vector position_update(const Quantum& q, const SwarmState& state, const Params& params,
                       RandomStream& rng) {
    return position_update(q, state, draw_position_factors(params, rng));
}

double component_spread(std::span<const double> x) {
    if (x.empty()) {
        return 0.0;
    }
    double mean = 0.0;
    for (double v : x) {
        mean += v;
    }
    mean /= static_cast<double>(x.size());
    double ss = 0.0;
    for (double v : x) {
        ss += (v - mean) * (v - mean);
    }
    return std::sqrt(ss / static_cast<double>(x.size()));
}

double vibration_scale(unsigned energy) {
    return 1.0 / (1.0 + std::exp(static_cast<double>(energy)));
}

Vector vibrate(const Quantum& q, RandomStream& rng) {
    const double sigma = component_spread(q.position);
    Vector next = q.position;
    if (sigma == 0.0) {
        return next;
    }
    const double scale = vibration_scale(q.energy);
    for (double& x : next) {
        x += rng.normal(0.0, sigma) * scale;
    }
    return next;
}

Vector center_clip(std::span<const double> x, std::span<const double> center,
                   const SearchSpace& space, double r5) {
    if (x.size() != center.size()) {
        throw std::invalid_argument("center_clip: position and center differ in length");
    }
    double dist2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[j] - center[j];
        dist2 += d * d;
    }
    const double half_side = std::sqrt(dist2) * r5;

    Vector out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = std::clamp(x[j], center[j] - half_side, center[j] + half_side);
    }
    clamp_in_place(out, space);
    return out;
}

Vector center_clip(std::span<const double> x, const SwarmState& state, const SearchSpace& space,
                   RandomStream& rng) {
    return center_clip(x, state.global_best_position, space, rng.uniform(0.0, 2.0));
}

void random_skip(SwarmState& state, const SearchSpace& space, std::span<const Vector> offsets) {
    if (offsets.size() != state.quantums.size()) {
        throw std::invalid_argument("random_skip: need one offset per quantum (" +
                                    std::to_string(state.quantums.size()) + "), got " +
                                    std::to_string(offsets.size()));
    }
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        Vector& x = state.quantums[i].position;
        const Vector& r = offsets[i];
        if (r.size() != x.size()) {
            throw std::invalid_argument("random_skip: offset dimension mismatch");
        }
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = 0.5 * (x[j] + r[j]);
        }
        clamp_in_place(x, space);
    }
    state.escape_counter = 0;
}

void random_skip(SwarmState& state, const SearchSpace& space, const Params& params,
                 RandomStream& rng) {
    std::vector<Vector> offsets(state.quantums.size(), Vector(space.dim()));
    for (Vector& r : offsets) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            r[j] = params.skip_symmetric ? rng.uniform(space.lower(j), space.upper(j))
                                         : rng.uniform(0.0, space.half_side(j));
        }
    }
    random_skip(state, space, offsets);
}

bool energy_tick(Quantum& q, const Params& params, double r4) {
    const double level = static_cast<double>(q.energy) * r4;
    const double threshold = params.energy_guard == EnergyGuard::halved_ceiling
                                 ? (static_cast<double>(params.energy_ceiling) - 1.0) / 2.0
                                 : static_cast<double>(params.energy_ceiling);
    if (level < threshold) {
        ++q.energy;
        return true;
    }
    return false;
}

bool energy_tick(Quantum& q, const Params& params, RandomStream& rng) {
    return energy_tick(q, params, rng.uniform(0.0, 1.0));
}

SwarmState init_swarm(std::vector<Vector> positions, Objective& objective) {
    if (positions.empty()) {
        throw std::invalid_argument("init_swarm: no positions");
    }
    SwarmState state;
    state.quantums.reserve(positions.size());
    for (Vector& x : positions) {
        Quantum q;
        q.local_best_cost = objective.evaluate(x);
        q.local_best_position = x;
        q.position = std::move(x);
        state.quantums.push_back(std::move(q));
    }
    const auto best = std::min_element(
        state.quantums.begin(), state.quantums.end(),
        [](const Quantum& a, const Quantum& b) { return a.local_best_cost < b.local_best_cost; });
    state.global_best_position = best->local_best_position;
    state.global_best_cost = best->local_best_cost;
    return state;
}

SwarmState init_swarm(const Params& params, Objective& objective, RandomStream& rng) {
    params.validate();
    std::vector<Vector> positions;
    positions.reserve(params.population);
    for (std::size_t i = 0; i < params.population; ++i) {
        positions.push_back(sample_uniform(objective.space(), rng));
    }
    return init_swarm(std::move(positions), objective);
}

void step(SwarmState& state, Objective& objective, const Params& params, RandomStream& rng) {
    const SearchSpace& space = objective.space();

    for (Quantum& q : state.quantums) {
        // Clamped before evaluation: costs outside the declared domain are
        // never recorded as bests.
        q.position = position_update(q, state, params, rng);
        clamp_in_place(q.position, space);

        const double cost = objective.evaluate(q.position);
        if (cost < state.global_best_cost) {
            state.global_best_cost = cost;
            state.global_best_position = q.position;
            state.escape_counter /= 2;
        } else if (cost < q.local_best_cost) {
            q.local_best_cost = cost;
            q.local_best_position = q.position;
            q.energy /= 2;
        } else {
            q.position = vibrate(q, rng);
        }
        q.position = center_clip(q.position, state, space, rng);
    }

    for (Quantum& q : state.quantums) {
        energy_tick(q, params, rng);
    }
    if (state.escape_counter > params.skip_trigger) {
        random_skip(state, space, params, rng);
    }
    ++state.escape_counter;
    ++state.iteration;
}

RunResult run(Objective& objective, const Params& params, std::uint64_t seed, bool record_history,
              const IterationObserver& observer) {
    params.validate();
    detail::RunRecorder recorder(objective, params.iterations, record_history);
    RandomStream rng(seed);

    SwarmState state = init_swarm(params, objective, rng);
    std::vector<Vector> positions;
    for (std::size_t it = 0; it < params.iterations; ++it) {
        step(state, objective, params, rng);
        recorder.record(state.global_best_cost);
        if (observer) {
            positions.clear();
            for (const Quantum& q : state.quantums) {
                positions.push_back(q.position);
            }
            observer(IterationView{it + 1, positions, state.global_best_cost, {}});
        }
    }
    return recorder.finish(state.global_best_position, state.global_best_cost, objective);
}

}  // namespace heokit::heo
