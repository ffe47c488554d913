#pragma once

// Halfway Escape Optimization.
//
// Each swarm member ("quantum") moves to a randomized blend of the global and
// its own best positions, reflected away from them in proportion to a
// swarm-wide escape counter. Non-improving members vibrate with a Gaussian
// step whose size follows the spread of their own coordinates, damped by a
// per-member energy level. Every member is then clipped into a box around the
// global best, and the whole swarm jumps halfway to a random point once the
// escape counter exceeds its trigger.
//
// The kernels below come in two flavours: one taking explicit random draws
// (used by tests to pin a single step) and one drawing from a RandomStream.

#include "heokit/objective.hpp"
#include "heokit/random.hpp"
#include "heokit/run.hpp"
#include "heokit/search_space.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace heokit::heo {

/// Which inequality lets a member's energy level grow.
enum class EnergyGuard {
    /// a * r4 < (a_max - 1) / 2, as in the pseudocode.
    halved_ceiling,
    /// a * r4 < a_max, the closed-form update rule.
    ceiling,
};

struct Params {
    std::size_t population = 100;
    std::size_t iterations = 1000;
    unsigned energy_ceiling = 10;  // a_max
    unsigned skip_trigger = 5;     // c_max
    double escape_spread = 0.5;    // R, r1 ~ U(1 - R, 1 + R)
    EnergyGuard energy_guard = EnergyGuard::halved_ceiling;
    /// Draw skip targets from U(lower, upper) instead of U(0, half side).
    bool skip_symmetric = false;

    void validate() const;
};

struct Quantum {
    Vector position;
    unsigned energy = 0;
    Vector local_best_position;
    double local_best_cost = 0.0;
};

struct SwarmState {
    std::vector<Quantum> quantums;
    Vector global_best_position;
    double global_best_cost = 0.0;
    std::uint64_t escape_counter = 0;
    std::size_t iteration = 0;
};

struct PositionDraws {
    double r1 = 1.0;  // escape magnitude
    double r2 = 1.0;  // step jitter
    double r3 = 0.5;  // global vs local weight
};

PositionDraws draw_position_factors(const Params& params, RandomStream& rng);

/// x + (x_g - x(c+1)r1) r2 r3 + (x_l - x(c+1)r1) r2 (1 - r3), with c the
/// swarm's escape counter.
Vector position_update(const Quantum& q, const SwarmState& state, const PositionDraws& draws);
Vector position_update(const Quantum& q, const SwarmState& state, const Params& params,
                       RandomStream& rng);

/// Population standard deviation of the components of x.
double component_spread(std::span<const double> x);

/// 1 / (1 + e^energy).
double vibration_scale(unsigned energy);

/// position + n / (1 + e^energy), n_j ~ N(0, component_spread(position)).
Vector vibrate(const Quantum& q, RandomStream& rng);

/// Clips x into the cube of half side |x - center| * r5 around center, then
/// into the search space.
Vector center_clip(std::span<const double> x, std::span<const double> center,
                   const SearchSpace& space, double r5);
Vector center_clip(std::span<const double> x, const SwarmState& state, const SearchSpace& space,
                   RandomStream& rng);

/// Moves every member halfway towards its offset, (x + r) / 2, clamps the
/// result into the space, and resets the escape counter. Bests are kept.
/// Throws std::invalid_argument unless there is one offset per member.
void random_skip(SwarmState& state, const SearchSpace& space, std::span<const Vector> offsets);
void random_skip(SwarmState& state, const SearchSpace& space, const Params& params,
                 RandomStream& rng);

/// Increments energy when the guard holds for the given r4; returns whether it did.
bool energy_tick(Quantum& q, const Params& params, double r4);
bool energy_tick(Quantum& q, const Params& params, RandomStream& rng);

SwarmState init_swarm(const Params& params, Objective& objective, RandomStream& rng);

/// Builds a swarm from explicit starting positions (each evaluated once).
SwarmState init_swarm(std::vector<Vector> positions, Objective& objective);

/// One full iteration over the swarm, members processed in order.
void step(SwarmState& state, Objective& objective, const Params& params, RandomStream& rng);

RunResult run(Objective& objective, const Params& params, std::uint64_t seed,
              bool record_history = true, const IterationObserver& observer = {});

}  // namespace heokit::heo
