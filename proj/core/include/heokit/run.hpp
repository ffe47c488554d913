#pragma once

#include "heokit/search_space.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace heokit {

struct RunConfig {
    std::size_t population = 100;
    std::size_t iterations = 1000;
    std::uint64_t seed = 0;
    bool record_history = true;

    /// Throws std::invalid_argument unless population >= 2 and iterations >= 1.
    void validate() const;
};

struct RunResult {
    Vector best_position;
    double best_cost = 0.0;
    /// Best cost so far after each iteration; nonincreasing, one entry per iteration.
    std::optional<std::vector<double>> history;
    std::uint64_t evaluations = 0;
    double wall_time_seconds = 0.0;
};

/// Snapshot handed to an observer at the end of every iteration.
struct IterationView {
    std::size_t iteration = 0;  // 1-based
    std::span<const Vector> positions;
    double best_cost = 0.0;
    /// Grey wolf leaders (alpha, beta, delta); empty for other algorithms.
    std::span<const double> leader_costs;
};

using IterationObserver = std::function<void(const IterationView&)>;

}  // namespace heokit
