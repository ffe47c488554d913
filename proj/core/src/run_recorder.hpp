#pragma once

#include "heokit/objective.hpp"
#include "heokit/run.hpp"

#include <chrono>
#include <cstdint>
#include <vector>

namespace heokit::detail {

// Shared bookkeeping for the population optimizers: wall clock, evaluation
// count, and the best-so-far history.
class RunRecorder {
public:
    RunRecorder(const Objective& objective, std::size_t iterations, bool record_history)
        : start_(std::chrono::steady_clock::now()),
          first_eval_(objective.eval_count()),
          record_(record_history) {
        if (record_) {
            history_.reserve(iterations);
        }
    }

    void record(double best_cost) {
        if (record_) {
            history_.push_back(best_cost);
        }
    }

    RunResult finish(Vector best_position, double best_cost, const Objective& objective) {
        RunResult result;
        result.best_position = std::move(best_position);
        result.best_cost = best_cost;
        if (record_) {
            result.history = std::move(history_);
        }
        result.evaluations = objective.eval_count() - first_eval_;
        result.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result;
    }

private:
    std::chrono::steady_clock::time_point start_;
    std::uint64_t first_eval_;
    bool record_;
    std::vector<double> history_;
};

}  // namespace heokit::detail
