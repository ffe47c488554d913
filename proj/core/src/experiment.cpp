#include "heokit/harness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace heokit::harness {

void ExperimentPlan::validate() const {
    if (algorithms.empty() || problems.empty()) {
        throw ConfigError("experiment needs at least one algorithm and one problem");
    }
    if (repetitions < 1) {
        throw ConfigError("repetitions must be at least 1");
    }
    if (jobs < 1) {
        throw ConfigError("jobs must be at least 1");
    }
    try {
        RunConfig{population, iterations, base_seed, record_history}.validate();
        heo::Params p = settings.heo;
        p.population = population;
        p.iterations = iterations;
        p.validate();
        settings.pso.validate();
        settings.ga.validate();
        settings.qpso.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    std::set<std::string> seen;
    for (const std::string& a : algorithms) {
        if (!is_algorithm(a)) {
            std::string valid;
            for (const std::string& n : algorithm_names()) {
                valid += valid.empty() ? n : ", " + n;
            }
            throw ConfigError("unknown algorithm '" + a + "'; valid names: " + valid);
        }
        if (!seen.insert(a).second) {
            throw ConfigError("algorithm '" + a + "' listed twice");
        }
    }
    seen.clear();
    for (const ProblemRef& p : problems) {
        make_problem(p.name, p.dim);
        if (!seen.insert(p.name).second) {
            throw ConfigError("problem '" + p.name + "' listed twice");
        }
    }
}

double Cell::time_per_1000_iterations() const noexcept {
    return iterations == 0 ? 0.0 : mean_time_seconds * 1000.0 / static_cast<double>(iterations);
}

void Cell::summarize() {
    if (costs.empty()) {
        mean_cost = std_cost = mean_time_seconds = 0.0;
        return;
    }
    const double n = static_cast<double>(costs.size());
    double sum = 0.0;
    for (double c : costs) {
        sum += c;
    }
    mean_cost = sum / n;
    double ss = 0.0;
    for (double c : costs) {
        ss += (c - mean_cost) * (c - mean_cost);
    }
    std_cost = std::sqrt(ss / n);
    double t = 0.0;
    for (double s : times) {
        t += s;
    }
    mean_time_seconds = times.empty() ? 0.0 : t / static_cast<double>(times.size());
}

ResultTable::ResultTable(std::vector<std::string> rows, std::vector<std::string> columns)
    : rows_(std::move(rows)), columns_(std::move(columns)), cells_(rows_.size() * columns_.size()) {}

Cell& ResultTable::at(std::size_t row, std::size_t column) {
    if (row >= rows_.size() || column >= columns_.size()) {
        throw std::out_of_range("result table index out of range");
    }
    return cells_[row * columns_.size() + column];
}

const Cell& ResultTable::at(std::size_t row, std::size_t column) const {
    return const_cast<ResultTable*>(this)->at(row, column);
}

const Cell& ResultTable::at(std::string_view row, std::string_view column) const {
    return at(row_index(row), column_index(column));
}

std::size_t ResultTable::row_index(std::string_view row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] == row) {
            return i;
        }
    }
    throw std::out_of_range("no row '" + std::string(row) + "'");
}

std::size_t ResultTable::column_index(std::string_view column) const {
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j] == column) {
            return j;
        }
    }
    throw std::out_of_range("no column '" + std::string(column) + "'");
}

ResultTable run_experiment(const ExperimentPlan& plan) {
    plan.validate();
    std::vector<std::string> rows;
    for (const ProblemRef& p : plan.problems) {
        rows.push_back(p.name);
    }
    ResultTable table(rows, plan.algorithms);

    const std::size_t n_alg = plan.algorithms.size();
    const std::size_t reps = plan.repetitions;
    const std::size_t total = plan.problems.size() * n_alg * reps;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n_alg; ++j) {
            Cell& cell = table.at(i, j);
            cell.costs.assign(reps, 0.0);
            cell.times.assign(reps, 0.0);
            if (plan.record_history) {
                cell.histories.assign(reps, {});
            }
            cell.iterations = plan.iterations;
        }
    }

    // Each task writes only its own preallocated slot, so the table does
    // not depend on scheduling.
    auto run_task = [&](std::size_t task) {
        const std::size_t r = task % reps;
        const std::size_t j = (task / reps) % n_alg;
        const std::size_t i = task / (reps * n_alg);
        Objective objective = make_problem(plan.problems[i].name, plan.problems[i].dim);
        const RunConfig config{plan.population, plan.iterations, plan.seed_for(r),
                               plan.record_history};
        RunResult result = run_algorithm(plan.algorithms[j], objective, config, plan.settings);
        Cell& cell = table.at(i, j);
        cell.costs[r] = result.best_cost;
        cell.times[r] = result.wall_time_seconds;
        if (plan.record_history && result.history) {
            cell.histories[r] = std::move(*result.history);
        }
    };

    const std::size_t workers = std::min(plan.jobs, total);
    if (workers <= 1) {
        for (std::size_t t = 0; t < total; ++t) {
            run_task(t);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < total; t = next++) {
                    try {
                        run_task(t);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        next = total;
                    }
                }
            });
        }
        for (std::thread& th : pool) {
            th.join();
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n_alg; ++j) {
            table.at(i, j).summarize();
        }
    }
    return table;
}

}  // namespace heokit::harness
