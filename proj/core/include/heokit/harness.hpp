#pragma once

#include "heokit/baselines.hpp"
#include "heokit/heo.hpp"
#include "heokit/objective.hpp"
#include "heokit/run.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heokit::harness {

/// Unknown algorithm or problem name, bad plan values.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Per-algorithm settings. Population and iteration counts always come from
/// the RunConfig, including for HEO.
struct AlgorithmSettings {
    heo::Params heo;
    baselines::PsoParams pso;
    baselines::GaParams ga;
    baselines::QpsoParams qpso;
};

/// "heo", "pso", "gwo", "ga", "qpso".
const std::vector<std::string>& algorithm_names();

bool is_algorithm(std::string_view name);

/// Throws ConfigError listing the valid names when `name` is unknown.
RunResult run_algorithm(std::string_view name, Objective& objective, const RunConfig& config,
                        const AlgorithmSettings& settings = {},
                        const IterationObserver& observer = {});

/// Benchmark names first, then constrained problem names.
std::vector<std::string> problem_names();

/// Benchmark functions use their default space at `dim`; constrained
/// problems ignore `dim` and use the penalized cost.
Objective make_problem(std::string_view name, std::size_t dim);

struct ProblemRef {
    std::string name;
    std::size_t dim = 30;
};

struct ExperimentPlan {
    std::vector<std::string> algorithms;
    std::vector<ProblemRef> problems;
    std::size_t repetitions = 30;
    std::uint64_t base_seed = 0;
    std::size_t population = 100;
    std::size_t iterations = 1000;
    AlgorithmSettings settings;
    bool record_history = false;
    /// Upper bound on concurrently executing runs.
    std::size_t jobs = 1;

    /// Seed of repetition r: base_seed + r.
    std::uint64_t seed_for(std::size_t repetition) const noexcept { return base_seed + repetition; }

    void validate() const;
};

struct Cell {
    std::vector<double> costs;
    std::vector<double> times;  // seconds per run
    std::vector<std::vector<double>> histories;
    double mean_cost = 0.0;
    double std_cost = 0.0;  // population standard deviation
    double mean_time_seconds = 0.0;
    std::size_t iterations = 0;

    /// Mean wall time scaled to 1000 iterations.
    double time_per_1000_iterations() const noexcept;

    /// Recomputes mean/std/time from the stored runs.
    void summarize();
};

/// Rows are problems, columns algorithms.
class ResultTable {
public:
    ResultTable() = default;
    ResultTable(std::vector<std::string> rows, std::vector<std::string> columns);

    const std::vector<std::string>& rows() const noexcept { return rows_; }
    const std::vector<std::string>& columns() const noexcept { return columns_; }

    Cell& at(std::size_t row, std::size_t column);
    const Cell& at(std::size_t row, std::size_t column) const;
    /// Throws std::out_of_range for unknown labels.
    const Cell& at(std::string_view row, std::string_view column) const;

    std::size_t row_index(std::string_view row) const;
    std::size_t column_index(std::string_view column) const;

private:
    std::vector<std::string> rows_;
    std::vector<std::string> columns_;
    std::vector<Cell> cells_;
};

/// Runs repetitions x problems x algorithms. Results do not depend on `jobs`
/// or completion order.
ResultTable run_experiment(const ExperimentPlan& plan);

/// Dense ranks of `costs`, 1 = lowest; equal costs share a rank and the next
/// distinct cost gets the following integer.
std::vector<int> dense_ranks(std::span<const double> costs);

struct RankSummary {
    std::vector<std::string> algorithms;
    std::vector<long> rank_sums;
    std::size_t row_count = 0;

    double average(std::size_t column) const;
    /// Average truncated (not rounded) to four decimals, e.g. "2.1428".
    std::string formatted(std::size_t column) const;
};

/// Ranks every row in `rows` by mean cost and averages the ranks per
/// algorithm. Throws std::invalid_argument on an empty or unknown row set.
RankSummary dense_rank_aggregate(const ResultTable& table, std::span<const std::string> rows);
RankSummary dense_rank_aggregate(const ResultTable& table);

/// Mean costs of the published comparison (rows F1..F14; columns PSO, AFSA,
/// GWO, HEO, GA, QPSO) as printed.
ResultTable table3_fixture();

// Serialization. CSV header: problem,algorithm,mean,std,time_s (time_s is
// seconds per 1000 iterations). Numbers are written with 17 significant
// digits so a round trip is exact.
void write_csv(const ResultTable& table, std::ostream& out);
void write_json(const ResultTable& table, std::ostream& out);
nlohmann::ordered_json to_json(const ResultTable& table);
/// Long form: problem,algorithm,run,iteration,best_cost.
void write_history_csv(const ResultTable& table, std::ostream& out);

ResultTable read_csv(std::istream& in);
ResultTable read_json(std::istream& in);

enum class Format { csv, json };

/// Throws std::runtime_error when the file cannot be written.
void export_table(const ResultTable& table, Format format, const std::filesystem::path& path);
void export_history(const ResultTable& table, const std::filesystem::path& path);
/// Format chosen by extension (.json, else CSV).
ResultTable import_table(const std::filesystem::path& path);

}  // namespace heokit::harness
