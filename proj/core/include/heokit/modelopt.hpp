#pragma once

// Hyperparameter tuning of a binary logistic-regression classifier: CSV
// ingestion, gradient-descent training, confusion-matrix metrics, and the
// validation-MSE objective over (C, max_iter) that the optimizers search.

#include "heokit/objective.hpp"
#include "heokit/run.hpp"
#include "heokit/search_space.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace heokit::modelopt {

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Dataset {
    std::vector<Vector> features;  // m rows of d values
    std::vector<int> labels;       // 0 or 1
    std::vector<std::string> feature_names;
    std::array<std::string, 2> class_names;  // label 0, label 1

    std::size_t rows() const noexcept { return labels.size(); }
    std::size_t cols() const noexcept { return feature_names.size(); }
    std::array<std::size_t, 2> class_counts() const;
};

/// Header row, numeric feature columns, class label in the last column. The
/// first class seen becomes label 0, the second label 1. Throws DataError
/// naming the offending line for malformed input, and when fewer or more
/// than two classes appear.
Dataset parse_csv(std::istream& in, const std::string& source = "<stream>");
Dataset load_csv(const std::filesystem::path& path);

/// Deterministic shuffled split; the test part has ceil(m * test_fraction) rows.
std::pair<Dataset, Dataset> train_test_split(const Dataset& data, double test_fraction,
                                             std::uint64_t seed);

/// Rows in `indices` order.
Dataset subset(const Dataset& data, std::span<const std::size_t> indices);

// Weights carry the bias at index 0. The training objective is the mean
// log-loss plus (1 / (2 C m)) * |w_1..d|^2 (bias unpenalized).
double loss(std::span<const double> weights, std::span<const Vector> x, std::span<const int> y,
            double c);
Vector gradient(std::span<const double> weights, std::span<const Vector> x,
                std::span<const int> y, double c);

struct LogisticModel {
    Vector weights;
    Vector feature_mean;
    Vector feature_scale;

    double predict_proba(std::span<const double> row) const;
    int predict(std::span<const double> row) const { return predict_proba(row) >= 0.5 ? 1 : 0; }
};

struct TrainOptions {
    double learning_rate = 0.1;
    /// When set, receives the training objective before the first step and
    /// after every step.
    std::vector<double>* loss_trace = nullptr;
};

/// Standardizes with training statistics, starts from zero weights and takes
/// exactly max_iter full-batch steps. Throws std::invalid_argument when
/// c <= 0, max_iter < 1 or the data is empty.
LogisticModel train(const Dataset& data, double c, int max_iter, const TrainOptions& options = {});

struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t tn = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;

    std::size_t total() const noexcept { return tp + tn + fp + fn; }
};

ConfusionMatrix confusion(const LogisticModel& model, const Dataset& data);

struct Metrics {
    double accuracy = 0.0;
    double sensitivity = 0.0;
    double specificity = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    /// Set when some ratio had a zero denominator and was reported as 0.
    bool undefined_ratio = false;
};

Metrics metrics(const ConfusionMatrix& cm);
Metrics metrics(const LogisticModel& model, const Dataset& test);

void to_json(nlohmann::json& j, const Metrics& m);

struct TuneBounds {
    double c_min = 1e-16;
    double c_max = 100.0;
    double iter_min = 1.0;
    double iter_max = 100.0;

    SearchSpace space() const;
};

/// Nearest integer, at least 1.
int to_iterations(double x);

struct TuneOptions {
    double validation_fraction = 0.25;
    double learning_rate = 0.1;
    TuneBounds bounds;
};

/// Validation MSE of predicted probabilities for x = (C, max_iter). The
/// training data is split once into fit and validation parts using `seed`.
Objective tune_objective(const Dataset& train, std::uint64_t seed, const TuneOptions& options = {});

/// Exhaustive lattice search including both endpoints of every axis. A size
/// of 1 evaluates only the lower end.
RunResult grid_search(Objective& objective, std::span<const std::size_t> sizes);

struct TuneReport {
    std::string algorithm;
    double best_c = 0.0;
    int best_max_iter = 0;
    double validation_mse = 0.0;
    Metrics test_metrics;
    double search_time_seconds = 0.0;
    std::uint64_t evaluations = 0;
};

void to_json(nlohmann::json& j, const TuneReport& r);

using Optimizer = std::function<RunResult(Objective&)>;

/// Tunes on `train`, refits the best setting on all of `train`, and scores `test`.
TuneReport tune(const std::string& algorithm, const Optimizer& optimize, const Dataset& train,
                const Dataset& test, std::uint64_t seed, const TuneOptions& options = {});

/// Two Gaussian classes with unit variance centred at -separation and
/// +separation in every coordinate; labels alternate so both classes have
/// m/2 rows (rounded).
Dataset make_blobs(std::size_t m, std::size_t d, double separation, std::uint64_t seed);

}  // namespace heokit::modelopt
