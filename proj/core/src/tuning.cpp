#include "heokit/modelopt.hpp"

#include "run_recorder.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace heokit::modelopt {

SearchSpace TuneBounds::space() const { return SearchSpace({c_min, iter_min}, {c_max, iter_max}); }

int to_iterations(double x) {
    if (!std::isfinite(x) || x < 1.0) {
        return 1;
    }
    return static_cast<int>(std::lround(x));
}

Objective tune_objective(const Dataset& train_data, std::uint64_t seed, const TuneOptions& options) {
    auto [fit, validation] = train_test_split(train_data, options.validation_fraction, seed);
    auto shared = std::make_shared<const std::pair<Dataset, Dataset>>(std::move(fit),
                                                                      std::move(validation));
    const double lr = options.learning_rate;
    return Objective("logistic_validation_mse", options.bounds.space(),
                     [shared, lr](std::span<const double> x) {
                         const auto& [fit_part, val_part] = *shared;
                         const LogisticModel model =
                             train(fit_part, x[0], to_iterations(x[1]), TrainOptions{lr, nullptr});
                         double sum = 0.0;
                         for (std::size_t i = 0; i < val_part.rows(); ++i) {
                             const double e = model.predict_proba(val_part.features[i]) -
                                              static_cast<double>(val_part.labels[i]);
                             sum += e * e;
                         }
                         return sum / static_cast<double>(val_part.rows());
                     });
}

RunResult grid_search(Objective& objective, std::span<const std::size_t> sizes) {
    const SearchSpace& space = objective.space();
    if (sizes.size() != space.dim()) {
        throw std::invalid_argument("grid_search: need one size per dimension (" +
                                    std::to_string(space.dim()) + ")");
    }
    for (std::size_t n : sizes) {
        if (n < 1) {
            throw std::invalid_argument("grid_search: sizes must be positive");
        }
    }
    detail::RunRecorder recorder(objective, 0, false);

    auto coordinate = [&](std::size_t j, std::size_t k) {
        if (sizes[j] == 1) {
            return space.lower(j);
        }
        if (k + 1 == sizes[j]) {
            return space.upper(j);
        }
        return space.lower(j) +
               space.range(j) * static_cast<double>(k) / static_cast<double>(sizes[j] - 1);
    };

    std::vector<std::size_t> index(sizes.size(), 0);
    Vector x(sizes.size());
    Vector best;
    double best_cost = std::numeric_limits<double>::infinity();
    while (true) {
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = coordinate(j, index[j]);
        }
        const double cost = objective.evaluate(x);
        if (best.empty() || cost < best_cost) {
            best = x;
            best_cost = cost;
        }
        // odometer increment, last axis fastest
        std::size_t j = index.size();
        while (j > 0 && ++index[j - 1] == sizes[j - 1]) {
            index[j - 1] = 0;
            --j;
        }
        if (j == 0) {
            break;
        }
    }
    return recorder.finish(std::move(best), best_cost, objective);
}

TuneReport tune(const std::string& algorithm, const Optimizer& optimize, const Dataset& train_data,
                const Dataset& test, std::uint64_t seed, const TuneOptions& options) {
    Objective objective = tune_objective(train_data, seed, options);
    const auto start = std::chrono::steady_clock::now();
    const RunResult result = optimize(objective);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    TuneReport report;
    report.algorithm = algorithm;
    report.best_c = result.best_position.at(0);
    report.best_max_iter = to_iterations(result.best_position.at(1));
    report.validation_mse = result.best_cost;
    report.search_time_seconds = elapsed;
    report.evaluations = objective.eval_count();

    const LogisticModel model = train(train_data, report.best_c, report.best_max_iter,
                                      TrainOptions{options.learning_rate, nullptr});
    report.test_metrics = metrics(model, test);
    return report;
}

void to_json(nlohmann::json& j, const TuneReport& r) {
    j = nlohmann::json{{"algorithm", r.algorithm},
                       {"best_C", r.best_c},
                       {"best_max_iter", r.best_max_iter},
                       {"validation_mse", r.validation_mse},
                       {"test_metrics", r.test_metrics},
                       {"search_time_seconds", r.search_time_seconds},
                       {"evaluations", r.evaluations}};
}

}  // namespace heokit::modelopt
