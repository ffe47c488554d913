#include "heokit/benchmarks.hpp"
#include "heokit/constrained.hpp"
#include "heokit/harness.hpp"

#include <algorithm>

namespace heokit::harness {

namespace {

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const std::string& n : names) {
        if (!out.empty()) {
            out += ", ";
        }
        out += n;
    }
    return out;
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names{"heo", "pso", "gwo", "ga", "qpso"};
    return names;
}

bool is_algorithm(std::string_view name) {
    const auto& names = algorithm_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

RunResult run_algorithm(std::string_view name, Objective& objective, const RunConfig& config,
                        const AlgorithmSettings& settings, const IterationObserver& observer) {
    if (name == "heo") {
        heo::Params params = settings.heo;
        params.population = config.population;
        params.iterations = config.iterations;
        return heo::run(objective, params, config.seed, config.record_history, observer);
    }
    if (name == "pso") {
        return baselines::pso_run(objective, config, settings.pso, observer);
    }
    if (name == "gwo") {
        return baselines::gwo_run(objective, config, observer);
    }
    if (name == "ga") {
        return baselines::ga_run(objective, config, settings.ga, observer);
    }
    if (name == "qpso") {
        return baselines::qpso_run(objective, config, settings.qpso, observer);
    }
    throw ConfigError("unknown algorithm '" + std::string(name) +
                      "'; valid names: " + join(algorithm_names()));
}

std::vector<std::string> problem_names() {
    std::vector<std::string> names;
    for (const auto& b : bench::registry()) {
        names.emplace_back(b.name);
    }
    for (std::string& n : constrained::problem_names()) {
        names.push_back(std::move(n));
    }
    return names;
}

Objective make_problem(std::string_view name, std::size_t dim) {
    if (const auto id = bench::find(name)) {
        const auto& meta = bench::info(*id);
        if (dim < meta.min_dim) {
            throw ConfigError(std::string(meta.name) + " needs dimension >= " +
                              std::to_string(meta.min_dim));
        }
        return bench::make_objective(*id, dim);
    }
    if (auto problem = constrained::find_problem(name)) {
        return constrained::make_penalized_objective(*problem);
    }
    throw ConfigError("unknown problem '" + std::string(name) +
                      "'; valid names: " + join(problem_names()));
}

}  // namespace heokit::harness
