#include "heokit/objective.hpp"
#include "heokit/run.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace heokit {

Objective::Objective(std::string name, SearchSpace space, CostFunction cost)
    : name_(std::move(name)), space_(std::move(space)), cost_(std::move(cost)) {
    if (!cost_) {
        throw std::invalid_argument("objective '" + name_ + "' has no cost function");
    }
}

double Objective::evaluate(std::span<const double> x) {
    if (x.size() != space_.dim()) {
        throw std::invalid_argument("objective '" + name_ + "' expects " +
                                    std::to_string(space_.dim()) + " values, got " +
                                    std::to_string(x.size()));
    }
    ++eval_count_;
    const double cost = cost_(x);
    return std::isnan(cost) ? std::numeric_limits<double>::infinity() : cost;
}

void RunConfig::validate() const {
    if (population < 2) {
        throw std::invalid_argument("population must be at least 2");
    }
    if (iterations < 1) {
        throw std::invalid_argument("iterations must be at least 1");
    }
}

}  // namespace heokit
