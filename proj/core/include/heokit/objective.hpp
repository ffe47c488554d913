#pragma once

#include "heokit/search_space.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>

namespace heokit {

using CostFunction = std::function<double(std::span<const double>)>;

/// A named cost function over a search space, counting its evaluations.
///
/// A NaN returned by the wrapped function is reported as +infinity so that
/// every `<` comparison in the optimizers treats it as "no improvement".
class Objective {
public:
    Objective(std::string name, SearchSpace space, CostFunction cost);

    /// Evaluates the cost and increments eval_count() by exactly one.
    /// Throws std::invalid_argument when x.size() != space().dim().
    double evaluate(std::span<const double> x);

    const std::string& name() const noexcept { return name_; }
    const SearchSpace& space() const noexcept { return space_; }
    std::size_t dim() const noexcept { return space_.dim(); }
    std::uint64_t eval_count() const noexcept { return eval_count_; }
    void reset_count() noexcept { eval_count_ = 0; }

private:
    std::string name_;
    SearchSpace space_;
    CostFunction cost_;
    std::uint64_t eval_count_ = 0;
};

}  // namespace heokit
