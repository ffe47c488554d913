#include "heokit/search_space.hpp"

#include "heokit/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace heokit {

SearchSpace::SearchSpace(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) {
        throw std::invalid_argument("search space needs at least one dimension");
    }
    if (lower_.size() != upper_.size()) {
        throw std::invalid_argument("search space bounds differ in length: " +
                                    std::to_string(lower_.size()) + " vs " +
                                    std::to_string(upper_.size()));
    }
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!std::isfinite(lower_[j]) || !std::isfinite(upper_[j]) || !(lower_[j] < upper_[j])) {
            throw std::invalid_argument("invalid bounds in dimension " + std::to_string(j));
        }
    }
}

SearchSpace SearchSpace::cube(std::size_t dim, double lo, double hi) {
    return SearchSpace(Vector(dim, lo), Vector(dim, hi));
}

bool SearchSpace::contains(std::span<const double> x) const noexcept {
    if (x.size() != dim()) {
        return false;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) {
            return false;
        }
    }
    return true;
}

void clamp_in_place(std::span<double> x, const SearchSpace& space) {
    if (x.size() != space.dim()) {
        throw std::invalid_argument("clamp: vector has " + std::to_string(x.size()) +
                                    " entries, space has " + std::to_string(space.dim()));
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double lo = space.lower(j);
        const double hi = space.upper(j);
        if (std::isnan(x[j])) {
            x[j] = lo + 0.5 * (hi - lo);
        } else if (x[j] < lo) {
            x[j] = lo;
        } else if (x[j] > hi) {
            x[j] = hi;
        }
    }
}

Vector clamp(std::span<const double> x, const SearchSpace& space) {
    Vector out(x.begin(), x.end());
    clamp_in_place(out, space);
    return out;
}

Vector sample_uniform(const SearchSpace& space, RandomStream& rng) {
    Vector x(space.dim());
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = rng.uniform(space.lower(j), space.upper(j));
    }
    return x;
}

}  // namespace heokit
