#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace heokit {

class RandomStream;

using Vector = std::vector<double>;

/// Axis-aligned box [lower, upper] in R^p.
class SearchSpace {
public:
    /// Throws std::invalid_argument unless both vectors are non-empty, of equal
    /// length, finite, and lower[j] < upper[j] for every j.
    SearchSpace(Vector lower, Vector upper);

    /// [lo, hi]^dim.
    static SearchSpace cube(std::size_t dim, double lo, double hi);

    std::size_t dim() const noexcept { return lower_.size(); }
    const Vector& lower() const noexcept { return lower_; }
    const Vector& upper() const noexcept { return upper_; }
    double lower(std::size_t j) const { return lower_[j]; }
    double upper(std::size_t j) const { return upper_[j]; }
    double range(std::size_t j) const { return upper_[j] - lower_[j]; }
    double half_side(std::size_t j) const { return 0.5 * (upper_[j] - lower_[j]); }

    bool contains(std::span<const double> x) const noexcept;

    friend bool operator==(const SearchSpace&, const SearchSpace&) = default;

private:
    Vector lower_;
    Vector upper_;
};

/// Componentwise min(max(x, lower), upper). Infinities saturate; a NaN
/// component maps to the midpoint of its interval so the result is always
/// inside the space. Throws std::invalid_argument on dimension mismatch.
Vector clamp(std::span<const double> x, const SearchSpace& space);
void clamp_in_place(std::span<double> x, const SearchSpace& space);

/// One point with each coordinate drawn from U[lower[j], upper[j]).
Vector sample_uniform(const SearchSpace& space, RandomStream& rng);

}  // namespace heokit
