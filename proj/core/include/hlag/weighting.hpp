#pragma once

#include <span>
#include <vector>

#include "hlag/rset.hpp"

namespace hlag {

inline constexpr double kSimplexTolerance = 1e-12;

// A point of the standard simplex: non-negative weights summing to one.
class Weighting {
public:
    explicit Weighting(std::vector<double> weights);

    static Weighting uniform(std::size_t n);
    // 1/|vertices| on each listed (1-based) vertex, zero elsewhere.
    static Weighting uniform_on(std::size_t n, std::span<const Vertex> vertices);
    // Divides by the total; throws DegenerateWeightingError if it is zero.
    static Weighting normalized(std::vector<double> weights);

    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }
    // 1-based access.
    double weight(Vertex v) const { return weights_.at(v - 1); }
    std::span<const double> values() const noexcept { return weights_; }

    // Vertices (1-based) whose weight exceeds the threshold.
    std::vector<Vertex> support(double threshold = 0.0) const;

    bool operator==(const Weighting&) const = default;

private:
    std::vector<double> weights_;
};

}  // namespace hlag
