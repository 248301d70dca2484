#include "hlag/weighting.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "hlag/errors.hpp"

namespace hlag {

Weighting::Weighting(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidParametersError("a weighting needs at least one vertex");
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw InvalidParametersError("weights must be finite and non-negative, got " + std::to_string(w));
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > kSimplexTolerance) {
        throw InvalidParametersError("weights sum to " + std::to_string(sum) + ", not 1");
    }
}

Weighting Weighting::uniform(std::size_t n) {
    if (n == 0) throw InvalidParametersError("a weighting needs at least one vertex");
    return Weighting(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Weighting Weighting::uniform_on(std::size_t n, std::span<const Vertex> vertices) {
    if (vertices.empty()) throw DegenerateWeightingError("uniform weighting on an empty vertex set");
    std::vector<double> w(n, 0.0);
    const double share = 1.0 / static_cast<double>(vertices.size());
    for (Vertex v : vertices) {
        if (v < 1 || v > n) throw IndexError("vertex " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
        w[v - 1] = share;
    }
    return Weighting(std::move(w));
}

Weighting Weighting::normalized(std::vector<double> weights) {
    double sum = 0.0;
    for (double w : weights) {
        if (!std::isfinite(w) || w < 0.0) throw InvalidParametersError("weights must be finite and non-negative");
        sum += w;
    }
    if (!(sum > 0.0)) throw DegenerateWeightingError("all weights are zero");
    for (double& w : weights) w /= sum;
    return Weighting(std::move(weights));
}

std::vector<Vertex> Weighting::support(double threshold) const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] > threshold) out.push_back(static_cast<Vertex>(i + 1));
    }
    return out;
}

}  // namespace hlag
