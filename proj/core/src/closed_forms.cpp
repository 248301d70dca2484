#include "hlag/closed_forms.hpp"

#include <string>

#include "hlag/binomial.hpp"
#include "hlag/errors.hpp"

namespace hlag {

Rational complete_lagrangian_exact(std::int64_t t, std::int64_t r) {
    if (r < 2 || t < r) {
        throw InvalidParametersError("complete Lagrangian needs t >= r >= 2, got t = " + std::to_string(t) +
                                     ", r = " + std::to_string(r));
    }
    // C(t, r) / t^r = prod_{i<r} (t - i) / (r! t^r); build it factor by factor
    // so intermediate values stay reduced.
    Rational q(1);
    for (std::int64_t i = 0; i < r; ++i) q *= Rational(t - i, t * (i + 1));
    return q;
}

double to_double(const Rational& q) {
    return static_cast<double>(static_cast<long double>(q.numerator()) / static_cast<long double>(q.denominator()));
}

double complete_lagrangian(std::int64_t t, std::int64_t r) { return to_double(complete_lagrangian_exact(t, r)); }

MotzkinStraus motzkin_straus(const Hypergraph& g, Vertex budget) {
    if (g.r() != 2) {
        throw UniformityMismatchError("the clique formula applies to 2-graphs, got r = " + std::to_string(g.r()));
    }
    MotzkinStraus out;
    auto clique = find_max_clique(g, budget);
    if (clique.empty()) clique = {1};
    out.clique_order = clique.size();
    const auto t = static_cast<double>(clique.size());
    out.value = 0.5 * (1.0 - 1.0 / t);
    out.witness = Weighting::uniform_on(g.n(), clique);
    return out;
}

double motzkin_straus_value(const Hypergraph& g, Vertex budget) { return motzkin_straus(g, budget).value; }

}  // namespace hlag
