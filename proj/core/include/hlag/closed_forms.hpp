#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "hlag/clique.hpp"
#include "hlag/hypergraph.hpp"
#include "hlag/weighting.hpp"

namespace hlag {

using Rational = boost::rational<std::int64_t>;

// Lagrangian of [t]^{(r)}: C(t, r) / t^r, attained by the uniform weighting.
Rational complete_lagrangian_exact(std::int64_t t, std::int64_t r);
double complete_lagrangian(std::int64_t t, std::int64_t r);

double to_double(const Rational& q);

struct MotzkinStraus {
    std::size_t clique_order = 0;
    double value = 0.0;
    Weighting witness = Weighting::uniform(1);  // 1/t on a fixed maximum clique
};

// Exact Lagrangian of a graph (r = 2) from its clique number: (1 - 1/t) / 2.
MotzkinStraus motzkin_straus(const Hypergraph& g, Vertex budget = kDefaultCliqueBudget);
double motzkin_straus_value(const Hypergraph& g, Vertex budget = kDefaultCliqueBudget);

}  // namespace hlag
