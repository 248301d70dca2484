#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hlag/clique.hpp"
#include "hlag/hypergraph.hpp"
#include "hlag/link.hpp"
#include "hlag/weighting.hpp"

namespace hlag {

// Sum over edges of the product of the edge's weights.
double evaluate(const Hypergraph& g, const Weighting& x);

// Sum over the view's member sets of the product of their weights.
double link_value(const Hypergraph& g, const LinkView& view, const Weighting& x);

// Polynomial value plus every partial derivative lambda(E_i, x) in one pass
// over the edges. `gradient` is indexed 0-based and must have size n.
double value_and_gradient(const Hypergraph& g, std::span<const double> x, std::span<double> gradient);

// One multiplicative ascent step x_i <- x_i * lambda(E_i, x) / (r * lambda(G, x)).
// Throws ZeroValueError when lambda(G, x) = 0.
Weighting growth_step(const Hypergraph& g, const Weighting& x);

// Max over positive-weight vertices of |lambda(E_i, x) - r lambda(G, x)| plus
// the largest excess lambda(E_i, x) - r lambda(G, x) over zero-weight vertices.
double kkt_residual(const Hypergraph& g, const Weighting& x);

struct AscentResult {
    std::vector<double> weights;
    double value = 0.0;
    std::size_t iterations = 0;
};

// Growth steps until the per-step gain drops below gain_floor or the
// iteration cap is hit. The start must have a positive value.
AscentResult ascend(const Hypergraph& g, std::vector<double> x, std::size_t max_iterations, double gain_floor);

struct SupportReduction {
    Weighting weighting;
    std::vector<Vertex> support;
    // Every pair of support vertices lies in a common edge.
    bool pairs_covered = false;
    std::size_t iterations = 0;
};

// Zeroes weights at or below threshold, merges support pairs that share no
// edge (moving weight to the endpoint with the larger partial derivative,
// which cannot lower the value), renormalizes, then polishes with growth steps.
// Throws DegenerateWeightingError if nothing survives the threshold.
SupportReduction minimize_support(const Hypergraph& g, const Weighting& x, double threshold,
                                  std::size_t max_iterations = 50'000, double gain_floor = 1e-14);

// Newton iterations on the stationarity system of x's support (gradient
// constant on the support, weights summing to one). Returns the refined
// weighting only if it stays strictly positive on the support, does not lose
// value, and lowers the KKT residual.
std::optional<Weighting> refine_on_support(const Hypergraph& g, const Weighting& x, std::size_t max_steps = 20);

struct SolverConfig {
    std::size_t restarts = 64;
    std::size_t max_iterations = 50'000;
    double step_gain_floor = 1e-14;
    double kkt_tolerance = 1e-8;
    double support_threshold = 1e-9;
    double equality_tolerance = 1e-6;
    std::uint64_t seed = 0;
    // Uniform-on-clique starts; used when n <= clique_budget or the graph is
    // left-compressed (where clique search needs no budget).
    bool clique_starts = true;
    Vertex clique_budget = kDefaultCliqueBudget;
};

struct SolveReport {
    double value = 0.0;
    Weighting weighting = Weighting::uniform(1);      // after support minimization
    Weighting raw_weighting = Weighting::uniform(1);  // growth output before it
    std::vector<Vertex> support;
    double kkt_residual = 0.0;
    std::size_t iterations = 0;
    std::size_t restarts_used = 0;
    std::size_t best_restart = 0;
    bool converged = false;
    bool support_pairs_covered = true;
    // Filled when clique search ran.
    std::optional<std::size_t> clique_order;
    std::optional<double> clique_lower_bound;
    // Exact value for r = 2 when clique search ran.
    std::optional<double> motzkin_straus_value;
};

// Best certified local maximum over a deterministic multistart schedule:
// uniform, uniform on each maximal clique (largest first), then
// Dirichlet(1) draws seeded by (seed, restart index).
SolveReport solve(const Hypergraph& g, const SolverConfig& config = {});

// Starting points solve() would use, in order. Exposed for tests.
std::vector<Weighting> starting_points(const Hypergraph& g, const SolverConfig& config);

}  // namespace hlag
