#include <doctest.h>

#include <cmath>

#include "hlag/clique.hpp"
#include "hlag/closed_forms.hpp"
#include "hlag/compression.hpp"
#include "hlag/errors.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/link.hpp"
#include "hlag/weighting.hpp"
#include "support.hpp"

using namespace hlag;
using doctest::Approx;

namespace {

const Hypergraph kTriangle = complete_graph(3, 2);
const Hypergraph kEdge12{2, 2, {RSet{1, 2}}};
const Hypergraph kEdge123{3, 3, {RSet{1, 2, 3}}};

}  // namespace

TEST_SUITE("lagrangian") {

TEST_CASE("weighting validation") {
    CHECK_THROWS_AS(Weighting({0.5, 0.6}), InvalidParametersError);
    CHECK_THROWS_AS(Weighting({1.5, -0.5}), InvalidParametersError);
    CHECK_THROWS_AS(Weighting({NAN, 1.0}), InvalidParametersError);
    CHECK_THROWS_AS(Weighting::normalized({0.0, 0.0}), DegenerateWeightingError);
    const Weighting w = Weighting::normalized({2.0, 1.0, 1.0, 0.0});
    CHECK(w.weight(1) == 0.5);
    CHECK(w.support() == std::vector<Vertex>{1, 2, 3});
    const std::vector<Vertex> on{2, 4};
    CHECK(Weighting::uniform_on(4, on).values()[3] == 0.5);
    CHECK(Weighting::uniform(4)[0] == 0.25);
}

TEST_CASE("evaluate examples") {
    CHECK(evaluate(kEdge123, Weighting::uniform(3)) == Approx(1.0 / 27).epsilon(1e-15));
    CHECK(evaluate(kTriangle, Weighting::uniform(3)) == Approx(1.0 / 3).epsilon(1e-15));
    const Weighting sharp({0.2, 0.2, 0.2, 0.2, 0.1, 0.1});
    CHECK(std::abs(evaluate(colex_graph(3, 17), sharp) - 0.082) <= 1e-15);
    CHECK(evaluate(Hypergraph::edgeless(3, 4), Weighting::uniform(4)) == 0.0);
    CHECK_THROWS_AS(evaluate(kTriangle, Weighting::uniform(4)), DimensionError);
}

TEST_CASE("evaluate agrees with exact rational arithmetic") {
    gen::Rng rng(17);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t r = 2 + rep % 3;
        const Hypergraph g = gen::random_graph(rng, r, 7, 0.5);
        std::vector<oracle::Exact> exact;
        std::vector<double> x;
        std::uniform_int_distribution<int> pick(1, 9);
        int total = 0;
        std::vector<int> raw(g.n());
        for (auto& v : raw) total += v = pick(rng);
        for (const int v : raw) {
            exact.emplace_back(v, total);
            x.push_back(static_cast<double>(exact.back()));
        }
        const double got = evaluate(g, Weighting::normalized(x));
        const double want = static_cast<double>(oracle::evaluate(g, exact));
        CHECK(std::abs(got - want) <= 1e-15);
    }
}

TEST_CASE("gradient matches links and finite differences") {
    gen::Rng rng(23);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t r = 2 + rep % 4;
        const Hypergraph g = gen::random_graph(rng, r, 7, 0.6);
        const auto x = gen::random_simplex_point(rng, g.n());
        std::vector<double> grad(g.n());
        const double value = value_and_gradient(g, x, grad);
        const Weighting w = Weighting::normalized(x);
        CHECK(value == Approx(evaluate(g, w)).epsilon(1e-13));
        double euler = 0.0;
        for (Vertex i = 1; i <= g.n(); ++i) {
            CHECK(grad[i - 1] == Approx(link_value(g, link(g, {i}), w)).epsilon(1e-12));
            euler += x[i - 1] * grad[i - 1];
        }
        // Euler's identity for homogeneous polynomials.
        CHECK(euler == Approx(static_cast<double>(r) * value).epsilon(1e-12));
    }
}

TEST_CASE("link values") {
    CHECK(link_value(kTriangle, link(kTriangle, {1}), Weighting::uniform(3)) == Approx(2.0 / 3));
    CHECK(link_value(kEdge123, link(kEdge123, {1, 2}), Weighting::uniform(3)) == Approx(1.0 / 3));
    const Hypergraph none = Hypergraph::edgeless(3, 4);
    CHECK(link_value(none, link(none, {1}), Weighting::uniform(4)) == 0.0);
}

TEST_CASE("growth step examples") {
    const Weighting u = Weighting::uniform(3);
    const Weighting same = growth_step(kTriangle, u);
    for (std::size_t i = 0; i < 3; ++i) CHECK(same[i] == Approx(1.0 / 3).epsilon(1e-15));

    const Weighting next = growth_step(kTriangle, Weighting({0.5, 0.3, 0.2}));
    CHECK(next[0] == Approx(0.5 * 0.5 / 0.62).epsilon(1e-14));
    CHECK(next[1] == Approx(0.3 * 0.7 / 0.62).epsilon(1e-14));
    CHECK(next[2] == Approx(0.2 * 0.8 / 0.62).epsilon(1e-14));

    const Weighting half = growth_step(kEdge12, Weighting({0.9, 0.1}));
    CHECK(half[0] == Approx(0.5).epsilon(1e-14));
    CHECK(half[1] == Approx(0.5).epsilon(1e-14));

    CHECK_THROWS_AS(growth_step(kEdge123, Weighting({1.0, 0.0, 0.0})), ZeroValueError);
}

TEST_CASE("KKT residual examples") {
    CHECK(kkt_residual(kTriangle, Weighting::uniform(3)) == Approx(0.0).epsilon(1e-15));
    CHECK(kkt_residual(kEdge12, Weighting({0.5, 0.5})) == Approx(0.0).epsilon(1e-15));
    CHECK(kkt_residual(kEdge12, Weighting({0.9, 0.1})) == Approx(0.72).epsilon(1e-12));
    // Off-support excess: vertex 3 would gain from weight.
    CHECK(kkt_residual(kTriangle, Weighting({0.5, 0.5, 0.0})) == Approx(0.5).epsilon(1e-12));
}

TEST_CASE("support minimization") {
    const SupportReduction tri = minimize_support(kTriangle, Weighting::normalized({0.5, 0.5, 1e-15}), 1e-9);
    CHECK(tri.support == std::vector<Vertex>{1, 2});
    CHECK(evaluate(kTriangle, tri.weighting) == Approx(0.25).epsilon(1e-12));
    CHECK(tri.pairs_covered);

    const Weighting inside({0.4, 0.35, 0.25});
    CHECK(minimize_support(kTriangle, inside, 1e-9).support.size() == 3);

    const Hypergraph k4 = complete_graph(4, 2);
    const SupportReduction fixed = minimize_support(k4, Weighting::uniform(4), 1e-9);
    for (std::size_t i = 0; i < 4; ++i) CHECK(fixed.weighting[i] == Approx(0.25).epsilon(1e-14));

    // Two disjoint edges: the support must collapse onto one of them.
    const Hypergraph matching(2, 4, {RSet{1, 2}, RSet{3, 4}});
    const SupportReduction merged = minimize_support(matching, Weighting::uniform(4), 1e-9);
    CHECK(merged.support.size() == 2);
    CHECK(merged.pairs_covered);
    CHECK(evaluate(matching, merged.weighting) >= 0.125 - 1e-9);

    CHECK_THROWS_AS(minimize_support(kTriangle, Weighting::uniform(3), 0.5), DegenerateWeightingError);
}

TEST_CASE("solve examples") {
    CHECK(solve(complete_graph(4, 2)).value == Approx(0.375).epsilon(1e-12));
    CHECK(solve(complete_graph(5, 3)).value == Approx(0.08).epsilon(1e-12));
    const SolveReport none = solve(Hypergraph::edgeless(3, 4));
    CHECK(none.value == 0.0);
    CHECK(none.weighting == Weighting::uniform(4));

    // Independent SLSQP multistart gives 0.08232550456959951 for C_{3,17}.
    const SolveReport c17 = solve(colex_graph(3, 17));
    CHECK(c17.value == Approx(0.08232550456959951).epsilon(1e-12));
    CHECK(c17.converged);
    CHECK(c17.kkt_residual <= 1e-8);
    CHECK(std::abs(c17.value - evaluate(colex_graph(3, 17), c17.weighting)) <= 1e-12);
    CHECK(c17.clique_order == std::optional<std::size_t>{5});
    CHECK(c17.raw_weighting.size() == 6);
}

TEST_CASE("solve is deterministic for a seed and varies its random starts with it") {
    const Hypergraph g = colex_graph(3, 14).on_vertices(7).without_edge(RSet{1, 2, 3}).with_edge(RSet{1, 2, 7});
    SolverConfig a;
    a.seed = 9;
    a.clique_starts = false;
    const SolveReport r1 = solve(g, a);
    const SolveReport r2 = solve(g, a);
    CHECK(r1.value == r2.value);
    CHECK(r1.weighting == r2.weighting);
    CHECK(r1.best_restart == r2.best_restart);
    const auto s9 = starting_points(g, a);
    a.seed = 10;
    const auto s10 = starting_points(g, a);
    CHECK(s9.size() == s10.size());
    CHECK(s9[0] == s10[0]);
    CHECK_FALSE(s9[1] == s10[1]);
}

TEST_CASE("refinement reaches a tight KKT point from a rough one") {
    const Hypergraph g = colex_graph(3, 17);
    const AscentResult rough = ascend(g, std::vector<double>(6, 1.0 / 6), 40, 0.0);
    const Weighting start = Weighting::normalized(rough.weights);
    const auto refined = refine_on_support(g, start);
    REQUIRE(refined.has_value());
    CHECK(kkt_residual(g, *refined) < 1e-12);
    CHECK(evaluate(g, *refined) >= evaluate(g, start));
}

TEST_CASE("closed forms") {
    CHECK(complete_lagrangian(3, 2) == Approx(1.0 / 3).epsilon(1e-15));
    CHECK(complete_lagrangian(5, 4) == Approx(0.008).epsilon(1e-15));
    CHECK(complete_lagrangian(4, 3) == Approx(0.0625).epsilon(1e-15));
    CHECK(complete_lagrangian_exact(5, 4) == Rational(1, 125));
    CHECK_THROWS_AS(complete_lagrangian(2, 3), InvalidParametersError);
    for (std::int64_t t = 2; t <= 12; ++t) {
        CHECK(complete_lagrangian_exact(t, 2) == Rational(1, 2) * (Rational(1) - Rational(1, t)));
    }
    for (std::int64_t t = 6; t <= 14; ++t) {
        const Rational expr((t - 2) * (t - 3) * (t - 4), 24 * (t - 1) * (t - 1) * (t - 1));
        CHECK(complete_lagrangian_exact(t - 1, 4) == expr);
    }
}

TEST_CASE("Motzkin-Straus values") {
    CHECK(motzkin_straus_value(kTriangle) == Approx(1.0 / 3));
    const Hypergraph path(2, 3, {RSet{1, 2}, RSet{2, 3}});
    CHECK(motzkin_straus_value(path) == Approx(0.25));
    std::vector<RSet> edges;
    for (auto& e : all_subsets(6, 2)) {
        if (!(e.min() % 2 == 1 && e.max() == e.min() + 1)) edges.push_back(std::move(e));
    }
    const Hypergraph cocktail(2, 6, std::move(edges));
    CHECK(max_clique_order(cocktail) == 3);
    CHECK(motzkin_straus_value(cocktail) == Approx(1.0 / 3));
    CHECK_THROWS_AS(motzkin_straus_value(kEdge123), UniformityMismatchError);
    const MotzkinStraus ms = motzkin_straus(cocktail);
    CHECK(evaluate(cocktail, ms.witness) == Approx(ms.value).epsilon(1e-14));
}

}  // TEST_SUITE
