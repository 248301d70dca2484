#include "hlag/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "hlag/closed_forms.hpp"
#include "hlag/compression.hpp"
#include "hlag/errors.hpp"

namespace hlag {

namespace {

// Weights this small only slow the arithmetic down (denormals) and never
// matter at the support threshold.
constexpr double kUnderflowFloor = 1e-200;

void check_dimension(const Hypergraph& g, std::size_t size) {
    if (size != g.n()) {
        throw DimensionError("weighting has " + std::to_string(size) + " entries, graph has " +
                             std::to_string(g.n()) + " vertices");
    }
}

double monomial(std::span<const Vertex> set, const Weighting& x) {
    double p = 1.0;
    for (Vertex v : set) p *= x.weight(v);
    return p;
}

// Pairs of vertices that share an edge, as an n x n bit matrix.
std::vector<bool> pair_cover(const Hypergraph& g) {
    const std::size_t n = g.n();
    const std::size_t r = g.r();
    std::vector<bool> covered(n * n, false);
    const auto flat = g.flat_edges();
    for (std::size_t e = 0; e < g.m(); ++e) {
        for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = a + 1; b < r; ++b) {
                const auto u = flat[e * r + a];
                const auto v = flat[e * r + b];
                covered[u * n + v] = covered[v * n + u] = true;
            }
        }
    }
    return covered;
}

bool sorted_descending(std::span<const double> w) {
    return std::is_sorted(w.begin(), w.end(), std::greater<>{});
}

std::vector<double> dirichlet_start(std::size_t n, std::uint64_t seed, std::size_t restart, std::size_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(attempt)};
    std::mt19937_64 rng(seq);
    std::exponential_distribution<double> exp1(1.0);
    std::vector<double> w(n);
    for (double& v : w) v = exp1(rng);
    return w;
}

std::vector<double> to_vector(const Weighting& w) { return {w.values().begin(), w.values().end()}; }

struct Trial {
    SupportReduction reduced;
    Weighting raw;
    double value = 0.0;
    double kkt = 0.0;
    std::size_t iterations = 0;
};

Trial run_trial(const Hypergraph& g, const std::vector<double>& start, const SolverConfig& cfg, bool left_compressed) {
    AscentResult ascent = ascend(g, start, cfg.max_iterations, cfg.step_gain_floor);
    Weighting raw = Weighting::normalized(std::move(ascent.weights));
    SupportReduction reduced = minimize_support(g, raw, cfg.support_threshold, cfg.max_iterations, cfg.step_gain_floor);
    std::size_t iterations = ascent.iterations + reduced.iterations;

    if (left_compressed) {
        // On a left-compressed graph, sorting weights into non-increasing
        // order never lowers the value; re-polish until the order is stable.
        for (int pass = 0; pass < 3 && !sorted_descending(reduced.weighting.values()); ++pass) {
            std::vector<double> w(reduced.weighting.values().begin(), reduced.weighting.values().end());
            std::sort(w.begin(), w.end(), std::greater<>{});
            reduced = minimize_support(g, Weighting::normalized(std::move(w)), cfg.support_threshold,
                                       cfg.max_iterations, cfg.step_gain_floor);
            iterations += reduced.iterations;
        }
        if (!sorted_descending(reduced.weighting.values())) {
            std::vector<double> w(reduced.weighting.values().begin(), reduced.weighting.values().end());
            std::sort(w.begin(), w.end(), std::greater<>{});
            reduced.weighting = Weighting::normalized(std::move(w));
            reduced.support = reduced.weighting.support();
        }
    }

    if (auto refined = refine_on_support(g, reduced.weighting)) {
        if (!left_compressed || sorted_descending(refined->values())) {
            reduced.weighting = std::move(*refined);
            reduced.support = reduced.weighting.support();
        }
    }

    Trial trial{std::move(reduced), std::move(raw)};
    trial.value = evaluate(g, trial.reduced.weighting);
    trial.kkt = kkt_residual(g, trial.reduced.weighting);
    trial.iterations = iterations;
    return trial;
}

}  // namespace

double evaluate(const Hypergraph& g, const Weighting& x) {
    check_dimension(g, x.size());
    long double sum = 0.0L;
    for (const RSet& e : g.edges()) sum += monomial(e.elements(), x);
    return static_cast<double>(sum);
}

double link_value(const Hypergraph& g, const LinkView& view, const Weighting& x) {
    check_dimension(g, x.size());
    long double sum = 0.0L;
    for (const RSet& s : view.sets) sum += monomial(s.elements(), x);
    return static_cast<double>(sum);
}

double value_and_gradient(const Hypergraph& g, std::span<const double> x, std::span<double> gradient) {
    check_dimension(g, x.size());
    check_dimension(g, gradient.size());
    std::fill(gradient.begin(), gradient.end(), 0.0);
    const std::size_t r = g.r();
    const auto flat = g.flat_edges();
    double value = 0.0;
    if (r == 2) {
        for (std::size_t e = 0; e < g.m(); ++e) {
            const auto a = flat[2 * e], b = flat[2 * e + 1];
            value += x[a] * x[b];
            gradient[a] += x[b];
            gradient[b] += x[a];
        }
        return value;
    }
    if (r == 3) {
        for (std::size_t e = 0; e < g.m(); ++e) {
            const auto a = flat[3 * e], b = flat[3 * e + 1], c = flat[3 * e + 2];
            const double ab = x[a] * x[b];
            value += ab * x[c];
            gradient[a] += x[b] * x[c];
            gradient[b] += x[a] * x[c];
            gradient[c] += ab;
        }
        return value;
    }
    std::vector<double> prefix(r + 1), suffix(r + 1);
    for (std::size_t e = 0; e < g.m(); ++e) {
        const auto* edge = flat.data() + e * r;
        prefix[0] = 1.0;
        for (std::size_t k = 0; k < r; ++k) prefix[k + 1] = prefix[k] * x[edge[k]];
        suffix[r] = 1.0;
        for (std::size_t k = r; k-- > 0;) suffix[k] = suffix[k + 1] * x[edge[k]];
        value += prefix[r];
        for (std::size_t k = 0; k < r; ++k) gradient[edge[k]] += prefix[k] * suffix[k + 1];
    }
    return value;
}

Weighting growth_step(const Hypergraph& g, const Weighting& x) {
    check_dimension(g, x.size());
    std::vector<double> w(x.values().begin(), x.values().end());
    std::vector<double> grad(w.size());
    const double value = value_and_gradient(g, w, grad);
    if (!(value > 0.0)) throw ZeroValueError("growth step needs a weighting with positive value");
    const double scale = 1.0 / (static_cast<double>(g.r()) * value);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] *= grad[i] * scale;
    return Weighting::normalized(std::move(w));
}

double kkt_residual(const Hypergraph& g, const Weighting& x) {
    check_dimension(g, x.size());
    std::vector<double> grad(x.size());
    const double target = static_cast<double>(g.r()) * value_and_gradient(g, x.values(), grad);
    double on_support = 0.0;
    double off_support = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double gap = grad[i] - target;
        if (x[i] > 0.0) {
            on_support = std::max(on_support, std::abs(gap));
        } else {
            off_support = std::max(off_support, gap);
        }
    }
    return on_support + off_support;
}

AscentResult ascend(const Hypergraph& g, std::vector<double> x, std::size_t max_iterations, double gain_floor) {
    check_dimension(g, x.size());
    std::vector<double> grad(x.size());
    double value = value_and_gradient(g, x, grad);
    if (!(value > 0.0)) throw ZeroValueError("ascent needs a starting weighting with positive value");
    const double r = static_cast<double>(g.r());
    std::size_t it = 0;
    while (it < max_iterations) {
        const double scale = 1.0 / (r * value);
        double sum = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] *= grad[i] * scale;
            if (x[i] < kUnderflowFloor) x[i] = 0.0;
            sum += x[i];
        }
        for (double& v : x) v /= sum;
        const double next = value_and_gradient(g, x, grad);
        ++it;
        const double gain = next - value;
        value = next;
        if (gain < gain_floor) break;
    }
    return {std::move(x), value, it};
}

SupportReduction minimize_support(const Hypergraph& g, const Weighting& x, double threshold,
                                  std::size_t max_iterations, double gain_floor) {
    check_dimension(g, x.size());
    const std::size_t n = g.n();
    const auto covered = pair_cover(g);
    std::vector<double> w(x.values().begin(), x.values().end());
    std::vector<double> grad(n);
    std::size_t iterations = 0;

    // Polishing can push a weight back under the threshold, so repeat a few
    // rounds until the support is stable.
    for (int round = 0; round < 8; ++round) {
        for (double& v : w) {
            if (v <= threshold) v = 0.0;
        }
        if (std::none_of(w.begin(), w.end(), [](double v) { return v > 0.0; })) {
            throw DegenerateWeightingError("every weight is at or below the support threshold " +
                                           std::to_string(threshold));
        }
        w = to_vector(Weighting::normalized(std::move(w)));

        for (bool again = true; again;) {
            again = false;
            value_and_gradient(g, w, grad);
            for (std::size_t i = 0; i < n && !again; ++i) {
                if (w[i] == 0.0) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (w[j] == 0.0 || covered[i * n + j]) continue;
                    // No edge holds both, so the value is linear along
                    // x_i + x_j = const; move everything to the better end.
                    if (grad[i] >= grad[j]) {
                        w[i] += w[j];
                        w[j] = 0.0;
                    } else {
                        w[j] += w[i];
                        w[i] = 0.0;
                    }
                    again = true;
                    break;
                }
            }
        }

        if (value_and_gradient(g, w, grad) > 0.0) {
            AscentResult polished = ascend(g, w, max_iterations, gain_floor);
            iterations += polished.iterations;
            w = std::move(polished.weights);
        }
        const bool below = std::any_of(w.begin(), w.end(), [&](double v) { return v > 0.0 && v <= threshold; });
        if (!below) break;
    }

    Weighting result = Weighting::normalized(std::move(w));
    std::vector<Vertex> support = result.support();
    bool pairs_covered = true;
    for (std::size_t a = 0; a < support.size() && pairs_covered; ++a) {
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            if (!covered[(support[a] - 1) * n + (support[b] - 1)]) {
                pairs_covered = false;
                break;
            }
        }
    }
    return {std::move(result), std::move(support), pairs_covered, iterations};
}

std::vector<Weighting> starting_points(const Hypergraph& g, const SolverConfig& config) {
    const std::size_t n = g.n();
    const std::size_t total = std::max<std::size_t>(config.restarts, 1);
    std::vector<Weighting> starts;
    starts.push_back(Weighting::uniform(n));

    const bool use_cliques =
        config.clique_starts && !g.empty() && (n <= config.clique_budget || is_left_compressed(g));
    if (use_cliques && starts.size() < total) {
        std::vector<std::vector<Vertex>> cliques;
        cliques.push_back(find_max_clique(g, config.clique_budget));
        for (auto& c : maximal_cliques(g, total)) {
            if (std::find(cliques.begin(), cliques.end(), c) == cliques.end()) cliques.push_back(std::move(c));
        }
        for (const auto& c : cliques) {
            if (starts.size() >= total) break;
            starts.push_back(Weighting::uniform_on(n, c));
        }
    }
    for (std::size_t idx = starts.size(); idx < total; ++idx) {
        starts.push_back(Weighting::normalized(dirichlet_start(n, config.seed, idx, 0)));
    }
    return starts;
}

std::optional<Weighting> refine_on_support(const Hypergraph& g, const Weighting& x, std::size_t max_steps) {
    check_dimension(g, x.size());
    const std::size_t n = g.n();
    const std::size_t r = g.r();
    std::vector<std::size_t> slot(n, n);
    std::vector<std::size_t> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > 0.0) {
            slot[i] = vertices.size();
            vertices.push_back(i);
        }
    }
    const std::size_t k = vertices.size();
    if (k < 2) return std::nullopt;

    const auto flat = g.flat_edges();
    std::vector<double> y(x.values().begin(), x.values().end());
    std::vector<double> grad(n);
    Eigen::MatrixXd jac(k + 1, k + 1);
    Eigen::VectorXd rhs(k + 1);
    const double start_value = evaluate(g, x);
    const double start_kkt = kkt_residual(g, x);

    for (std::size_t step = 0; step < max_steps; ++step) {
        const double value = value_and_gradient(g, y, grad);
        const double mu = static_cast<double>(r) * value;
        jac.setZero();
        for (std::size_t a = 0; a < k; ++a) {
            rhs(a) = -(grad[vertices[a]] - mu);
            jac(a, k) = -1.0;
            jac(k, a) = 1.0;
        }
        double sum = 0.0;
        for (const auto v : vertices) sum += y[v];
        rhs(k) = -(sum - 1.0);
        // Hessian of the multilinear form restricted to the support.
        for (std::size_t e = 0; e < g.m(); ++e) {
            const auto edge = flat.subspan(e * r, r);
            for (std::size_t a = 0; a < r; ++a) {
                const std::size_t sa = slot[edge[a]];
                if (sa == n) continue;
                for (std::size_t b = a + 1; b < r; ++b) {
                    const std::size_t sb = slot[edge[b]];
                    if (sb == n) continue;
                    double p = 1.0;
                    for (std::size_t c = 0; c < r; ++c) {
                        if (c != a && c != b) p *= y[edge[c]];
                    }
                    jac(sa, sb) += p;
                    jac(sb, sa) += p;
                }
            }
        }
        if (rhs.lpNorm<Eigen::Infinity>() < 1e-15) break;
        const Eigen::VectorXd delta = jac.fullPivLu().solve(rhs);
        if (!delta.allFinite()) return std::nullopt;
        for (std::size_t a = 0; a < k; ++a) {
            y[vertices[a]] += delta(a);
            if (!(y[vertices[a]] > 0.0)) return std::nullopt;
        }
        if (delta.head(k).lpNorm<Eigen::Infinity>() < 1e-17) break;
    }

    Weighting refined = Weighting::normalized(std::move(y));
    const double value = evaluate(g, refined);
    if (value < start_value - 1e-15 || kkt_residual(g, refined) >= start_kkt) return std::nullopt;
    return refined;
}

SolveReport solve(const Hypergraph& g, const SolverConfig& config) {
    const std::size_t n = g.n();
    SolveReport report;
    if (g.empty()) {
        report.weighting = report.raw_weighting = Weighting::uniform(n);
        report.support = report.weighting.support(config.support_threshold);
        report.converged = true;
        report.restarts_used = 0;
        return report;
    }

    const bool left_compressed = is_left_compressed(g);
    if (config.clique_starts && (n <= config.clique_budget || left_compressed)) {
        const std::size_t s = max_clique_order(g, config.clique_budget);
        report.clique_order = s;
        report.clique_lower_bound = complete_lagrangian(static_cast<std::int64_t>(s), static_cast<std::int64_t>(g.r()));
        if (g.r() == 2) report.motzkin_straus_value = report.clique_lower_bound;
    }

    const auto starts = starting_points(g, config);
    std::optional<Trial> best;
    for (std::size_t idx = 0; idx < starts.size(); ++idx) {
        std::vector<double> x(starts[idx].values().begin(), starts[idx].values().end());
        std::vector<double> grad(n);
        // A start where the polynomial vanishes is swapped for a fresh draw.
        for (std::size_t attempt = 1; attempt <= 8 && !(value_and_gradient(g, x, grad) > 0.0); ++attempt) {
            x = to_vector(Weighting::normalized(dirichlet_start(n, config.seed, idx, attempt)));
        }
        ++report.restarts_used;
        if (!(value_and_gradient(g, x, grad) > 0.0)) continue;

        Trial trial = run_trial(g, x, config, left_compressed);
        const bool converged = trial.kkt <= config.kkt_tolerance;
        bool take = !best.has_value();
        if (best) {
            const bool best_converged = best->kkt <= config.kkt_tolerance;
            constexpr double tie = 1e-12;
            take = trial.value > best->value + tie ||
                   (std::abs(trial.value - best->value) <= tie && converged && !best_converged);
        }
        if (take) {
            report.best_restart = idx;
            best = std::move(trial);
        }
    }

    if (!best) {
        report.weighting = report.raw_weighting = Weighting::uniform(n);
        report.support = report.weighting.support(config.support_threshold);
        report.value = evaluate(g, report.weighting);
        report.kkt_residual = kkt_residual(g, report.weighting);
        return report;
    }
    report.value = best->value;
    report.weighting = best->reduced.weighting;
    report.raw_weighting = best->raw;
    report.support = best->reduced.support;
    report.support_pairs_covered = best->reduced.pairs_covered;
    report.kkt_residual = best->kkt;
    report.iterations = best->iterations;
    report.converged = best->kkt <= config.kkt_tolerance;
    return report;
}

}  // namespace hlag
