#include "hlag/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "hlag/binomial.hpp"
#include "hlag/clique.hpp"
#include "hlag/closed_forms.hpp"
#include "hlag/colex.hpp"
#include "hlag/compression.hpp"
#include "hlag/errors.hpp"
#include "hlag/hypergraph_io.hpp"
#include "hlag/link.hpp"

namespace hlag {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Relation r) {
    switch (r) {
        case Relation::Equal: return "equal";
        case Relation::Less: return "less";
        case Relation::LessEqual: return "less-or-equal";
        case Relation::Greater: return "greater";
    }
    return "?";
}

std::optional<double> VerificationReport::min_margin() const {
    if (instances.empty()) return std::nullopt;
    return std::min_element(instances.begin(), instances.end(),
                            [](const auto& a, const auto& b) { return a.margin < b.margin; })
        ->margin;
}

std::optional<double> VerificationReport::max_margin() const {
    if (instances.empty()) return std::nullopt;
    return std::max_element(instances.begin(), instances.end(),
                            [](const auto& a, const auto& b) { return a.margin < b.margin; })
        ->margin;
}

Verdict classify(Relation relation, double value, double target, double tolerance, bool converged) {
    const double delta = value - target;
    switch (relation) {
        case Relation::Equal:
            if (std::abs(delta) <= tolerance) return Verdict::Pass;
            // A lower bound above the target refutes equality outright; one
            // below it only does so once the solver has certified a critical point.
            if (delta > tolerance || converged) return Verdict::Fail;
            return Verdict::Inconclusive;
        case Relation::Less:
            if (delta < -tolerance) return Verdict::Pass;
            if (delta > tolerance) return Verdict::Fail;
            return Verdict::Inconclusive;
        case Relation::LessEqual:
            return delta <= tolerance ? Verdict::Pass : Verdict::Fail;
        case Relation::Greater:
            return delta > tolerance ? Verdict::Pass : Verdict::Fail;
    }
    return Verdict::Inconclusive;
}

namespace {

std::int64_t choose(std::int64_t n, std::int64_t k) { return static_cast<std::int64_t>(binomial(n, k)); }

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParametersError(what);
}

}  // namespace

MRange clique_range(std::int64_t r, std::int64_t t) {
    require(r >= 2 && t - 1 >= r, "claim needs t - 1 >= r >= 2");
    const auto lo = choose(t - 1, r);
    return {lo, lo + choose(t - 2, r - 1)};
}

MRange max_clique_t_minus_2_range(std::int64_t t) {
    MRange range = clique_range(3, t);
    // hi - (t-2)/2 rounded down, in integers.
    range.hi = (2 * range.hi - (t - 2)) / 2;
    return range;
}

MRange dense_r_graph_range(std::int64_t r, std::int64_t t) {
    MRange range = clique_range(r, t);
    range.hi -= (std::int64_t{1} << (r - 2)) * (choose(t - 2, r - 2) - 1);
    return range;
}

MRange four_graph_clique_range(std::int64_t t) {
    const auto lo = choose(t - 1, 4);
    return {lo, lo + choose((t - 2) / 2, 3)};
}

MRange colex_extremal_range(std::int64_t t) {
    MRange range = clique_range(3, t);
    range.hi -= t - 4;
    return range;
}

std::vector<std::uint64_t> sweep_values(const MRange& range, SweepPolicy policy) {
    std::vector<std::uint64_t> out;
    if (range.empty()) return out;
    const auto lo = static_cast<std::uint64_t>(range.lo);
    const auto hi = static_cast<std::uint64_t>(range.hi);
    switch (policy) {
        case SweepPolicy::Exhaustive:
            for (auto m = lo; m <= hi; ++m) out.push_back(m);
            break;
        case SweepPolicy::Sampled: {
            std::set<std::uint64_t> picks{lo, hi};
            for (int k = 1; k <= 3; ++k) picks.insert(lo + ((hi - lo) * static_cast<std::uint64_t>(k) + 2) / 4);
            out.assign(picks.begin(), picks.end());
            break;
        }
        case SweepPolicy::Endpoints:
            out.push_back(lo);
            if (hi != lo) out.push_back(hi);
            break;
    }
    return out;
}

SweepPolicy default_policy(std::int64_t r, std::int64_t t) {
    if (r <= 3) return t <= 7 ? SweepPolicy::Exhaustive : SweepPolicy::Sampled;
    return SweepPolicy::Endpoints;
}

bool top_link_deficit_dominates(const Hypergraph& g, std::int64_t t) {
    require(g.r() >= 3, "the link deficit inequality needs r >= 3");
    if (static_cast<std::int64_t>(g.n()) != t) {
        throw InvalidParametersError("graph must be on exactly t = " + std::to_string(t) + " vertices, has " +
                                     std::to_string(g.n()));
    }
    const auto top = static_cast<Vertex>(t);
    const LinkView top_link = link(g, {top});
    std::uint64_t deficit = 0;
    for (const RSet& a : all_subsets(top - 2, g.r() - 1)) {
        if (!std::binary_search(top_link.sets.begin(), top_link.sets.end(), a)) ++deficit;
    }
    const std::uint64_t pair_link = link(g, {top - 1, top}).size();
    return deficit >= (std::uint64_t{1} << (g.r() - 3)) * pair_link;
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<SolveReport> solve_all(const std::vector<Hypergraph>& graphs, const SolverConfig& solver,
                                   std::size_t threads) {
    std::vector<SolveReport> out(graphs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, graphs.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = solve(graphs[i], solver);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < graphs.size(); i = next++) {
                try {
                    out[i] = solve(graphs[i], solver);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
    return out;
}

struct Sweep {
    std::string claim_id;
    std::int64_t r = 3;
    std::int64_t t = 0;
    Relation relation = Relation::Equal;
    MRange range;
    std::optional<std::int64_t> explicit_m;
    // Ground set for enumeration; graphs are trimmed to their used vertices
    // unless on_fixed_vertices is set.
    std::function<Vertex(std::uint64_t)> ground;
    bool on_fixed_vertices = false;
    std::function<std::uint64_t(std::uint64_t)> prefix = [](std::uint64_t) { return std::uint64_t{0}; };
    std::function<bool(const Hypergraph&, std::uint64_t)> filter = [](const Hypergraph&, std::uint64_t) { return true; };
    // Comparison target per m; defaults to the report reference.
    std::function<double(std::uint64_t)> target;
    std::function<void(std::uint64_t, const std::vector<Hypergraph>&, const std::vector<SolveReport>&,
                       VerificationReport&)>
        after_m;
};

VerificationReport start_report(const std::string& claim_id, std::int64_t r, std::int64_t t, Relation relation,
                                const HarnessConfig& cfg) {
    VerificationReport report;
    report.claim_id = claim_id;
    report.parameters["r"] = r;
    report.parameters["t"] = t;
    report.relation = relation;
    report.tolerance = cfg.solver.equality_tolerance;
    report.reference_value = complete_lagrangian(t - 1, r);
    return report;
}

void record(VerificationReport& report, const Hypergraph& g, std::uint64_t m, double value, double target,
            bool converged, std::vector<Witness>& candidates) {
    InstanceRecord rec;
    rec.m = m;
    rec.edge_hash = edge_hash(g);
    rec.value = value;
    rec.reference = target;
    rec.margin = target - value;
    rec.converged = converged;
    rec.verdict = classify(report.relation, value, target, report.tolerance, converged);
    ++report.instances_checked;
    if (!converged) ++report.unconverged;
    if (rec.verdict != Verdict::Pass) candidates.push_back({g, value, target, rec.margin, rec.verdict});
    report.instances.push_back(std::move(rec));
}

void finalize(VerificationReport& report, std::vector<Witness> candidates, std::vector<Hypergraph> closest,
              const HarnessConfig& cfg, Clock::time_point started) {
    bool any_fail = false;
    bool any_inconclusive = false;
    for (const auto& rec : report.instances) {
        any_fail = any_fail || rec.verdict == Verdict::Fail;
        any_inconclusive = any_inconclusive || rec.verdict == Verdict::Inconclusive;
    }
    report.verdict = any_fail ? Verdict::Fail : any_inconclusive ? Verdict::Inconclusive : Verdict::Pass;

    std::stable_sort(candidates.begin(), candidates.end(), [](const Witness& a, const Witness& b) {
        return (a.verdict == Verdict::Fail) > (b.verdict == Verdict::Fail);
    });
    const std::size_t cap = std::max<std::size_t>(cfg.max_witnesses, 1);
    if (candidates.size() > cap) candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(cap), candidates.end());
    report.witnesses = std::move(candidates);

    // Always show the instance that came closest to breaking the claim.
    if (report.witnesses.empty() && !report.instances.empty() && !closest.empty()) {
        std::size_t idx = 0;
        for (std::size_t i = 1; i < report.instances.size(); ++i) {
            const bool tighter = report.relation == Relation::Greater
                                     ? report.instances[i].margin > report.instances[idx].margin
                                     : report.instances[i].margin < report.instances[idx].margin;
            if (tighter) idx = i;
        }
        const auto& rec = report.instances[idx];
        report.witnesses.push_back({closest[idx], rec.value, rec.reference, rec.margin, rec.verdict});
    }
    if (report.instances.empty()) report.notes.push_back("no instance satisfies the hypothesis; vacuous pass");
    report.runtime_seconds = std::chrono::duration<double>(Clock::now() - started).count();
}

VerificationReport run_sweep(const Sweep& sweep, const HarnessConfig& cfg) {
    const auto started = Clock::now();
    VerificationReport report = start_report(sweep.claim_id, sweep.r, sweep.t, sweep.relation, cfg);
    report.notes.push_back("instances restricted to left-compressed graphs; pass means no left-compressed "
                           "counterexample was found");
    if (sweep.on_fixed_vertices) report.parameters["n"] = sweep.t;
    if (sweep.explicit_m) {
        require(*sweep.explicit_m >= 1, "m must be positive");
        report.parameters["m"] = *sweep.explicit_m;
        report.m_values = {static_cast<std::uint64_t>(*sweep.explicit_m)};
        if (*sweep.explicit_m < sweep.range.lo || *sweep.explicit_m > sweep.range.hi) {
            report.notes.push_back("m = " + std::to_string(*sweep.explicit_m) + " lies outside the claimed range [" +
                                   std::to_string(sweep.range.lo) + ", " + std::to_string(sweep.range.hi) + "]");
        }
    } else {
        const SweepPolicy policy = cfg.sweep.value_or(default_policy(sweep.r, sweep.t));
        report.m_values = sweep_values(sweep.range, policy);
        if (sweep.range.empty()) {
            report.notes.push_back("claimed range [" + std::to_string(sweep.range.lo) + ", " +
                                   std::to_string(sweep.range.hi) + "] is empty for these parameters");
        } else if (policy != SweepPolicy::Exhaustive) {
            report.notes.push_back(std::string("m sampled (") +
                                   (policy == SweepPolicy::Sampled ? "endpoints plus interior" : "endpoints only") +
                                   ")");
        }
    }

    std::vector<Witness> candidates;
    std::vector<Hypergraph> all_graphs;
    for (const std::uint64_t m : report.m_values) {
        std::vector<Hypergraph> graphs;
        const Vertex n = sweep.ground(m);
        report.instances_enumerated += enumerate_left_compressed(
            static_cast<std::size_t>(sweep.r), m, n,
            [&](const Hypergraph& g) {
                Hypergraph h = sweep.on_fixed_vertices ? g : g.trimmed();
                if (sweep.filter(h, m)) graphs.push_back(std::move(h));
                return true;
            },
            cfg.budget, sweep.prefix(m));
        const auto solved = solve_all(graphs, cfg.solver, cfg.threads);
        const double target = sweep.target ? sweep.target(m) : report.reference_value;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            record(report, graphs[i], m, solved[i].value, target, solved[i].converged, candidates);
        }
        if (sweep.after_m) sweep.after_m(m, graphs, solved, report);
        for (auto& g : graphs) all_graphs.push_back(std::move(g));
    }
    if (report.unconverged > 0) {
        report.notes.push_back(std::to_string(report.unconverged) +
                               " instance(s) ended above the KKT tolerance; their values remain valid lower bounds");
    }
    finalize(report, std::move(candidates), std::move(all_graphs), cfg, started);
    return report;
}

Vertex unbounded_ground(std::int64_t r, std::uint64_t m) { return left_compressed_span(static_cast<std::size_t>(r), m); }

std::uint64_t prefix_len(std::int64_t size, std::int64_t r) {
    return size < r ? 0 : binomial(size, r);
}

}  // namespace

VerificationReport verify_colex_range(std::int64_t r, std::int64_t t, const HarnessConfig& cfg) {
    const auto started = Clock::now();
    const MRange range = clique_range(r, t);
    VerificationReport report = start_report("lemma-2.2", r, t, Relation::Equal, cfg);
    std::vector<Witness> candidates;
    std::vector<Hypergraph> graphs;
    for (const auto m : sweep_values(range, SweepPolicy::Exhaustive)) {
        report.m_values.push_back(m);
        Hypergraph g = colex_graph(static_cast<std::size_t>(r), m);
        const SolveReport solved = solve(g, cfg.solver);
        ++report.instances_enumerated;
        record(report, g, m, solved.value, report.reference_value, solved.converged, candidates);
        graphs.push_back(std::move(g));
    }
    finalize(report, std::move(candidates), std::move(graphs), cfg, started);
    if (report.verdict == Verdict::Pass && report.unconverged > 0) {
        report.verdict = Verdict::Inconclusive;
        report.notes.push_back("values match but some solves did not reach the KKT tolerance");
    }
    return report;
}

VerificationReport verify_sharpness(std::int64_t r, std::int64_t t, const HarnessConfig& cfg) {
    const auto started = Clock::now();
    require(r >= 2 && t >= r + 2, "sharpness check needs t >= r + 2");
    VerificationReport report = start_report("sharpness", r, t, Relation::Greater, cfg);
    const auto m = static_cast<std::uint64_t>(clique_range(r, t).hi + 1);
    report.parameters["m"] = static_cast<std::int64_t>(m);
    report.m_values = {m};
    const Hypergraph g = colex_graph(static_cast<std::size_t>(r), m);
    if (static_cast<std::int64_t>(g.n()) != t) {
        throw Error("internal: C_{r,m} one past the range should span t vertices");
    }
    const double heavy = 1.0 / static_cast<double>(t - 1);
    std::vector<double> w(static_cast<std::size_t>(t), heavy);
    w[static_cast<std::size_t>(t - 2)] = w[static_cast<std::size_t>(t - 1)] = heavy / 2.0;
    const double value = evaluate(g, Weighting::normalized(std::move(w)));
    report.instances_enumerated = 1;
    std::vector<Witness> candidates;
    record(report, g, m, value, report.reference_value, true, candidates);
    report.notes.push_back("value is the explicit weighting's evaluation, a lower bound on the Lagrangian");
    finalize(report, std::move(candidates), {g}, cfg, started);
    return report;
}

VerificationReport verify_conjecture_with_clique(std::int64_t r, std::int64_t t, std::optional<std::int64_t> m,
                                                 const HarnessConfig& cfg) {
    Sweep sweep;
    sweep.claim_id = "conjecture-2.1";
    sweep.r = r;
    sweep.t = t;
    sweep.relation = Relation::Equal;
    sweep.range = clique_range(r, t);
    sweep.explicit_m = m;
    sweep.ground = [r](std::uint64_t mm) { return unbounded_ground(r, mm); };
    // A left-compressed graph has a (t-1)-clique iff it contains [t-1]^{(r)},
    // which is a colex prefix.
    sweep.prefix = [r, t](std::uint64_t) { return prefix_len(t - 1, r); };
    sweep.filter = [t](const Hypergraph& g, std::uint64_t) {
        return static_cast<std::int64_t>(max_clique_order(g)) >= t - 1;
    };
    return run_sweep(sweep, cfg);
}

VerificationReport verify_conjecture_without_clique(std::int64_t r, std::int64_t t, std::optional<std::int64_t> m,
                                                    const HarnessConfig& cfg) {
    Sweep sweep;
    sweep.claim_id = "conjecture-2.2";
    sweep.r = r;
    sweep.t = t;
    sweep.relation = Relation::Less;
    sweep.range = clique_range(r, t);
    sweep.explicit_m = m;
    sweep.ground = [r](std::uint64_t mm) { return unbounded_ground(r, mm); };
    sweep.filter = [t](const Hypergraph& g, std::uint64_t) {
        return static_cast<std::int64_t>(max_clique_order(g)) < t - 1;
    };
    if (r == 3) {
        const std::int64_t proven_hi = sweep.range.hi - (t - 2);
        sweep.after_m = [proven_hi](std::uint64_t mm, const auto&, const auto&, VerificationReport& report) {
            if (static_cast<std::int64_t>(mm) > proven_hi) {
                report.notes.push_back("m = " + std::to_string(mm) + " is beyond the proven subrange (m <= " +
                                       std::to_string(proven_hi) + "); evidence for the open case");
            }
        };
    }
    return run_sweep(sweep, cfg);
}

VerificationReport verify_near_clique(std::int64_t t, std::optional<std::int64_t> m, const HarnessConfig& cfg) {
    require(t >= 6, "the near-clique bound is stated for t >= 6");
    Sweep sweep;
    sweep.claim_id = "theorem-3.1";
    sweep.r = 3;
    sweep.t = t;
    sweep.relation = Relation::Less;
    sweep.range = clique_range(3, t);
    sweep.explicit_m = m;
    sweep.ground = [](std::uint64_t mm) { return unbounded_ground(3, mm); };
    // Left-compressed and missing exactly one triple of [t-1]: that triple
    // is the colex-last one, so everything before it is present.
    sweep.prefix = [t](std::uint64_t) { return prefix_len(t - 1, 3) - 1; };
    sweep.filter = [t](const Hypergraph& g, std::uint64_t) {
        return contains_near_clique(g, static_cast<std::size_t>(t)) &&
               static_cast<std::int64_t>(max_clique_order(g)) < t - 1;
    };
    return run_sweep(sweep, cfg);
}

VerificationReport verify_on_t_vertices(OnTVariant variant, std::int64_t t, std::optional<std::int64_t> m,
                                        const HarnessConfig& cfg) {
    require(t >= 5, "claim needs t >= 5");
    Sweep sweep;
    sweep.claim_id = variant == OnTVariant::PairLinkAtMostThree ? "corollary-3.1" : "corollary-3.2";
    sweep.r = 3;
    sweep.t = t;
    sweep.relation = Relation::Less;
    sweep.range = clique_range(3, t);
    sweep.explicit_m = m;
    sweep.ground = [t](std::uint64_t) { return static_cast<Vertex>(t); };
    sweep.on_fixed_vertices = true;
    sweep.filter = [t, variant](const Hypergraph& g, std::uint64_t mm) {
        if (static_cast<std::int64_t>(max_clique_order(g)) >= t - 1) return false;
        if (variant == OnTVariant::PairLinkAtMostThree) {
            const auto top = static_cast<Vertex>(t);
            return link(g, {top - 1, top}).size() <= 3;
        }
        const Hypergraph colex = colex_graph(3, mm);
        std::vector<RSet> diff;
        std::set_symmetric_difference(g.edges().begin(), g.edges().end(), colex.edges().begin(), colex.edges().end(),
                                      std::back_inserter(diff));
        return diff.size() <= 6;
    };
    return run_sweep(sweep, cfg);
}

VerificationReport verify_dense_subgraph(DenseVariant variant, std::int64_t r, std::int64_t t,
                                         std::optional<std::int64_t> m, const HarnessConfig& cfg) {
    Sweep sweep;
    sweep.r = r;
    sweep.t = t;
    sweep.explicit_m = m;
    switch (variant) {
        case DenseVariant::MaxCliqueTMinus2:
            require(r == 3, "this variant is for 3-graphs");
            require(t >= 5, "this variant needs t >= 5");
            sweep.claim_id = "theorem-4.1";
            sweep.relation = Relation::Less;
            sweep.range = max_clique_t_minus_2_range(t);
            sweep.ground = [](std::uint64_t mm) { return unbounded_ground(3, mm); };
            sweep.prefix = [t](std::uint64_t) { return prefix_len(t - 2, 3); };
            // Maximum clique exactly t-2: contains one and no (t-1)-clique.
            sweep.filter = [t](const Hypergraph& g, std::uint64_t) {
                return static_cast<std::int64_t>(max_clique_order(g)) == t - 2;
            };
            break;
        case DenseVariant::CliqueTMinus2OnT:
            require(r >= 4, "this variant is for r >= 4");
            require(t >= r + 2, "this variant needs t >= r + 2");
            sweep.claim_id = "theorem-4.2";
            sweep.relation = Relation::LessEqual;
            sweep.range = dense_r_graph_range(r, t);
            sweep.ground = [t](std::uint64_t) { return static_cast<Vertex>(t); };
            sweep.on_fixed_vertices = true;
            sweep.prefix = [r, t](std::uint64_t) { return prefix_len(t - 2, r); };
            sweep.filter = [t](const Hypergraph& g, std::uint64_t) {
                return static_cast<std::int64_t>(max_clique_order(g)) >= t - 2;
            };
            sweep.after_m = [t](std::uint64_t mm, const std::vector<Hypergraph>& graphs, const auto&,
                                VerificationReport& report) {
                const auto holding = std::count_if(graphs.begin(), graphs.end(),
                                                   [t](const Hypergraph& g) { return top_link_deficit_dominates(g, t); });
                report.notes.push_back("m = " + std::to_string(mm) + ": " + std::to_string(holding) + " of " +
                                       std::to_string(graphs.size()) +
                                       " instances satisfy the top-link deficit inequality");
            };
            break;
        case DenseVariant::FourGraphClique:
            require(r == 4, "this variant is for 4-graphs");
            require(t >= 5, "this variant needs t >= 5");
            sweep.claim_id = "theorem-4.3";
            sweep.relation = Relation::Equal;
            sweep.range = four_graph_clique_range(t);
            sweep.ground = [](std::uint64_t mm) { return unbounded_ground(4, mm); };
            sweep.prefix = [t](std::uint64_t) { return prefix_len(t - 1, 4); };
            sweep.filter = [t](const Hypergraph& g, std::uint64_t) {
                return static_cast<std::int64_t>(max_clique_order(g)) >= t - 1;
            };
            break;
    }
    return run_sweep(sweep, cfg);
}

VerificationReport verify_colex_extremal(std::int64_t t, std::optional<std::int64_t> m, const HarnessConfig& cfg) {
    require(t >= 4, "claim needs t >= 4");
    Sweep sweep;
    sweep.claim_id = "theorem-5.1";
    sweep.r = 3;
    sweep.t = t;
    sweep.relation = Relation::LessEqual;
    sweep.range = colex_extremal_range(t);
    sweep.explicit_m = m;
    sweep.ground = [](std::uint64_t mm) { return unbounded_ground(3, mm); };
    auto colex_values = std::make_shared<std::map<std::uint64_t, double>>();
    sweep.target = [colex_values, &cfg](std::uint64_t mm) {
        auto it = colex_values->find(mm);
        if (it == colex_values->end()) it = colex_values->emplace(mm, solve(colex_graph(3, mm), cfg.solver).value).first;
        return it->second;
    };
    sweep.after_m = [](std::uint64_t mm, const std::vector<Hypergraph>& graphs, const std::vector<SolveReport>& solved,
                       VerificationReport& report) {
        if (graphs.empty()) return;
        // Structure of the value-maximal instance: with k support vertices,
        // at most k - 2 triples of [k-1] should be missing.
        std::size_t best = 0;
        for (std::size_t i = 1; i < solved.size(); ++i) {
            if (solved[i].value > solved[best].value + 1e-12) best = i;
        }
        const auto k = static_cast<std::int64_t>(solved[best].support.size());
        std::int64_t missing = 0;
        if (k - 1 >= 3) {
            for (const RSet& e : all_subsets(static_cast<Vertex>(k - 1), 3)) {
                if (!graphs[best].contains(e)) ++missing;
            }
        }
        std::ostringstream note;
        note << "m = " << mm << ": value-maximal instance has " << k << " support vertices, " << missing
             << " triple(s) of [k-1] missing (bound k-2 = " << k - 2 << ") -> "
             << (missing <= k - 2 ? "holds" : "violated");
        report.notes.push_back(note.str());
    };
    VerificationReport report = run_sweep(sweep, cfg);
    return report;
}

const std::vector<std::string>& claim_ids() {
    static const std::vector<std::string> ids{
        "lemma-2.2",   "sharpness",   "conjecture-2.1", "conjecture-2.2", "theorem-3.1",   "corollary-3.1",
        "corollary-3.2", "theorem-4.1", "theorem-4.2",  "theorem-4.3",    "theorem-5.1"};
    return ids;
}

VerificationReport run_claim(const std::string& claim_id, const ClaimParameters& p, const HarnessConfig& cfg) {
    auto fixed_r = [&](std::int64_t want) {
        if (p.r && *p.r != want) {
            throw InvalidParametersError(claim_id + " is stated for r = " + std::to_string(want));
        }
        return want;
    };
    auto no_m = [&] {
        if (p.m) throw InvalidParametersError(claim_id + " does not take --m");
    };
    if (claim_id == "lemma-2.2") {
        no_m();
        return verify_colex_range(p.r.value_or(3), p.t, cfg);
    }
    if (claim_id == "sharpness") {
        no_m();
        return verify_sharpness(p.r.value_or(3), p.t, cfg);
    }
    if (claim_id == "conjecture-2.1") return verify_conjecture_with_clique(p.r.value_or(3), p.t, p.m, cfg);
    if (claim_id == "conjecture-2.2") return verify_conjecture_without_clique(p.r.value_or(3), p.t, p.m, cfg);
    if (claim_id == "theorem-3.1") {
        fixed_r(3);
        return verify_near_clique(p.t, p.m, cfg);
    }
    if (claim_id == "corollary-3.1" || claim_id == "corollary-3.2") {
        fixed_r(3);
        return verify_on_t_vertices(
            claim_id == "corollary-3.1" ? OnTVariant::PairLinkAtMostThree : OnTVariant::NearColex, p.t, p.m, cfg);
    }
    if (claim_id == "theorem-4.1") return verify_dense_subgraph(DenseVariant::MaxCliqueTMinus2, fixed_r(3), p.t, p.m, cfg);
    if (claim_id == "theorem-4.2") {
        return verify_dense_subgraph(DenseVariant::CliqueTMinus2OnT, p.r.value_or(4), p.t, p.m, cfg);
    }
    if (claim_id == "theorem-4.3") return verify_dense_subgraph(DenseVariant::FourGraphClique, fixed_r(4), p.t, p.m, cfg);
    if (claim_id == "theorem-5.1") {
        fixed_r(3);
        return verify_colex_extremal(p.t, p.m, cfg);
    }
    throw InvalidParametersError("unknown claim \"" + claim_id + "\"");
}

}  // namespace hlag
