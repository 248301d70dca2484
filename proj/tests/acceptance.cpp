// Acceptance runner: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hlag/closed_forms.hpp"
#include "hlag/harness.hpp"
#include "hlag/lagrangian.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace hlag;

namespace {

struct Check {
    bool ok = true;
    std::string detail;
};

Check all_of(const std::vector<Check>& parts) {
    Check out;
    for (const auto& p : parts) {
        if (!p.detail.empty()) out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
        out.ok = out.ok && p.ok;
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

Check motzkin_straus_exactness() {
    gen::Rng rng(2024);
    std::uniform_int_distribution<Vertex> pick_n(2, 8);
    std::uniform_real_distribution<double> density(0.15, 0.95);
    std::vector<Hypergraph> corpus;
    while (corpus.size() < 200) {
        Hypergraph g = gen::random_graph(rng, 2, pick_n(rng), density(rng));
        if (!g.empty()) corpus.push_back(std::move(g));
    }
    for (Vertex t = 2; t <= 10; ++t) corpus.push_back(complete_graph(t, 2));
    double worst = 0;
    for (const auto& g : corpus) {
        const double t = static_cast<double>(oracle::max_clique(g));
        worst = std::max(worst, std::abs(solve(g).value - 0.5 * (1.0 - 1.0 / t)));
    }
    return {worst <= 1e-7, std::to_string(corpus.size()) + " graphs, max error " + fmt(worst)};
}

Check complete_graph_closed_form() {
    double worst = 0;
    int cases = 0;
    for (std::int64_t r = 2; r <= 4; ++r) {
        for (std::int64_t t = r; t <= 9; ++t) {
            const oracle::Exact exact(oracle::subsets(static_cast<Vertex>(t), static_cast<std::size_t>(r)).size(),
                                      boost::multiprecision::pow(boost::multiprecision::cpp_int(t),
                                                                 static_cast<unsigned>(r)));
            const double v = solve(complete_graph(static_cast<Vertex>(t), static_cast<std::size_t>(r))).value;
            worst = std::max(worst, std::abs(v - static_cast<double>(exact)));
            ++cases;
        }
    }
    bool rational_match = true;
    for (std::int64_t t = 5; t <= 10; ++t) {
        const Rational expr((t - 2) * (t - 3) * (t - 4), 24 * (t - 1) * (t - 1) * (t - 1));
        rational_match = rational_match && complete_lagrangian_exact(t - 1, 4) == expr;
    }
    return {worst <= 1e-7 && rational_match, std::to_string(cases) + " graphs, max error " + fmt(worst) +
                                                  (rational_match ? ", r=4 rational identity exact"
                                                                  : ", r=4 rational identity MISMATCH")};
}

Check colex_range_sweep() {
    std::vector<Check> parts;
    for (const auto [r, t] : {std::pair{3, 5}, {3, 6}, {3, 7}, {4, 7}}) {
        const auto rep = verify_colex_range(r, t);
        double worst = 0;
        for (const auto& rec : rep.instances) worst = std::max(worst, std::abs(rec.value - rec.reference));
        const bool ok = worst <= 1e-6 && rep.instances.size() == rep.m_values.size();
        parts.push_back({ok, "(" + std::to_string(r) + "," + std::to_string(t) + ") " +
                                 std::to_string(rep.instances.size()) + " m, max |diff| " + fmt(worst)});
    }
    return all_of(parts);
}

Check sharpness() {
    std::vector<Check> parts;
    for (const int t : {6, 7, 8}) {
        const auto rep = verify_sharpness(3, t);
        const double margin = rep.instances.at(0).value - rep.reference_value;
        bool ok = margin > 1e-4;
        if (t == 6) ok = ok && std::abs(rep.instances[0].value - 0.082) <= 1e-12;
        parts.push_back({ok, "t=" + std::to_string(t) + " excess " + fmt(margin)});
    }
    return all_of(parts);
}

// Every instance strictly below its target, nothing failed or left open.
Check strict_sweep(const VerificationReport& rep, const std::string& label) {
    std::size_t fails = 0;
    std::size_t open = 0;
    for (const auto& rec : rep.instances) {
        fails += rec.verdict == Verdict::Fail;
        open += rec.verdict == Verdict::Inconclusive;
    }
    const auto lo = rep.min_margin();
    return {rep.verdict == Verdict::Pass && fails == 0 && open == 0,
            label + ": " + std::to_string(rep.instances_checked) + " instances, " + std::to_string(fails) +
                " fail, " + std::to_string(open) + " inconclusive, min margin " + (lo ? fmt(*lo) : "n/a")};
}

HarnessConfig exhaustive() {
    HarnessConfig cfg;
    cfg.sweep = SweepPolicy::Exhaustive;
    return cfg;
}

Check conjecture_sweep() {
    return all_of({strict_sweep(verify_conjecture_without_clique(3, 5, std::nullopt, exhaustive()), "t=5"),
                   strict_sweep(verify_conjecture_without_clique(3, 6, std::nullopt, exhaustive()), "t=6")});
}

Check near_clique_sweep() { return strict_sweep(verify_near_clique(6, std::nullopt, exhaustive()), "t=6"); }

Check colex_extremal_sweep() {
    std::vector<Check> parts;
    for (const int t : {5, 6}) {
        const auto rep = verify_colex_extremal(t, std::nullopt, exhaustive());
        double worst = -1;
        for (const auto& rec : rep.instances) worst = std::max(worst, rec.value - rec.reference);
        parts.push_back({rep.verdict == Verdict::Pass && worst <= 1e-6,
                         "t=" + std::to_string(t) + ": " + std::to_string(rep.instances_checked) +
                             " instances, max excess over colex " + fmt(worst)});
    }
    return all_of(parts);
}

Check property_suites() {
    const std::vector<std::pair<const char*, props::Outcome>> runs{
        {"growth", props::growth_monotone(1000)},
        {"subgraph", props::subgraph_monotone(500)},
        {"colex", props::colex_bijection(12)},
        {"compress", props::compression_postconditions(500)},
        {"kkt", props::converged_reports_meet_kkt(200)},
        {"sorted", props::sorted_optimum_on_left_compressed(200)},
        {"enumeration", props::enumeration_matches_brute_force(5, 5)},
    };
    Check out;
    for (const auto& [name, o] : runs) {
        out.ok = out.ok && o.ok;
        if (!o.ok) out.detail += std::string(out.detail.empty() ? "" : "; ") + name + ": " + o.detail;
    }
    if (out.ok) out.detail = std::to_string(runs.size()) + " suites";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"Motzkin-Straus exactness", motzkin_straus_exactness},
        {"complete-graph closed form", complete_graph_closed_form},
        {"colex range sweep", colex_range_sweep},
        {"sharpness past the range", sharpness},
        {"clique-free sweep, t in {5,6}", conjecture_sweep},
        {"near-clique sweep, t=6", near_clique_sweep},
        {"colex extremality, t in {5,6}", colex_extremal_sweep},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        const Check c = criteria[i].second();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %zu: %s  %s (%s; %.1fs)\n", i + 1, c.ok ? "PASS" : "FAIL", criteria[i].first,
                    c.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !c.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
