#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlag/enumeration.hpp"
#include "hlag/hypergraph.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

enum class Verdict { Pass, Fail, Inconclusive };

// How a claim relates the Lagrangian of each instance to the reference.
enum class Relation { Equal, Less, LessEqual, Greater };

const char* to_string(Verdict v);
const char* to_string(Relation r);

enum class SweepPolicy {
    Exhaustive,  // every m in the claimed range
    Sampled,     // both endpoints plus three evenly spaced interior values
    Endpoints,   // range endpoints only
};

struct HarnessConfig {
    SolverConfig solver;
    EnumerationBudget budget;
    // Overrides the default policy (r = 3: exhaustive up to t = 7, sampled
    // beyond; r >= 4: endpoints).
    std::optional<SweepPolicy> sweep;
    // Worker threads for per-instance solves; 0 picks the hardware count.
    std::size_t threads = 0;
    std::size_t max_witnesses = 16;
};

struct InstanceRecord {
    std::uint64_t m = 0;
    std::string edge_hash;
    double value = 0.0;
    double reference = 0.0;  // the value the instance was compared against
    double margin = 0.0;     // reference - value
    Verdict verdict = Verdict::Pass;
    bool converged = true;
};

struct Witness {
    Hypergraph graph;
    double value = 0.0;
    double reference = 0.0;
    double margin = 0.0;
    Verdict verdict = Verdict::Pass;
};

struct VerificationReport {
    std::string claim_id;
    std::map<std::string, std::int64_t> parameters;
    Relation relation = Relation::Equal;
    Verdict verdict = Verdict::Pass;
    double tolerance = 0.0;
    // Lagrangian of [t-1]^{(r)}; always complete_lagrangian(t - 1, r).
    double reference_value = 0.0;
    std::vector<std::uint64_t> m_values;
    std::uint64_t instances_enumerated = 0;
    std::uint64_t instances_checked = 0;
    std::uint64_t unconverged = 0;
    std::vector<InstanceRecord> instances;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    double runtime_seconds = 0.0;

    std::optional<double> min_margin() const;
    std::optional<double> max_margin() const;
};

// Classifies a single lower-bound value against a target under a relation.
Verdict classify(Relation relation, double value, double target, double tolerance, bool converged);

// Claim ranges, as closed integer intervals [lo, hi] (hi < lo when empty).
struct MRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    bool empty() const noexcept { return hi < lo; }
};
// C(t-1, r) .. C(t-1, r) + C(t-2, r-1).
MRange clique_range(std::int64_t r, std::int64_t t);
// r = 3 only: upper end lowered by (t-2)/2, rounded down.
MRange max_clique_t_minus_2_range(std::int64_t t);
// Upper end lowered by 2^{r-2} (C(t-2, r-2) - 1).
MRange dense_r_graph_range(std::int64_t r, std::int64_t t);
// r = 4 only: C(t-1, 4) .. C(t-1, 4) + C(floor((t-2)/2), 3).
MRange four_graph_clique_range(std::int64_t t);
// r = 3 only: upper end lowered by t - 4.
MRange colex_extremal_range(std::int64_t t);

// m values a sweep visits under the given policy.
std::vector<std::uint64_t> sweep_values(const MRange& range, SweepPolicy policy);
SweepPolicy default_policy(std::int64_t r, std::int64_t t);

// |[t-2]^{(r-1)} \ E_t| >= 2^{r-3} |E_{(t-1)t}|, evaluated exactly. g must be
// on exactly t vertices and r >= 3.
bool top_link_deficit_dominates(const Hypergraph& g, std::int64_t t);

// Each operation below enumerates (or constructs) the instances a claim is
// about, solves them, and compares against the reference with the claim's
// relation. Enumerations are restricted to left-compressed graphs, so a pass
// means no left-compressed counterexample was found. When `m` is given only
// that edge count is checked.

// C_{r,m} attains the Lagrangian of [t-1]^{(r)} across the whole clique range.
VerificationReport verify_colex_range(std::int64_t r, std::int64_t t, const HarnessConfig& cfg = {});

// One edge past the range, the weighting (1/(t-1), ..., 1/(2(t-1)), 1/(2(t-1)))
// on C_{r,m} already beats [t-1]^{(r)}.
VerificationReport verify_sharpness(std::int64_t r, std::int64_t t, const HarnessConfig& cfg = {});

// Graphs containing a (t-1)-clique have exactly the clique's Lagrangian.
VerificationReport verify_conjecture_with_clique(std::int64_t r, std::int64_t t, std::optional<std::int64_t> m,
                                                 const HarnessConfig& cfg = {});

// Graphs without a (t-1)-clique stay strictly below it.
VerificationReport verify_conjecture_without_clique(std::int64_t r, std::int64_t t, std::optional<std::int64_t> m,
                                                    const HarnessConfig& cfg = {});

// 3-graphs containing K_{t-1} minus an edge but not K_{t-1} stay strictly below.
VerificationReport verify_near_clique(std::int64_t t, std::optional<std::int64_t> m, const HarnessConfig& cfg = {});

enum class OnTVariant {
    PairLinkAtMostThree,  // |E_{(t-1)t}| <= 3
    NearColex,            // |E symmetric-difference E(C_{3,m})| <= 6
};
// Left-compressed 3-graphs on [t] without a (t-1)-clique, filtered by the variant.
VerificationReport verify_on_t_vertices(OnTVariant variant, std::int64_t t, std::optional<std::int64_t> m,
                                        const HarnessConfig& cfg = {});

enum class DenseVariant {
    MaxCliqueTMinus2,  // r = 3, maximum clique exactly t-2, strict bound
    CliqueTMinus2OnT,  // r >= 4, on t vertices, clique >= t-2, non-strict bound
    FourGraphClique,   // r = 4, containing [t-1]^{(4)}, equality
};
VerificationReport verify_dense_subgraph(DenseVariant variant, std::int64_t r, std::int64_t t,
                                         std::optional<std::int64_t> m, const HarnessConfig& cfg = {});

// No left-compressed 3-graph with m edges beats C_{3,m}.
VerificationReport verify_colex_extremal(std::int64_t t, std::optional<std::int64_t> m, const HarnessConfig& cfg = {});

struct ClaimParameters {
    std::optional<std::int64_t> r;
    std::int64_t t = 0;
    std::optional<std::int64_t> m;
};

// Claim identifiers accepted by run_claim, in display order.
const std::vector<std::string>& claim_ids();

// Dispatches a claim identifier (e.g. "lemma-2.2", "theorem-3.1") to the
// matching verification. Throws InvalidParametersError for unknown ids.
VerificationReport run_claim(const std::string& claim_id, const ClaimParameters& params, const HarnessConfig& cfg = {});

}  // namespace hlag
