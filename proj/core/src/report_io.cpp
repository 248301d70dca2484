#include "hlag/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "hlag/hypergraph_io.hpp"

namespace hlag {

namespace {

using nlohmann::ordered_json;

std::string format_with(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

// nlohmann prints doubles with the shortest round-tripping form; raw
// number_float values keep that, so JSON stays exact.
ordered_json weights_json(const Weighting& w) { return ordered_json(w.values()); }

ordered_json optional_json(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

std::string join_vertices(const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vs[i]);
    }
    return out;
}

std::string join_weights(const Weighting& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += format_text_number(w[i]);
    }
    return out;
}

}  // namespace

std::string format_text_number(double v) { return format_with("%.15g", v); }
std::string format_exact_number(double v) { return format_with("%.17g", v); }

std::string solve_report_json(const Hypergraph& g, const SolveReport& report) {
    ordered_json j;
    j["r"] = g.r();
    j["n"] = g.n();
    j["m"] = g.m();
    j["edge_hash"] = edge_hash(g);
    j["value"] = report.value;
    j["converged"] = report.converged;
    j["kkt_residual"] = report.kkt_residual;
    j["support"] = report.support;
    j["support_pairs_covered"] = report.support_pairs_covered;
    j["weighting"] = weights_json(report.weighting);
    j["raw_weighting"] = weights_json(report.raw_weighting);
    j["iterations"] = report.iterations;
    j["restarts_used"] = report.restarts_used;
    j["best_restart"] = report.best_restart;
    j["clique_order"] = report.clique_order ? ordered_json(*report.clique_order) : ordered_json(nullptr);
    j["clique_lower_bound"] = optional_json(report.clique_lower_bound);
    j["motzkin_straus_value"] = optional_json(report.motzkin_straus_value);
    return j.dump(2) + "\n";
}

std::string solve_report_text(const Hypergraph& g, const SolveReport& report) {
    std::ostringstream out;
    out << "graph         r=" << g.r() << " n=" << g.n() << " m=" << g.m() << " hash=" << edge_hash(g) << "\n";
    out << "value         " << format_text_number(report.value) << "\n";
    out << "converged     " << (report.converged ? "yes" : "no") << "\n";
    out << "kkt_residual  " << format_text_number(report.kkt_residual) << "\n";
    out << "support       {" << join_vertices(report.support) << "}"
        << (report.support_pairs_covered ? "" : "  (some support pair shares no edge)") << "\n";
    out << "weighting     " << join_weights(report.weighting) << "\n";
    out << "raw           " << join_weights(report.raw_weighting) << "\n";
    out << "iterations    " << report.iterations << " over " << report.restarts_used << " restarts (best #"
        << report.best_restart << ")\n";
    if (report.clique_order) {
        out << "clique        order " << *report.clique_order << ", lower bound "
            << format_text_number(report.clique_lower_bound.value_or(0.0)) << "\n";
    }
    if (report.motzkin_straus_value) {
        out << "exact (r=2)   " << format_text_number(*report.motzkin_straus_value) << "\n";
    }
    return out.str();
}

std::string verification_json(const VerificationReport& report, const ReportOptions& options) {
    ordered_json j;
    j["claim_id"] = report.claim_id;
    j["parameters"] = report.parameters;
    j["relation"] = to_string(report.relation);
    j["verdict"] = to_string(report.verdict);
    j["tolerance"] = report.tolerance;
    j["reference_value"] = report.reference_value;
    j["m_values"] = report.m_values;
    j["instances_enumerated"] = report.instances_enumerated;
    j["instances_checked"] = report.instances_checked;
    j["unconverged"] = report.unconverged;
    const auto lo = report.min_margin();
    const auto hi = report.max_margin();
    j["margin"] = {{"min", optional_json(lo)}, {"max", optional_json(hi)}};
    auto& witnesses = j["witnesses"] = ordered_json::array();
    for (const auto& w : report.witnesses) {
        witnesses.push_back({{"verdict", to_string(w.verdict)},
                             {"value", w.value},
                             {"reference", w.reference},
                             {"margin", w.margin},
                             {"edge_hash", edge_hash(w.graph)},
                             {"hypergraph", to_text(w.graph)}});
    }
    if (options.include_instances) {
        auto& rows = j["instances"] = ordered_json::array();
        for (const auto& rec : report.instances) {
            rows.push_back({{"m", rec.m},
                            {"edge_hash", rec.edge_hash},
                            {"value", rec.value},
                            {"reference", rec.reference},
                            {"margin", rec.margin},
                            {"converged", rec.converged},
                            {"verdict", to_string(rec.verdict)}});
        }
    }
    j["notes"] = report.notes;
    if (options.include_timing) j["runtime_seconds"] = report.runtime_seconds;
    return j.dump(2) + "\n";
}

std::string verification_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "m,edge_hash,value,reference,margin,verdict\n";
    for (const auto& rec : report.instances) {
        out << rec.m << ',' << rec.edge_hash << ',' << format_exact_number(rec.value) << ','
            << format_exact_number(rec.reference) << ',' << format_exact_number(rec.margin) << ','
            << to_string(rec.verdict) << '\n';
    }
    return out.str();
}

std::string verification_text(const VerificationReport& report, const ReportOptions& options) {
    std::ostringstream out;
    out << report.claim_id << ": " << to_string(report.verdict) << "\n";
    out << "parameters   ";
    for (const auto& [k, v] : report.parameters) out << k << '=' << v << ' ';
    out << "\n";
    out << "relation     value " << to_string(report.relation) << " reference (tolerance "
        << format_text_number(report.tolerance) << ")\n";
    out << "reference    " << format_text_number(report.reference_value) << "\n";
    out << "m values     ";
    for (const auto m : report.m_values) out << m << ' ';
    out << "\n";
    out << "instances    " << report.instances_checked << " checked of " << report.instances_enumerated
        << " enumerated, " << report.unconverged << " unconverged\n";
    if (const auto lo = report.min_margin()) {
        out << "margins      min " << format_text_number(*lo) << ", max " << format_text_number(*report.max_margin())
            << "\n";
    }
    for (const auto& w : report.witnesses) {
        out << "witness      " << to_string(w.verdict) << " value " << format_text_number(w.value) << " reference "
            << format_text_number(w.reference) << " margin " << format_text_number(w.margin) << "\n";
        std::istringstream lines(to_text(w.graph));
        for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
    }
    for (const auto& note : report.notes) out << "note         " << note << "\n";
    if (options.include_timing) out << "runtime      " << format_text_number(report.runtime_seconds) << " s\n";
    return out.str();
}

}  // namespace hlag
