#pragma once

#include <iosfwd>
#include <string>

#include "hlag/harness.hpp"
#include "hlag/hypergraph.hpp"
#include "hlag/lagrangian.hpp"

namespace hlag {

struct ReportOptions {
    bool include_timing = false;   // runtime_seconds makes output run-dependent
    bool include_instances = true; // per-instance rows in JSON
};

// Text mode prints 15 significant digits; JSON and CSV print 17, which
// round-trips every double.
std::string format_text_number(double v);
std::string format_exact_number(double v);

std::string solve_report_json(const Hypergraph& g, const SolveReport& report);
std::string solve_report_text(const Hypergraph& g, const SolveReport& report);

std::string verification_json(const VerificationReport& report, const ReportOptions& options = {});
std::string verification_csv(const VerificationReport& report);
std::string verification_text(const VerificationReport& report, const ReportOptions& options = {});

}  // namespace hlag
