#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hlag/clique.hpp"
#include "hlag/compression.hpp"
#include "hlag/errors.hpp"
#include "hlag/harness.hpp"
#include "hlag/hypergraph_io.hpp"
#include "hlag/lagrangian.hpp"
#include "hlag/link.hpp"
#include "hlag/report_io.hpp"
#include "weights.hpp"

namespace hlag::cli {

namespace {

enum class Format { Json, Csv, Text };

const std::map<std::string, Format> kFormats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
const std::map<std::string, SweepPolicy> kPolicies{
    {"exhaustive", SweepPolicy::Exhaustive}, {"sampled", SweepPolicy::Sampled}, {"endpoints", SweepPolicy::Endpoints}};

struct Options {
    SolverConfig solver;
    bool no_clique_starts = false;
    std::string output;

    std::size_t gen_r = 3;
    std::uint64_t gen_m = 0;
    Vertex gen_t = 0;

    std::string file;
    Format format = Format::Text;
    std::string weights;
    std::vector<Vertex> pins;
    bool complement = false;
    std::optional<Vertex> minus;

    std::string claim;
    std::optional<std::int64_t> r;
    std::int64_t t = 0;
    std::optional<std::int64_t> m;
    Format verify_format = Format::Json;
    EnumerationBudget budget;
    std::optional<SweepPolicy> sweep;
    std::size_t threads = 0;
    std::size_t max_witnesses = 16;
    bool timing = false;
};

void emit(const Options& opt, std::ostream& out, const std::string& text) {
    if (opt.output.empty() || opt.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw Error("cannot write " + opt.output);
    file << text;
}

void add_solver_flags(CLI::App& app, Options& opt) {
    auto* g = "Solver";
    app.add_option("--restarts", opt.solver.restarts, "Multistart trials")->group(g)->capture_default_str();
    app.add_option("--max-iterations", opt.solver.max_iterations, "Growth steps per trial")
        ->group(g)
        ->capture_default_str();
    app.add_option("--step-gain-floor", opt.solver.step_gain_floor, "Stop a trial below this gain")
        ->group(g)
        ->capture_default_str();
    app.add_option("--kkt-tolerance", opt.solver.kkt_tolerance, "Residual counted as converged")
        ->group(g)
        ->capture_default_str();
    app.add_option("--support-threshold", opt.solver.support_threshold, "Weights at or below are zeroed")
        ->group(g)
        ->capture_default_str();
    app.add_option("--equality-tolerance", opt.solver.equality_tolerance, "Verdict tolerance")
        ->group(g)
        ->capture_default_str();
    app.add_option("--seed", opt.solver.seed, "Random seed")->envname("HLAG_SEED")->group(g)->capture_default_str();
    app.add_flag("--no-clique-starts", opt.no_clique_starts, "Skip uniform-on-clique starts")->group(g);
    app.add_option("--clique-budget", opt.solver.clique_budget, "Vertex cap for exact clique search")
        ->group(g)
        ->capture_default_str();
}

std::string link_text(const LinkView& view) {
    std::ostringstream out;
    out << view.label() << ": " << view.size() << " set(s) of size " << view.set_size << "\n";
    for (const RSet& s : view.sets) out << s.to_string() << "\n";
    return out.str();
}

int run_eval(const Options& opt, std::ostream& out) {
    const Hypergraph g = read_hypergraph_file(opt.file);
    const auto parsed = parse_weight_list(opt.weights);
    if (parsed.size() != g.n()) {
        throw InvalidParametersError("expected " + std::to_string(g.n()) + " weights, got " +
                                     std::to_string(parsed.size()));
    }
    std::vector<double> values;
    bool all_exact = true;
    ExactRational sum = 0;
    for (const auto& w : parsed) {
        values.push_back(w.value);
        all_exact = all_exact && w.exact.has_value();
        if (w.exact) sum += *w.exact;
    }
    if (all_exact && sum != 1) throw InvalidParametersError("weights sum to " + sum.str() + ", not 1");
    const double value = evaluate(g, Weighting(std::move(values)));
    out << format_text_number(value) << "\n";
    if (all_exact) {
        ExactRational exact = 0;
        for (const RSet& e : g.edges()) {
            ExactRational term = 1;
            for (const Vertex v : e) term *= *parsed[v - 1].exact;
            exact += term;
        }
        out << "exact " << exact.str() << "\n";
    }
    return kOk;
}

int verdict_status(Verdict v) {
    switch (v) {
        case Verdict::Pass: return kOk;
        case Verdict::Fail: return kFail;
        case Verdict::Inconclusive: return kInconclusive;
    }
    return kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Lagrangians of uniform hypergraphs", "hlag"};
    app.set_config("--config", "", "TOML or INI file with option defaults");
    app.require_subcommand(1, 1);
    app.fallthrough();
    add_solver_flags(app, opt);
    app.add_option("-o,--output", opt.output, "Write to a file instead of stdout");

    auto* gen = app.add_subcommand("gen", "Write a standard hypergraph");
    gen->require_subcommand(1, 1);
    auto* gen_colex = gen->add_subcommand("colex", "The first m r-sets in colex order");
    gen_colex->add_option("--r", opt.gen_r, "Uniformity")->required()->check(CLI::Range(2, 64));
    gen_colex->add_option("--m", opt.gen_m, "Edge count")->required()->check(CLI::PositiveNumber);
    auto* gen_complete = gen->add_subcommand("complete", "All r-subsets of [t]");
    gen_complete->add_option("--r", opt.gen_r, "Uniformity")->required()->check(CLI::Range(2, 64));
    gen_complete->add_option("--t", opt.gen_t, "Vertex count")->required()->check(CLI::PositiveNumber);

    auto* solve_cmd = app.add_subcommand("solve", "Maximize the Lagrangian");
    solve_cmd->add_option("FILE", opt.file, "Hypergraph file")->required();
    solve_cmd->add_option("--format", opt.format, "json or text")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}}));

    auto* eval = app.add_subcommand("eval", "Evaluate at a given weighting");
    eval->add_option("FILE", opt.file, "Hypergraph file")->required();
    eval->add_option("--weights", opt.weights, "Comma separated, e.g. 1/3,1/3,1/3")->required();

    auto* compress = app.add_subcommand("compress", "Left-compress a hypergraph");
    compress->add_option("FILE", opt.file, "Hypergraph file")->required();

    auto* clique = app.add_subcommand("clique", "Maximum clique order");
    clique->add_option("FILE", opt.file, "Hypergraph file")->required();

    auto* link_cmd = app.add_subcommand("link", "Link of one or two vertices");
    link_cmd->add_option("FILE", opt.file, "Hypergraph file")->required();
    link_cmd->add_option("--pin", opt.pins, "i or i,j")->required()->delimiter(',')->expected(1, 2);
    link_cmd->add_flag("--complement", opt.complement, "Sets completing to non-edges");
    link_cmd->add_option("--minus", opt.minus, "Drop sets that also complete through this vertex");

    auto* verify = app.add_subcommand("verify", "Check a claim over enumerated instances");
    verify->add_option("CLAIM", opt.claim, "Claim identifier")->required()->check(CLI::IsMember(claim_ids()));
    verify->add_option("--t", opt.t, "Clique parameter t")->required();
    verify->add_option("--r", opt.r, "Uniformity");
    verify->add_option("--m", opt.m, "Check this edge count only");
    verify->add_option("--format", opt.verify_format, "json, csv or text")
        ->transform(CLI::CheckedTransformer(kFormats));
    verify->add_option("--budget", opt.budget.max_instances, "Enumeration cap on instances")->capture_default_str();
    verify->add_option("--max-vertices", opt.budget.max_vertices, "Enumeration cap on ground-set size")
        ->capture_default_str();
    verify->add_option("--max-edges", opt.budget.max_edges, "Enumeration cap on edge count")->capture_default_str();
    verify->add_option("--sweep", opt.sweep, "exhaustive, sampled or endpoints")
        ->transform(CLI::CheckedTransformer(kPolicies));
    verify->add_option("--threads", opt.threads, "Solver threads (0: all cores)")->capture_default_str();
    verify->add_option("--max-witnesses", opt.max_witnesses, "Witness cap")->capture_default_str();
    verify->add_flag("--timing", opt.timing, "Include runtime in the report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    opt.solver.clique_starts = !opt.no_clique_starts;

    try {
        if (gen_colex->parsed()) {
            emit(opt, out, to_text(colex_graph(opt.gen_r, opt.gen_m)));
        } else if (gen_complete->parsed()) {
            emit(opt, out, to_text(complete_graph(opt.gen_t, opt.gen_r)));
        } else if (solve_cmd->parsed()) {
            const Hypergraph g = read_hypergraph_file(opt.file);
            const SolveReport report = solve(g, opt.solver);
            emit(opt, out, opt.format == Format::Json ? solve_report_json(g, report) : solve_report_text(g, report));
        } else if (eval->parsed()) {
            return run_eval(opt, out);
        } else if (compress->parsed()) {
            emit(opt, out, to_text(left_compress(read_hypergraph_file(opt.file))));
        } else if (clique->parsed()) {
            const Hypergraph g = read_hypergraph_file(opt.file);
            const auto vertices = find_max_clique(g, opt.solver.clique_budget);
            std::ostringstream text;
            text << max_clique_order(g, opt.solver.clique_budget) << "\n";
            if (!vertices.empty() && vertices.size() >= g.r()) text << RSet(vertices).to_string() << "\n";
            emit(opt, out, text.str());
        } else if (link_cmd->parsed()) {
            const Hypergraph g = read_hypergraph_file(opt.file);
            emit(opt, out, link_text(link(g, opt.pins, opt.complement, opt.minus)));
        } else if (verify->parsed()) {
            HarnessConfig cfg;
            cfg.solver = opt.solver;
            cfg.budget = opt.budget;
            cfg.sweep = opt.sweep;
            cfg.threads = opt.threads;
            cfg.max_witnesses = opt.max_witnesses;
            const VerificationReport report = run_claim(opt.claim, {opt.r, opt.t, opt.m}, cfg);
            ReportOptions ro;
            ro.include_timing = opt.timing;
            switch (opt.verify_format) {
                case Format::Json: emit(opt, out, verification_json(report, ro)); break;
                case Format::Csv: emit(opt, out, verification_csv(report)); break;
                case Format::Text: emit(opt, out, verification_text(report, ro)); break;
            }
            return verdict_status(report.verdict);
        }
    } catch (const ResourceLimitError& e) {
        err << "hlag: resource limit \"" << e.limit() << "\" exceeded: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const std::exception& e) {
        err << "hlag: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

}  // namespace hlag::cli
