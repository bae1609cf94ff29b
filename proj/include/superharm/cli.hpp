#pragma once

// Command-line front end. Output is assembled in memory and written once, so a run
// either emits a complete document or nothing.
// Exit codes: 0 verified, 1 verification failure, 2 usage or configuration error.

#include "superharm/report_io.hpp"
#include "superharm/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace superharm {

enum ExitCode { kExitOk = 0, kExitFailed = 1, kExitUsage = 2 };

struct RunConfig {
    std::string command;
    int m = 0;
    int n = 0;
    std::optional<int> k;
    std::optional<int> kmax;
    int guard = 12;
    bool generalized = false;
    bool deep = false;
    std::string target = "H";
    std::string format = "text";
    std::string suite = "all";
    std::string output;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

struct CommandResult {
    std::string text;
    Json json;
    int code = kExitOk;
};

inline SuperSignature config_signature(const RunConfig& cfg) { return SuperSignature(cfg.m, cfg.n); }

/// Degrees to process: {k} or 0..kmax.
inline std::vector<int> config_degrees(const RunConfig& cfg) {
    if (cfg.k && cfg.kmax) throw UsageError("give either --k or --kmax, not both");
    if (!cfg.k && !cfg.kmax) throw UsageError("one of --k or --kmax is required");
    const int top = cfg.k ? *cfg.k : *cfg.kmax;
    if (top > cfg.guard)
        throw UsageError("degree " + std::to_string(top) + " exceeds the guard " + std::to_string(cfg.guard) +
                         " (raise it with --guard)");
    if (cfg.k) return {*cfg.k};
    std::vector<int> out;
    for (int k = 0; k <= *cfg.kmax; ++k) out.push_back(k);
    return out;
}

inline Json envelope(const RunConfig& cfg, SuperSignature sig) {
    return Json{{"schema_version", kSchemaVersion}, {"command", cfg.command}, {"signature", signature_json(sig)}};
}

inline CommandResult cmd_fischer(const RunConfig& cfg) {
    const auto sig = config_signature(cfg);
    CommandResult out;
    out.json = envelope(cfg, sig);
    Json reports = Json::array();
    for (int k : config_degrees(cfg)) {
        auto r = fischer_decomposition(sig, k);
        out.text += to_text(r);
        reports.push_back(to_json(r));
        if (!r.verified) out.code = kExitFailed;
    }
    out.json["reports"] = reports;
    return out;
}

inline CommandResult cmd_branch(const RunConfig& cfg) {
    const auto sig = config_signature(cfg);
    if (sig.m == 0) throw UsageError("branch needs --m >= 1");
    CommandResult out;
    out.json = envelope(cfg, sig);
    Json reports = Json::array();
    for (int k : config_degrees(cfg)) {
        BranchingReport r;
        if (cfg.generalized) {
            if (!is_exceptional_degree(sig.superdimension(), k))
                throw UsageError("--generalized needs M in -2N_0 and k in I_M; I_M here is " +
                                 ints_text(exceptional_indices(sig.superdimension())));
            r = branch_generalized(sig, k);
        } else {
            r = branch_harmonic(sig, k, cfg.deep);
        }
        out.text += to_text(r);
        reports.push_back(to_json(r));
        if (!r.verified) out.code = kExitFailed;
    }
    out.json["reports"] = reports;
    return out;
}

inline CommandResult cmd_gt_basis(const RunConfig& cfg) {
    const auto sig = config_signature(cfg);
    if (!cfg.k) throw UsageError("gt-basis needs --k");
    config_degrees(cfg);
    const int k = *cfg.k;
    const GTTarget target = cfg.target == "Htilde" ? GTTarget::Htilde : GTTarget::H;
    if (target == GTTarget::Htilde && !generalized_target_defined(sig, k))
        throw UsageError("--target Htilde needs M in -2N_0 and k in I_M");
    const GTBasis& basis = gt_basis(sig, k, target);
    auto v = verify_gt_basis(sig, k, target);
    CommandResult out;
    out.json = envelope(cfg, sig);
    out.json["basis"] = to_json(basis);
    out.json["verification"] = Json{{"cardinality", v.cardinality},
                                    {"independent", v.independent},
                                    {"annihilated", v.annihilated},
                                    {"level_compatible", v.level_compatible},
                                    {"expected_dim", v.expected_dim},
                                    {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
                                    {"passed", v.verdict()}};
    out.text = to_text(basis);
    if (!v.verdict()) out.code = kExitFailed;
    return out;
}

inline CommandResult cmd_verify(const RunConfig& cfg) {
    const auto sig = config_signature(cfg);
    if (cfg.k) throw UsageError("verify takes --kmax");
    const auto degrees = config_degrees(cfg);
    auto outcome = run_suite(cfg.suite, sig, degrees.back());
    CommandResult out;
    out.json = envelope(cfg, sig);
    out.json["suite"] = outcome.suite;
    out.json["kmax"] = outcome.kmax;
    Json results = Json::array();
    std::ostringstream text;
    text << "verify " << outcome.suite << " " << to_string(sig) << " kmax=" << outcome.kmax << "\n";
    for (const auto& r : outcome.results) {
        results.push_back({{"property", r.property},
                           {"m", r.sig.m},
                           {"n", r.sig.n},
                           {"k", r.k},
                           {"passed", r.passed},
                           {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}});
        text << (r.passed ? "  ok   " : "  FAIL ") << "k=" << r.k << " " << r.property << "\n";
        if (r.witness) text << "       witness: " << *r.witness << "\n";
    }
    for (const auto& s : outcome.skipped) text << "  skip " << s << "\n";
    text << (outcome.passed ? "passed" : "failed") << " (" << outcome.results.size() << " properties)\n";
    out.json["results"] = results;
    out.json["skipped"] = outcome.skipped;
    out.json["passed"] = outcome.passed;
    out.text = text.str();
    out.code = outcome.passed ? kExitOk : kExitFailed;
    return out;
}

inline CommandResult dispatch(const RunConfig& cfg) {
    if (cfg.command == "fischer") return cmd_fischer(cfg);
    if (cfg.command == "branch") return cmd_branch(cfg);
    if (cfg.command == "gt-basis") return cmd_gt_basis(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    throw UsageError("unknown command: " + cfg.command);
}

inline void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--m", cfg.m, "bosonic dimension m")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("--n", cfg.n, "fermionic pairs n (2n Grassmann variables)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", cfg.output, "write to this file instead of standard output");
    sub->add_option("--guard", cfg.guard, "largest degree accepted")->check(CLI::NonNegativeNumber);
}

inline void add_degree(CLI::App* sub, RunConfig& cfg, bool single, bool range) {
    if (single)
        sub->add_option_function<int>("--k", [&cfg](const int& v) { cfg.k = v; }, "degree")
            ->check(CLI::NonNegativeNumber);
    if (range)
        sub->add_option_function<int>("--kmax", [&cfg](const int& v) { cfg.kmax = v; }, "all degrees 0..kmax")
            ->check(CLI::NonNegativeNumber);
}

} // namespace detail

/// Parses argv, runs the command and writes its output to `out` (or --output). Diagnostics go to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Harmonic analysis on the superspace R^{m|2n} with exact rational arithmetic", "superharm"};
    app.require_subcommand(1);

    auto* fischer = app.add_subcommand("fischer", "Fischer decomposition of P_k");
    detail::add_common(fischer, cfg);
    detail::add_degree(fischer, cfg, true, true);

    auto* branch = app.add_subcommand("branch", "branching of H_k (or Htilde_k) to the hyperplane");
    detail::add_common(branch, cfg);
    detail::add_degree(branch, cfg, true, true);
    branch->add_flag("--generalized", cfg.generalized, "branch Htilde_k for k in I_M");
    branch->add_flag("--deep", cfg.deep, "also test summand stability under the hyperplane generators");

    auto* gt = app.add_subcommand("gt-basis", "Gelfand-Tsetlin basis of H_k or Htilde_k");
    detail::add_common(gt, cfg);
    detail::add_degree(gt, cfg, true, false);
    gt->add_option("--target", cfg.target, "H or Htilde")->check(CLI::IsMember({"H", "Htilde"}));

    auto* verify = app.add_subcommand("verify", "run a verification suite for degrees 0..kmax");
    detail::add_common(verify, cfg);
    detail::add_degree(verify, cfg, false, true);
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", cfg.suite, "sl2, fischer, theoremA, ck, branching, gt, invariance or all")
        ->check(CLI::IsMember(suites));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    detail::CommandResult result;
    try {
        result = detail::dispatch(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string payload = cfg.format == "json" ? result.json.dump(2) + "\n" : result.text;
    if (cfg.output.empty()) {
        out << payload << std::flush;
    } else {
        std::ofstream file(cfg.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << cfg.output << "\n";
            return kExitUsage;
        }
        file << payload;
    }
    if (result.code == kExitFailed) err << "verification failed\n";
    return result.code;
}

} // namespace superharm
