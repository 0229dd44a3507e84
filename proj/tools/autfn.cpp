// autfn: exact verification of torsion subgroups of free-group automorphism
// groups, Euler-characteristic divisibility obstructions, and fixed-point
// stratification identities on finite equivariant complexes.
//
// Exit codes: 0 all checks pass / verdict computed; 1 a mathematical check
// failed (this should never happen on valid inputs); 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "autfn/audit.hpp"
#include "autfn/equivariant.hpp"
#include "autfn/errors.hpp"
#include "autfn/io.hpp"
#include "autfn/manifold.hpp"
#include "autfn/obstruction.hpp"
#include "autfn/report.hpp"

namespace {

using namespace autfn;

std::optional<std::size_t> env_cap() {
    const char* raw = std::getenv("AUTFN_CAP");
    if (!raw) return std::nullopt;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size() || v == 0)
            throw InputError("");
        return static_cast<std::size_t>(v);
    } catch (...) {
        throw InputError(std::string("AUTFN_CAP must be a positive integer, got '") +
                         raw + "'");
    }
}

std::pair<int, int> parse_n_range(const std::string& text) {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos)
        throw InputError("--n-range expects the form a..b, got '" + text + "'");
    try {
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        if (a > b) throw InputError("");
        return {a, b};
    } catch (const InputError&) {
        throw InputError("--n-range expects a <= b in 'a..b', got '" + text + "'");
    } catch (...) {
        throw InputError("--n-range expects integers in 'a..b', got '" + text + "'");
    }
}

EquivariantComplex load_equivariant(const std::string& complex_path,
                                    const std::string& action_path,
                                    const std::string& orientation_path,
                                    std::size_t cap) {
    Complex c = load_complex(complex_path);
    if (!orientation_path.empty()) load_orientation(c, orientation_path);
    std::vector<Perm> gens = load_action(action_path, c.vertex_count());
    return make_equivariant(std::move(c), std::move(gens), cap);
}

EquivariantComplex regularized(EquivariantComplex e) {
    int rounds = 0;
    e = regularize(std::move(e), 2, &rounds);
    if (rounds > 0)
        std::cerr << "note: applied " << rounds
                  << " barycentric subdivision(s) to make the action regular\n";
    return e;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact torsion, Euler-characteristic and fixed-point verifications for "
        "automorphism groups of free groups acting on manifolds and complexes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "tsv";
    app.add_option("--format", format, "Output format: tsv or json-lines")
        ->check(CLI::IsMember({"tsv", "json-lines"}));

    // group-audit
    auto* audit_cmd = app.add_subcommand(
        "group-audit", "Enumerate the signed-permutation and rotation subgroups and "
                       "verify their structure");
    int audit_n = 0;
    audit_cmd->add_option("--n", audit_n, "Rank (3..6)")->required();

    // obstruct
    auto* obstruct_cmd =
        app.add_subcommand("obstruct", "Forced-triviality verdicts for a manifold");
    std::string manifold_text;
    int obstruct_n = 0;
    std::string n_range_text;
    std::string remark29 = "strict";
    obstruct_cmd->add_option("--manifold", manifold_text, "Manifold expression")
        ->required();
    auto* n_opt = obstruct_cmd->add_option("--n", obstruct_n, "Single rank n (>= 3)");
    auto* range_opt =
        obstruct_cmd->add_option("--n-range", n_range_text, "Rank range a..b");
    n_opt->excludes(range_opt);
    obstruct_cmd->add_option("--remark29", remark29,
                             "Odd-rank refinement rules: strict or off")
        ->check(CLI::IsMember({"strict", "off"}));

    // rank-bound
    auto* bound_cmd = app.add_subcommand(
        "rank-bound", "Upper bound for the p-rank of the homeomorphism group");
    std::string bound_manifold;
    std::uint32_t bound_p = 0;
    std::string bound_mode = "general";
    bound_cmd->add_option("--manifold", bound_manifold, "Manifold expression")
        ->required();
    bound_cmd->add_option("--p", bound_p, "Prime p")->required();
    bound_cmd->add_option("--mode", bound_mode, "general or orientation-preserving")
        ->check(CLI::IsMember({"general", "orientation-preserving"}));

    // complex-based subcommands
    std::string complex_path, action_path, orientation_path;
    auto add_complex_opts = [&](CLI::App* cmd, bool with_orientation) {
        cmd->add_option("--complex", complex_path, "Complex file")->required();
        cmd->add_option("--action", action_path, "Action file (one generator per line)")
            ->required();
        if (with_orientation)
            cmd->add_option("--orientation", orientation_path,
                            "Orientation file (signed top simplices)");
    };

    auto* strata_cmd = app.add_subcommand(
        "strata", "Stabilizer-stratum Euler characteristics and their divisibility");
    std::uint32_t strata_p = 0;
    add_complex_opts(strata_cmd, false);
    strata_cmd->add_option("--p", strata_p, "Prime p (group order must be a power)")
        ->required();

    auto* borel_cmd = app.add_subcommand(
        "borel", "Fixed-set dimension identity at group-fixed basepoints");
    int basepoint = -1;
    add_complex_opts(borel_cmd, false);
    borel_cmd->add_option("--basepoint", basepoint,
                          "Check a single basepoint (default: all fixed vertices)");

    auto* quotient_cmd = app.add_subcommand(
        "quotient", "Euler characteristics of a free action and its orbit complex");
    add_complex_opts(quotient_cmd, false);

    auto* rank_check_cmd = app.add_subcommand(
        "rank-check", "Rank inequality for an effective elementary p-group action");
    add_complex_opts(rank_check_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        ReportFormat fmt = parse_format(format);
        std::size_t cap = env_cap().value_or(1'000'000);

        if (audit_cmd->parsed()) {
            AuditReport report = audit_torsion(audit_n, env_cap());
            std::cout << render_audit(report, fmt);
            return report.all_pass() ? 0 : 1;
        }

        if (obstruct_cmd->parsed()) {
            if (n_opt->count() == 0 && range_opt->count() == 0)
                throw InputError("obstruct: provide --n or --n-range");
            ChiDescriptor d = evaluate(parse_manifold(manifold_text));
            VerdictOptions opts{.odd_rank_rules = remark29 == "strict"};
            int a = obstruct_n, b = obstruct_n;
            if (range_opt->count()) std::tie(a, b) = parse_n_range(n_range_text);
            std::vector<Verdict> verdicts = verdict_table(d, a, b, opts);
            std::cout << render_verdicts(verdicts, fmt);
            return 0;
        }

        if (bound_cmd->parsed()) {
            ChiDescriptor d = evaluate(parse_manifold(bound_manifold));
            BoundMode mode = bound_mode == "general" ? BoundMode::General
                                                     : BoundMode::OrientationPreserving;
            std::cout << render_rank_bound(rank_bound(d, bound_p, mode), fmt);
            return 0;
        }

        if (strata_cmd->parsed()) {
            EquivariantComplex e =
                regularized(load_equivariant(complex_path, action_path, "", cap));
            std::cout << render_strata(strata_chi(e, strata_p), fmt);
            return 0;
        }

        if (borel_cmd->parsed()) {
            EquivariantComplex e =
                regularized(load_equivariant(complex_path, action_path, "", cap));
            std::vector<int> basepoints;
            if (borel_cmd->count("--basepoint")) {
                basepoints.push_back(basepoint);
            } else {
                basepoints = fixed_vertices(e);
                if (basepoints.empty())
                    throw InputError("borel: the action has no fixed vertex");
            }
            std::vector<BorelReport> reports;
            reports.reserve(basepoints.size());
            for (int v : basepoints) reports.push_back(borel_check(e, v));
            std::cout << render_borel(reports, fmt);
            for (const BorelReport& r : reports)
                if (!r.identity_holds) return 1;
            return 0;
        }

        if (quotient_cmd->parsed()) {
            EquivariantComplex e = load_equivariant(complex_path, action_path, "", cap);
            std::cout << render_quotient(free_quotient_chi(e), fmt);
            return 0;
        }

        if (rank_check_cmd->parsed()) {
            EquivariantComplex e =
                load_equivariant(complex_path, action_path, orientation_path, cap);
            RankCheckReport report = effective_rank_bound_check(e);
            std::cout << render_rank_check(report, fmt);
            return report.asserted && !report.inequality_holds ? 1 : 0;
        }

        throw InputError("no subcommand given");
    } catch (const Falsification& e) {
        std::cerr << "falsification: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
