// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, pinned runtime limits. Pass the CLI binary path as argv[1] to
// include the subprocess determinism check.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "autfn/audit.hpp"
#include "autfn/io.hpp"
#include "autfn/matrix.hpp"
#include "autfn/obstruction.hpp"
#include "autfn/report.hpp"
#include "corpus.hpp"

using namespace autfn;
using namespace autfn::testing;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw Failure(what);
}

std::string cli_path;  // empty when not provided

// --- criterion 1: torsion audit ----------------------------------------------

std::string criterion_torsion_audit() {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    int checks = 0;
    for (int n = 3; n <= 6; ++n) {
        AuditReport report = audit_torsion(n);
        for (const AuditCheck& c : report.checks)
            require(c.pass, "n=" + std::to_string(n) + " check '" + c.name +
                                "' expected " + c.expected + ", got " + c.actual);
        checks += static_cast<int>(report.checks.size());
    }
    double seconds = std::chrono::duration<double>(clock::now() - start).count();
    require(seconds < 30.0,
            "audit runtime " + std::to_string(seconds) + "s exceeds the 30s limit");
    std::ostringstream detail;
    detail << checks << " structural checks for n = 3..6 in " << std::fixed
           << std::setprecision(1) << seconds << "s";
    return detail.str();
}

// --- criterion 2: abelianization ----------------------------------------------

Automorphism random_generator_product(std::mt19937& rng, int rank, int length) {
    std::uniform_int_distribution<int> idx(1, rank);
    std::uniform_int_distribution<int> kind(0, 3);
    Automorphism f = Automorphism::identity(rank);
    for (int step = 0; step < length; ++step) {
        int i = idx(rng), j = idx(rng);
        switch (kind(rng)) {
            case 0: f = compose(f, inversion(i, rank)); break;
            case 1:
                if (i != j) f = compose(f, transposition(i, j, rank));
                break;
            case 2:
                if (2 * i <= rank) f = compose(f, rotation(i, rank));
                break;
            default:
                if (i != j) f = compose(f, nielsen(i, j, rank));
                break;
        }
    }
    return f;
}

std::string criterion_abelianization() {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        int rank = 2 + trial % 4;  // ranks 2..5
        Automorphism f = random_generator_product(rng, rank, 8);
        Automorphism g = random_generator_product(rng, rank, 8);
        require(abelianize(compose(f, g)) == abelianize(f) * abelianize(g),
                "functoriality failed at trial " + std::to_string(trial));
    }

    IntegerMatrix r1 = abelianize(rotation(1, 2));
    require(r1 * r1 * r1 == IntegerMatrix::identity(2), "abelianize(R_1)^3 != I");

    for (int n = 3; n <= 5; ++n) {
        IntegerMatrix d = abelianize(delta(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                require(d(i, j) == (i == j ? -1 : 0), "abelianize(delta) != -I");
    }

    for (int n = 3; n <= 5; ++n) {
        std::vector<ModMatrix> gens;
        for (int i = 2; i <= n; ++i)
            gens.push_back(mod_reduce(IntegerMatrix::elementary(n, 1, i, 1), 2));
        ModGroupTable table = closure_mod(gens, 64);
        require(table.order() == (std::size_t{1} << (n - 1)),
                "transvection group mod 2 has wrong order for n = " + std::to_string(n));
        for (const ModMatrix& m : table.elements)
            require(m.is_identity() || (m * m).is_identity(),
                    "non-involution in the transvection group mod 2");
        require(is_elementary_abelian(table, 2), "transvection group not elementary abelian");
    }
    return "functoriality on 200 products, R_1 cube, delta image, transvection groups n = 3..5";
}

// --- criterion 3: stratification ----------------------------------------------

std::string criterion_stratification() {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    auto corpus = strata_corpus();
    require(corpus.size() >= 20,
            "corpus has only " + std::to_string(corpus.size()) + " actions");
    int strata_rows = 0;
    for (const CorpusAction& item : corpus) {
        EquivariantComplex e = item.e.regular ? item.e : regularize(item.e);
        // strata_chi itself throws Falsification on any divisibility or
        // partition violation.
        StrataReport r = strata_chi(e, item.p);
        long long sum = 0;
        for (const auto& row : r.rows) {
            require(row.chi_c % row.p_power == 0,
                    item.name + ": stratum " + std::to_string(row.i) + " divisibility");
            sum += row.chi_c;
        }
        require(sum == r.total_chi, item.name + ": strata do not partition chi");
        strata_rows += static_cast<int>(r.rows.size());
    }
    double seconds = std::chrono::duration<double>(clock::now() - start).count();
    require(seconds < 60.0,
            "stratification runtime " + std::to_string(seconds) + "s exceeds the 60s limit");
    std::ostringstream detail;
    detail << corpus.size() << " p-group actions, " << strata_rows << " strata in "
           << std::fixed << std::setprecision(1) << seconds << "s";
    return detail.str();
}

// --- criterion 4: free quotient and fixed splitting ---------------------------

std::string criterion_smith_identities() {
    QuotientReport anti =
        free_quotient_chi(make_equivariant(octahedron(), {octahedron_antipodal()}));
    require(anti.chi_total == 2, "chi(octahedron) != 2");
    require(anti.group_order == 2, "antipodal group order != 2");
    require(anti.chi_quotient == 1, "chi of the constructed quotient != 1");
    require(anti.chi_total == 2 * anti.chi_quotient, "chi(X) != 2 chi(X/G)");

    int splits = 0;
    for (const CorpusAction& item : strata_corpus()) {
        std::size_t order = item.e.group.order();
        if (order != 2 && order != 3) continue;
        FixedSplit split = fixed_split_chi(item.e.regular ? item.e : regularize(item.e));
        require(split.chi_total == split.chi_complement + split.chi_fixed,
                item.name + ": chi != chi_c(X-F) + chi(F)");
        ++splits;
    }
    require(splits >= 10, "too few prime-order actions for the splitting identity");
    return "antipodal quotient 2 = 2*1, splitting identity on " + std::to_string(splits) +
           " prime-order actions";
}

// --- criterion 5: the dimension identity --------------------------------------

std::string criterion_borel_identity() {
    // Headline case: subdivided octahedron with both reflections, at every
    // group-fixed basepoint; each term list must be {1, 1, 0}.
    EquivariantComplex oct2 = make_equivariant(
        octahedron(), {octahedron_reflection(0), octahedron_reflection(1)});
    EquivariantComplex sd = subdivide(oct2);
    std::vector<int> basepoints = fixed_vertices(sd);
    require(basepoints.size() == 2, "expected exactly two fixed basepoints on sd");
    for (int v : basepoints) {
        BorelReport r = borel_check(sd, v);
        require(r.identity_holds, "identity fails at basepoint " + std::to_string(v));
        require(r.manifold_dim - r.fixed_dim == 2, "n - r != 2 at the poles");
        std::vector<int> dims;
        for (const auto& t : r.terms) dims.push_back(t.fixed_dim);
        std::sort(dims.begin(), dims.end());
        require(dims == std::vector<int>({0, 1, 1}), "subgroup dimensions are not {0,1,1}");
    }

    // Further corpus cases: every 2-sphere action with a fixed basepoint.
    std::vector<CorpusAction> extra;
    extra.push_back(make_case("oct-reflx", 2, octahedron(), {octahedron_reflection(0)}));
    extra.push_back(make_case("oct-refly", 2, octahedron(), {octahedron_reflection(1)}));
    extra.push_back(make_case("oct-rotz", 2, octahedron(), {octahedron_rotation(2)}));
    extra.push_back(make_case("oct-reflxy", 2, octahedron(),
                              {octahedron_reflection(0), octahedron_reflection(1)}));
    extra.push_back(make_case("bipyr6-rot3", 3, bipyramid(6), {bipyramid_rotation(6, 2)}));
    extra.push_back(make_case("bipyr6-rot2", 2, bipyramid(6), {bipyramid_rotation(6, 3)}));
    extra.push_back(make_case("bipyr3-rot3", 3, bipyramid(3), {bipyramid_rotation(3, 1)}));
    int cases = 0, points = 0;
    for (const CorpusAction& item : extra) {
        EquivariantComplex e = item.e.regular ? item.e : regularize(item.e);
        std::vector<int> fixed = fixed_vertices(e);
        if (fixed.empty()) continue;
        for (int v : fixed) {
            BorelReport r = borel_check(e, v);
            require(r.identity_holds, item.name + ": identity fails at basepoint " +
                                          std::to_string(v));
            ++points;
        }
        ++cases;
    }
    require(cases >= 5, "need at least five further corpus cases");
    return "subdivided octahedron poles (2 = 1+1+0) plus " + std::to_string(cases) +
           " cases / " + std::to_string(points) + " basepoints";
}

// --- criterion 6: rank bounds ---------------------------------------------------

std::string criterion_rank_bounds() {
    int asserted = 0, skipped = 0;
    for (const CorpusAction& item : strata_corpus()) {
        if (!item.e.group.elementary_abelian_rank(item.p)) continue;
        RankCheckReport r = effective_rank_bound_check(item.e);
        if (!r.asserted) {
            ++skipped;
            continue;
        }
        require(r.inequality_holds, item.name + ": rank inequality fails (k = " +
                                        std::to_string(r.k) + ", bound = " +
                                        std::to_string(r.bound) + ")");
        ++asserted;
    }
    require(asserted >= 15, "too few asserted rank checks");

    // Sharpness: the orientation-preserving bound on the 2-sphere is 2 and
    // the rotation Klein group attains it.
    ChiDescriptor sphere = evaluate(parse_manifold("S(2)"));
    RankBound bound = rank_bound(sphere, 2, BoundMode::OrientationPreserving);
    require(!bound.unbounded && bound.bound == 2, "orientation-preserving bound != 2");

    Complex oct = octahedron();
    oct.set_orientation(octahedron_orientation());
    EquivariantComplex rotations = make_equivariant(
        oct, {octahedron_rotation(0), octahedron_rotation(1)});
    require(rotations.group.order() == 4, "rotation group order != 4");
    auto rank = rotations.group.elementary_abelian_rank(2);
    require(rank.has_value() && *rank == 2, "rotation group rank != 2");
    for (const Perm& g : rotations.group.elements())
        require(orientation_preserving(oct, g),
                "rotation group contains an orientation-reversing element");
    require(static_cast<long long>(*rank) == bound.bound,
            "the rotation Klein group does not attain the bound");
    RankCheckReport attained = effective_rank_bound_check(rotations);
    require(attained.fixed_empty && !attained.asserted,
            "expected an empty fixed set for the attaining action");

    // The general mod-2 bound on the sphere is 3 and the full sign group
    // attains it.
    RankBound general = rank_bound(sphere, 2, BoundMode::General);
    EquivariantComplex signs = make_equivariant(
        octahedron(), {octahedron_reflection(0), octahedron_reflection(1),
                       octahedron_reflection(2)});
    require(general.bound == 3 && signs.group.order() == 8,
            "the sign group does not attain the general bound");

    return std::to_string(asserted) + " inequalities asserted, " +
           std::to_string(skipped) + " empty-fixed-set reports, sharp bound 2 attained";
}

// --- criterion 7: verdict reproduction ------------------------------------------

std::string criterion_verdicts() {
    ChiDescriptor sphere = evaluate(parse_manifold("S(2)"));
    std::vector<Verdict> table = verdict_table(sphere, 3, 6);
    require(!table[0].forced_trivial, "n = 3 must be no-conclusion");
    require(table[1].forced_trivial && table[2].forced_trivial && table[3].forced_trivial,
            "n = 4, 5, 6 must be forced-trivial");

    // Products of surfaces with genus != 1 mod 3 are forced trivial for every
    // n > r + 1 (checked on n = r+2 .. r+5, covering both parities).
    std::vector<int> good = {0, 2, 3, 5};
    int products = 0;
    auto check_product = [&](const std::string& text) {
        ChiDescriptor d = evaluate(parse_manifold(text));
        require(d.chi % 6 != 0, text + ": chi unexpectedly divisible by 6");
        for (int n = d.dim + 2; n <= d.dim + 5; ++n)
            require(saut_verdict(d, n).forced_trivial,
                    text + " must be forced-trivial at n = " + std::to_string(n));
        ++products;
    };
    for (int a : good) {
        check_product("Sigma(" + std::to_string(a) + ")");
        for (int b : good) {
            check_product("Sigma(" + std::to_string(a) + ")*Sigma(" + std::to_string(b) + ")");
            for (int c : good)
                check_product("Sigma(" + std::to_string(a) + ")*Sigma(" + std::to_string(b) +
                              ")*Sigma(" + std::to_string(c) + ")");
        }
    }
    require(products == 84, "expected 84 surface products");

    for (int r = 1; r <= 6; ++r) {
        ChiDescriptor torus = evaluate(parse_manifold("T(" + std::to_string(r) + ")"));
        for (int n = 3; n <= 9; ++n)
            require(!saut_verdict(torus, n).forced_trivial,
                    "tori must always be no-conclusion");
    }

    Verdict projective = saut_verdict(evaluate(parse_manifold("N(1)")), 5);
    require(projective.forced_trivial, "N(1) at n = 5 must be forced-trivial");
    require(projective.rule == VerdictRule::GeneralMod3, "N(1) must fire the mod-3 rule");
    require(projective.lifted.has_value() && projective.lifted->chi == 2 &&
                projective.lifted->orientable,
            "N(1) must be handled through its double cover");

    return "sphere table, " + std::to_string(products) +
           " surface products, tori, projective plane via double cover";
}

// --- criterion 8: determinism ----------------------------------------------------

std::string render_everything() {
    std::string out;
    for (ReportFormat fmt : {ReportFormat::Tsv, ReportFormat::JsonLines}) {
        out += render_audit(audit_torsion(4), fmt);
        ChiDescriptor sphere = evaluate(parse_manifold("S(2)"));
        out += render_verdicts(verdict_table(sphere, 3, 8), fmt);
        out += render_rank_bound(rank_bound(sphere, 2, BoundMode::OrientationPreserving), fmt);
        EquivariantComplex oct2 = make_equivariant(
            octahedron(), {octahedron_reflection(0), octahedron_reflection(1)});
        out += render_strata(strata_chi(oct2, 2), fmt);
        std::vector<BorelReport> borel;
        for (int v : fixed_vertices(oct2)) borel.push_back(borel_check(oct2, v));
        out += render_borel(borel, fmt);
        out += render_quotient(
            free_quotient_chi(make_equivariant(octahedron(), {octahedron_antipodal()})), fmt);
        out += render_rank_check(effective_rank_bound_check(oct2), fmt);
    }
    return out;
}

std::string run_command(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw Failure("popen failed for: " + cmd);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

std::string criterion_determinism() {
    std::string first = render_everything();
    std::string second = render_everything();
    require(!first.empty() && first == second, "in-process reports differ between runs");

    if (cli_path.empty())
        return "in-process report suite byte-identical (no CLI path provided)";

    int commands = 0;
    for (const std::string& args :
         {std::string("group-audit --n 5"),
          std::string("obstruct --manifold \"Sigma(0)*Sigma(2)\" --n-range 3..9 --format json-lines"),
          std::string("rank-bound --manifold \"S(2)\" --p 2 --mode orientation-preserving")}) {
        std::string cmd = "\"" + cli_path + "\" " + args;
        std::string a = run_command(cmd);
        std::string b = run_command(cmd);
        require(!a.empty() && a == b, "CLI output differs between runs: " + args);
        ++commands;
    }
    return "in-process suite and " + std::to_string(commands) +
           " CLI invocations byte-identical";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];

    struct Criterion {
        int id;
        const char* title;
        std::function<std::string()> run;
    };
    std::vector<Criterion> criteria = {
        {1, "torsion audit n = 3..6", criterion_torsion_audit},
        {2, "abelianization and transvection groups", criterion_abelianization},
        {3, "stabilizer strata divisibility", criterion_stratification},
        {4, "free quotient and fixed splitting", criterion_smith_identities},
        {5, "fixed-dimension identity at basepoints", criterion_borel_identity},
        {6, "rank inequalities and sharpness", criterion_rank_bounds},
        {7, "verdict reproduction", criterion_verdicts},
        {8, "byte-identical reports", criterion_determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        try {
            std::string detail = c.run();
            std::cout << "[PASS] criterion " << c.id << ": " << c.title << " — " << detail
                      << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << c.id << ": " << c.title << " — " << e.what()
                      << "\n";
        }
    }
    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
