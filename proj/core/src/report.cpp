#include "autfn/report.hpp"

#include "autfn/errors.hpp"

namespace autfn {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

const char* bstr(bool b) { return b ? "true" : "false"; }

std::string tsv_row(std::initializer_list<std::string> cells) {
    std::string out;
    bool first = true;
    for (const std::string& c : cells) {
        if (!first) out += '\t';
        out += c;
        first = false;
    }
    out += '\n';
    return out;
}

const char* rank_check_rule(const RankCheckReport& r) {
    if (r.p != 2) return "elementary-rank-odd";
    return r.orientation_preserving ? "orientation-preserving-rank-2" : "elementary-rank-2";
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
    if (name == "tsv") return ReportFormat::Tsv;
    if (name == "json-lines") return ReportFormat::JsonLines;
    throw InputError("unknown format '" + name + "' (expected tsv or json-lines)");
}

std::string render_audit(const AuditReport& report, ReportFormat format) {
    std::string out;
    for (const AuditCheck& c : report.checks) {
        if (format == ReportFormat::Tsv) {
            out += tsv_row({c.name, c.expected, c.actual, bstr(c.pass)});
        } else {
            out += "{\"name\":" + jstr(c.name) + ",\"expected\":" + jstr(c.expected) +
                   ",\"actual\":" + jstr(c.actual) + ",\"pass\":" + bstr(c.pass) + "}\n";
        }
    }
    return out;
}

std::string render_verdicts(std::span<const Verdict> verdicts, ReportFormat format) {
    std::string out;
    for (const Verdict& v : verdicts) {
        std::string conclusion = v.forced_trivial ? "forced-trivial" : "no-conclusion";
        if (format == ReportFormat::Tsv) {
            out += tsv_row({std::to_string(v.n), rule_name(v.rule), conclusion,
                            std::to_string(v.input.dim), std::to_string(v.input.chi),
                            bstr(v.input.orientable)});
        } else {
            out += "{\"n\":" + std::to_string(v.n) + ",\"rule\":" + jstr(rule_name(v.rule)) +
                   ",\"conclusion\":" + jstr(conclusion) +
                   ",\"dim\":" + std::to_string(v.input.dim) +
                   ",\"chi\":" + std::to_string(v.input.chi) +
                   ",\"orientable\":" + bstr(v.input.orientable);
            if (v.lifted)
                out += ",\"double_cover_chi\":" + std::to_string(v.lifted->chi);
            // A forced-trivial verdict covers SL_n(Z) actions too: they lift.
            if (v.forced_trivial) out += ",\"applies_to\":\"SAut(F_n),SL_n(Z)\"";
            out += "}\n";
        }
    }
    return out;
}

std::string render_rank_bound(const RankBound& b, ReportFormat format) {
    std::string mode = b.mode == BoundMode::General ? "general" : "orientation-preserving";
    std::string bound = b.unbounded ? "unbounded" : std::to_string(b.bound);
    if (format == ReportFormat::Tsv)
        return tsv_row({"p-rank-divisibility", std::to_string(b.p), mode,
                        std::to_string(b.dim), std::to_string(b.chi), bound});
    return "{\"rule\":\"p-rank-divisibility\",\"p\":" + std::to_string(b.p) +
           ",\"mode\":" + jstr(mode) + ",\"dim\":" + std::to_string(b.dim) +
           ",\"chi\":" + std::to_string(b.chi) + ",\"bound\":" +
           (b.unbounded ? std::string("\"unbounded\"") : std::to_string(b.bound)) + "}\n";
}

std::string render_strata(const StrataReport& report, ReportFormat format) {
    std::string out;
    for (const auto& row : report.rows) {
        if (format == ReportFormat::Tsv) {
            out += tsv_row({"stratum-divisibility", std::to_string(row.i),
                            std::to_string(row.chi_c), std::to_string(row.p_power),
                            std::to_string(row.a), "pass"});
        } else {
            out += "{\"rule\":\"stratum-divisibility\",\"i\":" + std::to_string(row.i) +
                   ",\"chi_c\":" + std::to_string(row.chi_c) +
                   ",\"divisor\":" + std::to_string(row.p_power) +
                   ",\"a\":" + std::to_string(row.a) + ",\"status\":\"pass\"}\n";
        }
    }
    if (format == ReportFormat::Tsv) {
        out += tsv_row({"stratum-partition", "total", std::to_string(report.total_chi),
                        std::to_string(report.p) + "^" + std::to_string(report.n), "-",
                        "pass"});
    } else {
        out += "{\"rule\":\"stratum-partition\",\"chi\":" + std::to_string(report.total_chi) +
               ",\"p\":" + std::to_string(report.p) + ",\"n\":" + std::to_string(report.n) +
               ",\"status\":\"pass\"}\n";
    }
    return out;
}

std::string render_borel(std::span<const BorelReport> reports, ReportFormat format) {
    std::string out;
    for (const BorelReport& r : reports) {
        long long rhs = 0;
        std::string terms;
        for (const auto& t : r.terms) {
            if (!terms.empty()) terms += ';';
            terms += std::to_string(t.fixed_dim);
            rhs += t.fixed_dim - r.fixed_dim;
        }
        if (format == ReportFormat::Tsv) {
            out += tsv_row({"fixed-dim-sum", std::to_string(r.basepoint),
                            std::to_string(r.manifold_dim), std::to_string(r.fixed_dim),
                            terms, std::to_string(r.manifold_dim - r.fixed_dim),
                            std::to_string(rhs), r.identity_holds ? "pass" : "fail"});
        } else {
            out += "{\"rule\":\"fixed-dim-sum\",\"basepoint\":" + std::to_string(r.basepoint) +
                   ",\"n\":" + std::to_string(r.manifold_dim) +
                   ",\"r\":" + std::to_string(r.fixed_dim) + ",\"subgroup_dims\":[";
            for (std::size_t i = 0; i < r.terms.size(); ++i) {
                if (i) out += ',';
                out += std::to_string(r.terms[i].fixed_dim);
            }
            out += "],\"lhs\":" + std::to_string(r.manifold_dim - r.fixed_dim) +
                   ",\"rhs\":" + std::to_string(rhs) +
                   ",\"status\":" + (r.identity_holds ? jstr("pass") : jstr("fail")) + "}\n";
        }
    }
    return out;
}

std::string render_quotient(const QuotientReport& r, ReportFormat format) {
    if (format == ReportFormat::Tsv)
        return tsv_row({"free-quotient-multiplicativity", std::to_string(r.chi_total),
                        std::to_string(r.group_order), std::to_string(r.chi_quotient),
                        std::to_string(r.subdivisions_used), "pass"});
    return "{\"rule\":\"free-quotient-multiplicativity\",\"chi\":" +
           std::to_string(r.chi_total) + ",\"group_order\":" + std::to_string(r.group_order) +
           ",\"chi_quotient\":" + std::to_string(r.chi_quotient) +
           ",\"subdivisions\":" + std::to_string(r.subdivisions_used) +
           ",\"status\":\"pass\"}\n";
}

std::string render_rank_check(const RankCheckReport& r, ReportFormat format) {
    std::string status = !r.asserted ? "skipped" : r.inequality_holds ? "pass" : "fail";
    std::string r0 = r.fixed_empty ? "-" : std::to_string(r.r0);
    std::string bound = r.fixed_empty ? "-" : std::to_string(r.bound);
    if (format == ReportFormat::Tsv)
        return tsv_row({rank_check_rule(r), std::to_string(r.p), std::to_string(r.k),
                        std::to_string(r.r), r0, bound, status});
    std::string out = "{\"rule\":" + jstr(rank_check_rule(r)) +
                      ",\"p\":" + std::to_string(r.p) + ",\"k\":" + std::to_string(r.k) +
                      ",\"r\":" + std::to_string(r.r);
    if (!r.fixed_empty)
        out += ",\"r0\":" + std::to_string(r.r0) + ",\"bound\":" + std::to_string(r.bound);
    else
        out += ",\"fixed_set\":\"empty\"";
    out += ",\"status\":" + jstr(status) + "}\n";
    return out;
}

}  // namespace autfn
