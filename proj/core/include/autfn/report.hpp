#pragma once

// Deterministic rendering of the verification reports, as TSV rows or
// JSON-lines. Identical inputs produce byte-identical output; every row
// carries the identifier of the rule that produced it.

#include <span>
#include <string>

#include "autfn/audit.hpp"
#include "autfn/equivariant.hpp"
#include "autfn/obstruction.hpp"

namespace autfn {

enum class ReportFormat { Tsv, JsonLines };

ReportFormat parse_format(const std::string& name);  // "tsv" | "json-lines"

std::string render_audit(const AuditReport& report, ReportFormat format);

// Columns: n, rule, conclusion, dim, chi, orientable.
std::string render_verdicts(std::span<const Verdict> verdicts, ReportFormat format);

std::string render_rank_bound(const RankBound& bound, ReportFormat format);

std::string render_strata(const StrataReport& report, ReportFormat format);

std::string render_borel(std::span<const BorelReport> reports, ReportFormat format);

std::string render_quotient(const QuotientReport& report, ReportFormat format);

std::string render_rank_check(const RankCheckReport& report, ReportFormat format);

}  // namespace autfn
