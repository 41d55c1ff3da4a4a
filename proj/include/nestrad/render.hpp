#pragma once

#include <string>
#include <string_view>

#include "nestrad/audit.hpp"
#include "nestrad/catalog.hpp"
#include "nestrad/report.hpp"

namespace nestrad {

enum class Format { text, csv, json };

// CSV: header "index,approximant,abs_error,correct_digits,error_ratio", one
// newline-terminated row per entry, empty fields for missing values.
// JSON: {"meta": {method, target, ...params, bits, guard_bits, oracle_digits
// [, diagnostic]}, "rows": [...]} with rows keyed like the CSV header.
// Text: aligned table under a short meta header.
std::string render_report(const ConvergenceReport& report, Format format);

// Inverse of render_report(..., Format::json). UsageError on malformed input.
ConvergenceReport report_from_json(std::string_view json);

std::string render_audit(const AuditReport& report, Format format);
std::string render_catalog(const CatalogReport& report, Format format);
std::string render_identities(const IdentityReport& report, Format format);

}  // namespace nestrad
