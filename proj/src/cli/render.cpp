#include "nestrad/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "nestrad/errors.hpp"

namespace nestrad {
namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kCsvHeader = "index,approximant,abs_error,correct_digits,error_ratio\n";

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Renders a table with left-aligned columns separated by two spaces.
std::string aligned(const std::vector<std::vector<std::string>>& table) {
  std::vector<std::size_t> widths;
  for (const auto& row : table) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : table) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i] + 2);
    }
    out += line + "\n";
  }
  return out;
}

ojson meta_json(const ReportMeta& meta) {
  ojson j;
  j["method"] = meta.method;
  j["target"] = meta.target;
  for (const auto& [key, value] : meta.params) j[key] = value;
  j["bits"] = meta.bits;
  j["guard_bits"] = meta.guard_bits;
  j["oracle_digits"] = meta.oracle_digits;
  if (meta.diagnostic) j["diagnostic"] = *meta.diagnostic;
  return j;
}

ojson row_json(const ReportRow& row) {
  ojson j;
  j["index"] = row.index;
  j["approximant"] = row.approximant;
  j["abs_error"] = row.abs_error;
  j["correct_digits"] = row.correct_digits ? ojson(*row.correct_digits) : ojson(nullptr);
  j["error_ratio"] = row.error_ratio ? ojson(*row.error_ratio) : ojson(nullptr);
  return j;
}

// Residuals are reported as a power-of-two bound, "2^-352", or "0".
std::string residual_text(double r) {
  if (r <= 0.0) return "0";
  return "2^" + std::to_string(static_cast<int>(std::ceil(std::log2(r))));
}

}  // namespace

std::string render_report(const ConvergenceReport& report, Format format) {
  switch (format) {
    case Format::csv: {
      std::string out = kCsvHeader;
      for (const auto& r : report.rows) {
        out += r.index + "," + r.approximant + "," + r.abs_error + "," +
               (r.correct_digits ? std::to_string(*r.correct_digits) : "") + "," +
               r.error_ratio.value_or("") + "\n";
      }
      return out;
    }
    case Format::json: {
      ojson j;
      j["meta"] = meta_json(report.meta);
      j["rows"] = ojson::array();
      for (const auto& r : report.rows) j["rows"].push_back(row_json(r));
      return j.dump(2) + "\n";
    }
    case Format::text: break;
  }

  const ReportMeta& m = report.meta;
  std::string params;
  for (const auto& [k, v] : m.params) params += (params.empty() ? "" : " ") + k + "=" + v;
  std::string out = "method " + m.method + " -> " + m.target + "  [" + params + "]\n";
  out += "bits " + std::to_string(m.bits) + " (+" + std::to_string(m.guard_bits) +
         " guard), oracle digits " + std::to_string(m.oracle_digits) + "\n";
  std::vector<std::vector<std::string>> table{
      {"index", "approximant", "abs_error", "digits", "ratio"}};
  for (const auto& r : report.rows) {
    table.push_back({r.index, r.approximant, r.abs_error,
                     r.correct_digits ? std::to_string(*r.correct_digits) : "-",
                     r.error_ratio.value_or("-")});
  }
  return out + aligned(table);
}

ConvergenceReport report_from_json(std::string_view text) {
  ConvergenceReport report;
  try {
    const ojson j = ojson::parse(text);
    for (const auto& [key, value] : j.at("meta").items()) {
      if (key == "method") {
        report.meta.method = value.get<std::string>();
      } else if (key == "target") {
        report.meta.target = value.get<std::string>();
      } else if (key == "bits") {
        report.meta.bits = value.get<int>();
      } else if (key == "guard_bits") {
        report.meta.guard_bits = value.get<int>();
      } else if (key == "oracle_digits") {
        report.meta.oracle_digits = value.get<int>();
      } else if (key == "diagnostic") {
        report.meta.diagnostic = value.get<std::string>();
      } else {
        report.meta.params.emplace_back(key, value.get<std::string>());
      }
    }
    for (const auto& r : j.at("rows")) {
      ReportRow row;
      row.index = r.at("index").get<std::string>();
      row.approximant = r.at("approximant").get<std::string>();
      row.abs_error = r.at("abs_error").get<std::string>();
      if (!r.at("correct_digits").is_null()) row.correct_digits = r.at("correct_digits").get<int>();
      if (!r.at("error_ratio").is_null()) row.error_ratio = r.at("error_ratio").get<std::string>();
      report.rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed report JSON: ") + e.what());
  }
  return report;
}

std::string render_audit(const AuditReport& report, Format format) {
  if (format == Format::csv) {
    std::string out = "k,naive_error,stable_error,digits_lost\n";
    for (const auto& r : report.rows) {
      out += std::to_string(r.k) + "," + r.naive_error_text + "," + r.stable_error_text + "," +
             std::to_string(r.digits_lost) + "\n";
    }
    return out;
  }
  const auto tail = report.naive_increasing_from();
  if (format == Format::json) {
    ojson j;
    j["audited_bits"] = report.audited_bits;
    j["reference_bits"] = report.reference_bits;
    j["rows"] = ojson::array();
    for (const auto& r : report.rows) {
      j["rows"].push_back({{"k", r.k},
                           {"naive_error", r.naive_error_text},
                           {"stable_error", r.stable_error_text},
                           {"digits_lost", r.digits_lost}});
    }
    if (!report.rows.empty()) j["naive_min_k"] = report.rows[report.naive_argmin()].k;
    j["naive_increasing_from_k"] = tail ? ojson(report.rows[*tail].k) : ojson(nullptr);
    return j.dump(2) + "\n";
  }
  std::string out = "cancellation audit at " + std::to_string(report.audited_bits) +
                    " bits, reference " + std::to_string(report.reference_bits) + " bits\n";
  std::vector<std::vector<std::string>> table{{"k", "naive_error", "stable_error", "digits_lost"}};
  for (const auto& r : report.rows) {
    table.push_back(
        {std::to_string(r.k), r.naive_error_text, r.stable_error_text, std::to_string(r.digits_lost)});
  }
  out += aligned(table);
  if (!report.rows.empty()) {
    out += "naive error bottoms out at k=" + std::to_string(report.rows[report.naive_argmin()].k) + "\n";
  }
  if (tail) out += "naive error increases from k=" + std::to_string(report.rows[*tail].k) + " on\n";
  return out;
}

std::string render_catalog(const CatalogReport& report, Format format) {
  if (format == Format::json) {
    ojson j;
    j["header"] = report.header;
    j["k_max"] = report.k_max;
    j["entries"] = ojson::array();
    for (const auto& e : report.entries) {
      j["entries"].push_back({{"name", e.name},
                              {"coefficient", e.printed_coefficient},
                              {"radical", e.printed_radical},
                              {"prefactor_ok", e.prefactor_ok},
                              {"shape_ok", e.shape_ok},
                              {"converged", e.converged},
                              {"passed", e.passed()},
                              {"detail", e.detail}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << report.header << "\n";
  for (const auto& e : report.entries) {
    out << (e.passed() ? "PASS " : "FAIL ") << pad(e.name, 13) << pad(e.printed_coefficient, 15)
        << "m=" << e.seed.m().get_str() << " s=" << e.seed.s().get_str()
        << " sign=" << (e.seed.sign() < 0 ? '-' : '+') << "  |P(n=" << report.k_max + 1
        << ") - pi| < 1e-12: " << (e.converged ? "yes" : "no");
    if (!e.detail.empty()) out << "  (" << e.detail << ")";
    out << "\n";
  }
  return out.str();
}

std::string render_identities(const IdentityReport& report, Format format) {
  if (format == Format::json) {
    ojson j;
    j["bits"] = report.bits;
    j["checks"] = ojson::array();
    for (const auto& c : report.checks) {
      j["checks"].push_back({{"name", c.name},
                             {"passed", c.passed},
                             {"worst_residual", residual_text(c.worst_residual)},
                             {"tolerance", c.tolerance},
                             {"detail", c.detail}});
    }
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> table;
  for (const auto& c : report.checks) {
    table.push_back({c.passed ? "PASS" : "FAIL", c.name, "worst " + residual_text(c.worst_residual), c.tolerance,
                     c.detail});
  }
  return "identity checks at B=" + std::to_string(report.bits) + "\n" + aligned(table);
}

}  // namespace nestrad
