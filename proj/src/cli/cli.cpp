#include "nestrad/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>

#include "nestrad/audit.hpp"
#include "nestrad/catalog.hpp"
#include "nestrad/drivers.hpp"
#include "nestrad/errors.hpp"
#include "nestrad/oracles.hpp"
#include "nestrad/render.hpp"
#include "nestrad/report.hpp"

namespace nestrad {
namespace {

struct CommandConfig {
  std::optional<std::string> m, s, d, x0;
  std::string sign = "+";
  std::optional<int> k;
  std::optional<int> max_depth;
  std::optional<std::string> k_range, m_range;
  int bits = 128;
  int terms = 20;
  std::string method = "method1";
  std::string ratio_mode = "auto";
  std::optional<std::string> variant;
  std::string format = "text";
  std::optional<std::string> out_path;
};

mpq_class parse_rational(const std::string& flag, const std::string& text) {
  static const std::regex fraction(R"(^[+-]?\d+(/\d+)?$)");
  static const std::regex decimal(R"(^([+-]?)(\d+)\.(\d+)$)");
  std::smatch match;
  if (std::regex_match(text, fraction)) {
    std::string t = text.front() == '+' ? text.substr(1) : text;
    mpq_class q(t, 10);
    if (q.get_den() == 0) throw UsageError(flag + ": zero denominator");
    q.canonicalize();
    return q;
  }
  if (std::regex_match(text, match, decimal)) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, match[3].str().size());
    mpq_class q(mpz_class(match[2].str() + match[3].str(), 10), den);
    q.canonicalize();
    return match[1] == "-" ? mpq_class(-q) : q;
  }
  throw UsageError(flag + ": expected an integer, fraction or plain decimal, got '" + text + "'");
}

long parse_long(const std::string& text) {
  static const std::regex integer(R"(^[+-]?\d+$)");
  if (!std::regex_match(text, integer)) throw UsageError("range: bad integer '" + text + "'");
  return std::stol(text);
}

// "a", "a:b", "a:b:step", comma-separated; a > b yields nothing.
std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    std::vector<std::string> parts;
    std::stringstream ps(item);
    std::string part;
    while (std::getline(ps, part, ':')) parts.push_back(part);
    if (parts.size() == 1) {
      out.push_back(parse_long(parts[0]));
    } else if (parts.size() == 2 || parts.size() == 3) {
      const long lo = parse_long(parts[0]);
      const long hi = parse_long(parts[1]);
      const long step = parts.size() == 3 ? parse_long(parts[2]) : 1;
      if (step <= 0) throw UsageError("range: step must be positive");
      for (long v = lo; v <= hi; v += step) out.push_back(v);
    } else {
      throw UsageError("range: bad item '" + item + "'");
    }
  }
  return out;
}

Format parse_format(const std::string& f) {
  if (f == "text") return Format::text;
  if (f == "csv") return Format::csv;
  if (f == "json") return Format::json;
  throw UsageError("unknown format '" + f + "'");
}

RatioMode parse_ratio_mode(const CommandConfig& cfg) {
  RatioMode mode = RatioMode::automatic;
  if (cfg.ratio_mode == "exact") {
    mode = RatioMode::exact;
  } else if (cfg.ratio_mode == "self") {
    mode = RatioMode::self_consistent;
  } else if (cfg.ratio_mode != "auto") {
    throw UsageError("unknown ratio mode '" + cfg.ratio_mode + "'");
  }
  if (cfg.x0) {
    if (mode == RatioMode::exact) throw UsageError("--x0 forces the self-consistent ratio");
    mode = RatioMode::self_consistent;
  }
  return mode;
}

Seed seed_from(const CommandConfig& cfg) {
  if (cfg.x0) {
    if (cfg.m || cfg.s) throw UsageError("--x0 excludes --m/--s");
    return Seed::from_x0(parse_rational("--x0", *cfg.x0));
  }
  if (!cfg.m || !cfg.s) throw UsageError("a seed needs --m and --s (or --x0)");
  int sign = 0;
  if (cfg.sign == "+" || cfg.sign == "1" || cfg.sign == "+1") sign = 1;
  if (cfg.sign == "-" || cfg.sign == "-1") sign = -1;
  if (sign == 0) throw UsageError("--sign must be + or -");
  return Seed(parse_rational("--m", *cfg.m), parse_rational("--s", *cfg.s), sign);
}

mpq_class d_from(const CommandConfig& cfg) {
  return cfg.d ? parse_rational("--d", *cfg.d) : mpq_class(1);
}

mpq_class m_from(const CommandConfig& cfg) {
  if (!cfg.m) throw UsageError("this method needs --m");
  return parse_rational("--m", *cfg.m);
}

void seed_params(ReportMeta& meta, const Seed& seed) {
  meta.params.emplace_back("m", seed.m().get_str());
  meta.params.emplace_back("s", seed.s().get_str());
  meta.params.emplace_back("sign", seed.sign() < 0 ? "-" : "+");
}

ConvergenceReport single_row(const std::string& method, Target target, const std::string& index,
                             const FixedReal& value, const FixedReal& target_value,
                             const PrecisionContext& ctx) {
  ConvergenceReport report;
  report.meta.method = method;
  report.meta.target = to_string(target);
  report.meta.bits = ctx.scale_bits();
  report.meta.guard_bits = ctx.guard_bits();
  report.meta.oracle_digits = decimal_digits_for_bits(target_value.scale_bits());
  report.rows.push_back(
      measure_row(index, value.rescaled(target_value.scale_bits()), target_value, report_digits(ctx)));
  return report;
}

std::string compute_text(const ConvergenceReport& r) {
  std::string params;
  for (const auto& [k, v] : r.meta.params) params += (params.empty() ? "" : " ") + k + "=" + v;
  const ReportRow& row = r.rows.front();
  return "method          " + r.meta.method + "\n" + "target          " + r.meta.target + "\n" +
         "params          " + params + "\n" + "bits            " + std::to_string(r.meta.bits) +
         " (+" + std::to_string(r.meta.guard_bits) + " guard)\n" + "value           " +
         row.approximant + "\n" + "abs_error       " + row.abs_error + "\n" + "correct_digits  " +
         (row.correct_digits ? std::to_string(*row.correct_digits) : "all") + "\n";
}

struct Emitted {
  std::string body;
  std::optional<std::string> diagnostic;
  int code = kExitOk;
};

Emitted run_compute(const CommandConfig& cfg, Format format) {
  const std::string variant = cfg.variant.value_or("");
  ConvergenceReport report;
  std::optional<std::string> diagnostic;
  auto finish = [&](const Approximant& a, const std::string& index) {
    const int ref = reference_bits(a.params.ctx);
    const FixedReal target = a.target == Target::one ? FixedReal::from_int(1, ref) : pi_oracle(ref);
    report = single_row(to_string(a.method), a.target, index, a.value, target, a.params.ctx);
    diagnostic = a.diagnostic;
  };

  if (cfg.method == "method1" || cfg.method == "unity") {
    const Seed seed = seed_from(cfg);
    const int k = cfg.k.value_or(20);
    const auto ctx = PrecisionContext::for_depth(cfg.bits, k);
    if (cfg.method == "method1") {
      if (!variant.empty() && variant != "stable" && variant != "naive") {
        throw UsageError("method1 takes --variant stable or naive");
      }
      const auto sv = variant == "naive" ? SineVariant::naive : SineVariant::stable;
      const Approximant a = pi_method1(seed, k, ctx, parse_ratio_mode(cfg), sv);
      finish(a, std::to_string(k));
      seed_params(report.meta, seed);
      report.meta.params.emplace_back("k", std::to_string(k));
      report.meta.params.emplace_back(
          "ratio", *a.ratio_kind == AngleRatio::Kind::exact ? "exact" : "self");
      report.meta.params.emplace_back("variant", variant.empty() ? "stable" : variant);
    } else {
      finish(unity_formula(seed, k, ctx), std::to_string(k));
      seed_params(report.meta, seed);
      report.meta.params.emplace_back("k", std::to_string(k));
    }
  } else if (cfg.method == "method2") {
    if (!variant.empty() && variant != "corrected" && variant != "as-printed") {
      throw UsageError("method2 takes --variant corrected or as-printed");
    }
    const mpq_class m = m_from(cfg);
    const mpq_class d = d_from(cfg);
    const auto ctx = PrecisionContext::for_depth(cfg.bits, 0);
    const auto v = variant == "as-printed" ? Method2Variant::as_printed : Method2Variant::corrected;
    finish(pi_method2(m, d, ctx, v), m.get_str());
    report.meta.params.emplace_back("m", m.get_str());
    report.meta.params.emplace_back("d", d.get_str());
  } else if (cfg.method == "combined") {
    const mpq_class m = m_from(cfg);
    const mpq_class d = d_from(cfg);
    const int k = cfg.k.value_or(5);
    const auto ctx = PrecisionContext::for_depth(cfg.bits, k);
    finish(pi_combined(m, d, k, ctx), std::to_string(k));
    report.meta.params.emplace_back("m", m.get_str());
    report.meta.params.emplace_back("d", d.get_str());
    report.meta.params.emplace_back("k", std::to_string(k));
  } else if (cfg.method == "viete") {
    const int k = cfg.k.value_or(20);
    const auto ctx = PrecisionContext::for_depth(cfg.bits, k);
    finish(viete_product(k, ctx), std::to_string(k));
    report.meta.params.emplace_back("k", std::to_string(k));
  } else if (cfg.method == "taylor") {
    const mpq_class m = m_from(cfg);
    const mpq_class d = d_from(cfg);
    const auto ctx = PrecisionContext::for_depth(cfg.bits, 0);
    const int ref = reference_bits(ctx);
    const FixedReal value = taylor_seed(m, d, cfg.terms, ctx.working_bits());
    const FixedReal target = sqrt_of_rational((m * m - d * d) / (m * m), ref);
    report = single_row("taylor", Target::arccos, std::to_string(cfg.terms), value, target, ctx);
    report.meta.target = "seed_value";
    report.meta.params.emplace_back("m", m.get_str());
    report.meta.params.emplace_back("d", d.get_str());
    report.meta.params.emplace_back("terms", std::to_string(cfg.terms));
  } else {
    throw UsageError("unknown method '" + cfg.method + "'");
  }

  report.meta.diagnostic = diagnostic;
  Emitted e;
  e.body = format == Format::text ? compute_text(report) : render_report(report, format);
  e.diagnostic = diagnostic;
  return e;
}

Emitted run_table(const CommandConfig& cfg, Format format) {
  const std::string variant = cfg.variant.value_or("");
  Method method;
  if (cfg.method == "method1") {
    method = Method::method1;
  } else if (cfg.method == "method2") {
    method = variant == "as-printed" ? Method::method2_as_printed : Method::method2_corrected;
  } else if (cfg.method == "combined") {
    method = Method::combined;
  } else if (cfg.method == "viete") {
    method = Method::viete;
  } else if (cfg.method == "unity") {
    method = Method::unity;
  } else {
    throw UsageError("table: unknown method '" + cfg.method + "'");
  }
  if (cfg.k_range && cfg.m_range) throw UsageError("give --k-range or --m-range, not both");
  if (!cfg.k_range && !cfg.m_range) throw UsageError("table needs --k-range or --m-range");

  Sweep sweep;
  sweep.axis = cfg.m_range ? SweepAxis::m : SweepAxis::k;
  sweep.indices = parse_range(cfg.m_range ? *cfg.m_range : *cfg.k_range);

  TableParams params;
  params.ratio_mode = parse_ratio_mode(cfg);
  params.d = d_from(cfg);
  if (method == Method::method1 || method == Method::unity) params.seed = seed_from(cfg);
  if (method == Method::combined && sweep.axis == SweepAxis::k) params.m = m_from(cfg);
  params.k = cfg.k.value_or(5);

  int depth = sweep.axis == SweepAxis::k ? 0 : params.k;
  if (sweep.axis == SweepAxis::k) {
    for (long v : sweep.indices) depth = std::max<long>(depth, v);
  }
  const auto ctx = PrecisionContext::for_depth(cfg.bits, depth);
  const ConvergenceReport report = convergence_table(method, params, sweep, ctx);
  return {render_report(report, format), report.meta.diagnostic, kExitOk};
}

Emitted run_arccos(const CommandConfig& cfg, Format format) {
  const Seed seed = seed_from(cfg);
  const auto ctx = PrecisionContext::for_depth(cfg.bits, 0);
  const int ref = reference_bits(ctx);
  const FixedReal value = arccos_by_recursion(seed, ctx, 0, cfg.max_depth.value_or(-1));
  const FixedReal target = arccos_oracle(seed.value(ref), ref);
  const std::string index = cfg.x0 ? *cfg.x0 : seed.describe();
  ConvergenceReport report = single_row("arccos_by_recursion", Target::arccos, index, value, target, ctx);
  seed_params(report.meta, seed);
  return {format == Format::text ? compute_text(report) : render_report(report, format),
          std::nullopt, kExitOk};
}

Emitted run_audit(const CommandConfig& cfg, Format format) {
  const Seed seed = seed_from(cfg);
  const AuditReport report = cancellation_audit(seed, cfg.k.value_or(40), cfg.bits, 4 * cfg.bits);
  return {render_audit(report, format), std::nullopt, kExitOk};
}

Emitted run_reproduce(const CommandConfig& cfg, Format format) {
  const int k_max = cfg.k.value_or(25);
  const CatalogReport report = build_catalog_report(PrecisionContext::for_depth(cfg.bits, k_max), k_max);
  return {render_catalog(report, format), std::nullopt,
          report.all_passed() ? kExitOk : kExitCheckFailed};
}

Emitted run_verify(const CommandConfig& cfg, Format format) {
  const IdentityReport report = verify_identities(PrecisionContext::for_depth(cfg.bits, 30));
  return {render_identities(report, format), std::nullopt,
          report.all_passed() ? kExitOk : kExitCheckFailed};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested-radical and half-angle approximations of pi and 1", "nestrad"};
  app.require_subcommand(1);
  CommandConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--bits", cfg.bits, "Working precision in bits")->capture_default_str();
    sub->add_option("--format", cfg.format, "text, csv or json")->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
  };
  auto seed_flags = [&](CLI::App* sub) {
    sub->add_option("--m", cfg.m, "Seed denominator m (integer, fraction or decimal)");
    sub->add_option("--s", cfg.s, "Seed radicand s, x0 = sign*sqrt(s)/m");
    sub->add_option("--sign", cfg.sign, "Seed sign, + or -")->capture_default_str();
    sub->add_option("--x0", cfg.x0, "Seed as a decimal x0 (self-consistent ratio)");
  };

  CLI::App* compute = app.add_subcommand("compute", "One approximant with its error");
  common(compute);
  seed_flags(compute);
  compute->add_option("--method", cfg.method, "method1, method2, combined, viete, unity, taylor")
      ->capture_default_str();
  compute->add_option("--d", cfg.d, "d with s = m^2 - d^2 (default 1)");
  compute->add_option("--k", cfg.k, "Recursion depth");
  compute->add_option("--terms", cfg.terms, "Taylor terms")->capture_default_str();
  compute->add_option("--ratio-mode", cfg.ratio_mode, "auto, exact or self")->capture_default_str();
  compute->add_option("--variant", cfg.variant, "stable, naive, corrected or as-printed");

  CLI::App* table = app.add_subcommand("table", "Convergence table over k or m");
  common(table);
  seed_flags(table);
  table->add_option("--method", cfg.method, "method1, method2, combined, viete, unity")
      ->capture_default_str();
  table->add_option("--d", cfg.d, "d with s = m^2 - d^2 (default 1)");
  table->add_option("--k", cfg.k, "Depth for combined sweeps over m");
  table->add_option("--k-range", cfg.k_range, "a:b[:step] or comma list");
  table->add_option("--m-range", cfg.m_range, "a:b[:step] or comma list");
  table->add_option("--ratio-mode", cfg.ratio_mode, "auto, exact or self")->capture_default_str();
  table->add_option("--variant", cfg.variant, "corrected or as-printed (method2)");

  CLI::App* arccos = app.add_subcommand("arccos", "arccos(x0) as the limit of 2^k c_k");
  common(arccos);
  seed_flags(arccos);
  arccos->add_option("--max-depth", cfg.max_depth, "Give up after this many halvings")
      ->check(CLI::PositiveNumber);

  CLI::App* audit = app.add_subcommand("audit", "Naive vs stable sine step at low precision");
  common(audit);
  seed_flags(audit);
  audit->add_option("--k", cfg.k, "Deepest step (default 40)");

  CLI::App* reproduce = app.add_subcommand("reproduce", "Rederive the four classical formulas");
  common(reproduce);
  reproduce->add_option("--k", cfg.k, "Deepest recursion checked (default 25)");

  CLI::App* verify = app.add_subcommand("verify", "Check the recursion identities");
  common(verify);

  std::vector<const char*> argv{"nestrad"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Format format = parse_format(cfg.format);
    Emitted e;
    if (*compute) {
      e = run_compute(cfg, format);
    } else if (*table) {
      e = run_table(cfg, format);
    } else if (*arccos) {
      e = run_arccos(cfg, format);
    } else if (*audit) {
      e = run_audit(cfg, format);
    } else if (*reproduce) {
      e = run_reproduce(cfg, format);
    } else {
      e = run_verify(cfg, format);
    }

    if (e.diagnostic) err << *e.diagnostic << "\n";
    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file) {
        err << "nestrad: cannot write " << *cfg.out_path << "\n";
        return kExitCantCreate;
      }
      file << e.body;
      file.flush();
      if (!file) {
        err << "nestrad: cannot write " << *cfg.out_path << "\n";
        return kExitCantCreate;
      }
    } else {
      out << e.body;
    }
    return e.code;
  } catch (const UsageError& e) {
    err << "nestrad: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "nestrad: " << e.what() << "\n";
    return kExitDomain;
  } catch (const CatalogMissError& e) {
    err << "nestrad: " << e.what() << "\n";
    return kExitDomain;
  } catch (const PrecisionError& e) {
    err << "nestrad: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const ConvergenceError& e) {
    err << "nestrad: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const CatalogFailure& e) {
    err << "nestrad: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace nestrad
