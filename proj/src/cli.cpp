#include "cmint/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cmint/diagnostics.hpp"
#include "cmint/enumerate.hpp"
#include "cmint/gzmoduli.hpp"
#include "cmint/intersect.hpp"
#include "cmint/parallel.hpp"
#include "cmint/quadcm.hpp"

namespace cmint {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kGzTolerance = 1e-6;
constexpr int kLogDigitsShown = 30;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Pair {
  std::int64_t first;
  std::int64_t second;
};

Pair parse_pair(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(flag + " expects two integers separated by a comma");
  try {
    std::size_t used_a = 0, used_b = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    const std::int64_t x = std::stoll(a, &used_a);
    const std::int64_t y = std::stoll(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument("trailing characters");
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": cannot parse '" + text + "' as two integers");
  }
}

Json rational_json(const Rational& r) {
  return Json{{"num", boost::multiprecision::numerator(r).convert_to<std::int64_t>()},
              {"den", boost::multiprecision::denominator(r).convert_to<std::int64_t>()}};
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

struct FieldFlags {
  std::int64_t D = 0;
  std::string delta;
  std::string w;
};

void add_field_flags(CLI::App* cmd, FieldFlags& f) {
  cmd->add_option("--D", f.D, "Discriminant of the real quadratic subfield")->required();
  cmd->add_option("--delta", f.delta, "Delta as u,v meaning (u + v sqrt D)/2")->required()->allow_extra_args(false);
  cmd->add_option("--w", f.w, "w as w0,w1 in the basis 1, (D + sqrt D)/2")->required();
}

struct ParsedField {
  std::int64_t D, u, v, w0, w1;
};

ParsedField parse_field(const FieldFlags& f) {
  const Pair delta = parse_pair(f.delta, "--delta");
  const Pair w = parse_pair(f.w, "--w");
  if ((delta.first - delta.second) % 2 != 0)
    throw UsageError("--delta: u and v must have the same parity for (u + v sqrt D)/2 to be integral");
  return {f.D, delta.first, delta.second, w.first, w.second};
}

void print_violations(std::ostream& os, const std::vector<FieldViolation>& violations) {
  for (auto v : violations) os << "  " << code(v) << ": " << describe(v) << "\n";
}

Json violations_json(const std::vector<FieldViolation>& violations) {
  Json arr = Json::array();
  for (auto v : violations) arr.push_back(Json{{"code", code(v)}, {"message", describe(v)}});
  return arr;
}

std::string delta_text(std::int64_t u, std::int64_t v, std::int64_t D) {
  std::ostringstream os;
  os << "(" << u << (v < 0 ? " - " : " + ") << (v < 0 ? -v : v) << "*sqrt(" << D << "))/2";
  return os.str();
}

// Terms for the report: every prime with a nonzero coefficient, plus, when
// verifying, every prime where b1 is nonzero or disagrees.
struct TermRow {
  std::int64_t p;
  Rational coeff;
  std::optional<Rational> b1;
  bool ok = true;
};

struct FieldReport {
  std::vector<TermRow> rows;
  bool verified = false;
  bool verification_failed = false;
};

FieldReport build_report(const CmFieldData& cm, bool verify, unsigned jobs) {
  FieldReport rep;
  if (!verify) {
    for (const auto& [p, c] : intersection_total(cm, jobs).coefficients) rep.rows.push_back({p, c, std::nullopt, true});
    return rep;
  }
  const auto primes = support_candidates(cm);
  const auto checks = parallel_map(
      primes,
      [&](std::int64_t p) {
        const Rational c = intersection_at_p(cm, p);
        const Rational b = b1_at_p(cm, p);
        return B1Check{p, c, b, b == 2 * c};
      },
      jobs);
  bool all_ok = true;
  for (const auto& chk : checks) {
    all_ok = all_ok && chk.ok;
    if (chk.coefficient != 0 || chk.b1 != 0 || !chk.ok) rep.rows.push_back({chk.p, chk.coefficient, chk.b1, chk.ok});
  }
  rep.verified = all_ok;
  rep.verification_failed = !all_ok;
  return rep;
}

std::string formal_sum(const FieldReport& rep) {
  IntersectionResult r;
  for (const auto& row : rep.rows)
    if (row.coeff != 0) r.coefficients.emplace(row.p, row.coeff);
  return r.formal_sum();
}

Json terms_json(const FieldReport& rep) {
  Json terms = Json::array();
  for (const auto& row : rep.rows) {
    Json t{{"p", row.p}, {"coeff", rational_json(row.coeff)}};
    if (row.b1) t["b1"] = boost::multiprecision::numerator(*row.b1).convert_to<std::int64_t>();
    terms.push_back(t);
  }
  return terms;
}

void print_b1_table(std::ostream& out, const FieldReport& rep) {
  out << "  p  coeff  b1  2*coeff  match\n";
  for (const auto& row : rep.rows)
    out << "  " << row.p << "  " << to_string(row.coeff) << "  " << to_string(*row.b1) << "  "
        << to_string(2 * row.coeff) << "  " << (row.ok ? "yes" : "NO") << "\n";
}

int cmd_validate(const FieldFlags& flags, bool json, std::ostream& out) {
  const ParsedField f = parse_field(flags);
  const auto violations = check_cm_field_uv(f.D, f.u, f.v, f.w0, f.w1);
  if (json) {
    Json j{{"valid", violations.empty()}, {"D", f.D}, {"delta", Json{{"u", f.u}, {"v", f.v}}},
           {"w", Json::array({f.w0, f.w1})}};
    if (violations.empty())
      j["Dtilde"] = validate_cm_field_uv(f.D, f.u, f.v, f.w0, f.w1).dtilde;
    else
      j["violations"] = violations_json(violations);
    emit_json(out, j);
  } else if (violations.empty()) {
    const CmFieldData cm = validate_cm_field_uv(f.D, f.u, f.v, f.w0, f.w1);
    out << "valid: D=" << f.D << " Delta=" << delta_text(f.u, f.v, f.D) << " w=(" << f.w0 << "," << f.w1
        << ") Dtilde=" << cm.dtilde << "\n";
  } else {
    out << "invalid: D=" << f.D << " Delta=" << delta_text(f.u, f.v, f.D) << " w=(" << f.w0 << "," << f.w1 << ")\n";
    print_violations(out, violations);
  }
  return violations.empty() ? kExitOk : kExitDomainFailure;
}

int cmd_intersect(const FieldFlags& flags, bool verify, bool json, unsigned jobs, std::ostream& out,
                  std::ostream& err) {
  const ParsedField f = parse_field(flags);
  const auto violations = check_cm_field_uv(f.D, f.u, f.v, f.w0, f.w1);
  if (!violations.empty()) {
    err << "error: the field does not satisfy the admissibility conditions\n";
    print_violations(err, violations);
    return kExitDomainFailure;
  }
  const CmFieldData cm = validate_cm_field_uv(f.D, f.u, f.v, f.w0, f.w1);
  const FieldReport rep = build_report(cm, verify, jobs);
  if (json) {
    emit_json(out, Json{{"D", cm.D}, {"Dtilde", cm.dtilde}, {"terms", terms_json(rep)}, {"verified", rep.verified}});
  } else {
    out << "field: D=" << cm.D << " Delta=" << delta_text(f.u, f.v, f.D) << " w=(" << f.w0 << "," << f.w1
        << ") Dtilde=" << cm.dtilde << "\n";
    out << "T1.CM(K) = " << formal_sum(rep) << "\n";
    if (verify) {
      print_b1_table(out, rep);
      out << "verified: " << (rep.verified ? "true" : "false") << "\n";
    }
  }
  return rep.verification_failed ? kExitDomainFailure : kExitOk;
}

int cmd_gz(std::int64_t d1, std::int64_t d2, int digits, bool json, unsigned jobs, std::ostream& out,
           std::ostream& err) {
  GzParams params;
  try {
    params = GzParams::make(d1, d2);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
  const IntersectionResult formula = gz_total(params, jobs);
  const BigReal formula_log = evaluate_log(formula, digits);
  const BigReal oracle_log = singular_moduli_log(params, digits, jobs);
  const BigReal discrepancy = abs(formula_log - oracle_log);
  const bool ok = discrepancy.to_double() < kGzTolerance;
  const std::string f_text = formula_log.to_string(kLogDigitsShown);
  const std::string o_text = oracle_log.to_string(kLogDigitsShown);
  const std::string d_text = discrepancy.to_sci_string(3);
  if (json) {
    Json terms = Json::array();
    for (const auto& [p, c] : formula.coefficients) terms.push_back(Json{{"p", p}, {"coeff", rational_json(c)}});
    emit_json(out, Json{{"d1", params.d1},
                        {"d2", params.d2},
                        {"Dtilde", params.dtilde()},
                        {"precision", digits},
                        {"terms", terms},
                        {"formula_log", f_text},
                        {"oracle_log", o_text},
                        {"discrepancy", d_text},
                        {"ok", ok}});
  } else {
    out << "d1=" << params.d1 << " d2=" << params.d2 << " Dtilde=" << params.dtilde() << " precision=" << digits
        << "\n";
    out << "T1.CM(K) = " << formula.formal_sum() << "\n";
    out << "formula log: " << f_text << "\n";
    out << "oracle log:  " << o_text << "\n";
    out << "discrepancy: " << d_text << "\n";
    out << "status: " << (ok ? "ok" : "MISMATCH") << "\n";
  }
  return ok ? kExitOk : kExitDomainFailure;
}

int cmd_enumerate(const std::vector<std::int64_t>& ds, std::int64_t bound, bool json, unsigned jobs,
                  std::ostream& out) {
  std::vector<CmFieldData> fields;
  for (auto D : ds) {
    auto more = enumerate_fields(D, bound);
    fields.insert(fields.end(), more.begin(), more.end());
  }
  const auto reports = parallel_map(fields, [](const CmFieldData& cm) { return build_report(cm, true, 1); }, jobs);

  std::size_t nonvanishing = 0, failures = 0;
  Json arr = Json::array();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& cm = fields[i];
    const auto& rep = reports[i];
    const bool vanishes = formal_sum(rep) == "0";
    if (!vanishes) ++nonvanishing;
    if (rep.verification_failed) ++failures;
    if (json) {
      arr.push_back(Json{{"D", cm.D},
                         {"delta", Json{{"u", cm.u()}, {"v", cm.v()}}},
                         {"w", Json::array({cm.w0, cm.w1})},
                         {"Dtilde", cm.dtilde},
                         {"terms", terms_json(rep)},
                         {"verified", rep.verified}});
    } else {
      out << "D=" << cm.D << " Delta=" << delta_text(cm.u(), cm.v(), cm.D) << " w=(" << cm.w0 << "," << cm.w1
          << ") Dtilde=" << cm.dtilde << " T1.CM(K) = " << formal_sum(rep)
          << " verified=" << (rep.verified ? "true" : "false") << "\n";
    }
  }
  if (json) {
    emit_json(out, Json{{"fields", arr},
                        {"summary", Json{{"count", fields.size()},
                                         {"nonvanishing", nonvanishing},
                                         {"verification_failures", failures}}}});
  } else {
    out << "summary: fields=" << fields.size() << " nonvanishing=" << nonvanishing
        << " verification_failures=" << failures << "\n";
  }
  return failures == 0 ? kExitOk : kExitDomainFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic intersection numbers of CM points on Hilbert modular surfaces", "cmint"};
  app.require_subcommand(1);

  std::string format = "text";
  int jobs_flag = 0;
  bool verbose = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", jobs_flag, "Worker threads (default: CMINT_JOBS or 1)")->check(CLI::NonNegativeNumber);
  app.add_flag("--verbose", verbose, "Print diagnostics to stderr");

  FieldFlags validate_flags, intersect_flags;
  auto* validate = app.add_subcommand("validate", "Check the admissibility conditions for (D, Delta, w)");
  add_field_flags(validate, validate_flags);

  bool verify = false;
  auto* intersect = app.add_subcommand("intersect", "Compute T1.CM(K) as a formal sum of logarithms");
  add_field_flags(intersect, intersect_flags);
  intersect->add_flag("--verify", verify, "Cross-check every coefficient against b1(p)");

  std::int64_t d1 = 0, d2 = 0;
  int digits = 100;
  auto* gz = app.add_subcommand("gz", "Degenerate case: compare the closed formula with singular moduli");
  gz->add_option("--d1", d1, "First fundamental discriminant")->required();
  gz->add_option("--d2", d2, "Second fundamental discriminant")->required();
  gz->add_option("--precision", digits, "Decimal digits for the j-function evaluation")
      ->check(CLI::Range(30, 100000));

  std::vector<std::int64_t> ds;
  std::int64_t bound = 100;
  auto* enumerate = app.add_subcommand("enumerate-fields", "List admissible fields with Norm(Delta) <= bound");
  enumerate->add_option("--D", ds, "Comma separated discriminants")->delimiter(',');
  enumerate->add_option("--bound", bound, "Largest Norm(Delta)")->check(CLI::Range(std::int64_t{5}, std::int64_t{1} << 40));

  // Subcommand-local copies of the global options, so they may follow the
  // subcommand name.
  for (auto* sub : {validate, intersect, gz, enumerate}) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    if (sub != validate)
      sub->add_option("--jobs", jobs_flag, "Worker threads")->check(CLI::NonNegativeNumber);
    sub->add_flag("--verbose", verbose, "Print diagnostics to stderr");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (verbose) set_diagnostic_sink([&err](const std::string& m) { err << "note: " << m << "\n"; });
  struct SinkReset {
    ~SinkReset() { set_diagnostic_sink(nullptr); }
  } reset;

  const bool json = format == "json";
  unsigned jobs = 1;
  try {
    jobs = resolve_jobs(jobs_flag);
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_flags, json, out);
    if (intersect->parsed()) return cmd_intersect(intersect_flags, verify, json, jobs, out, err);
    if (gz->parsed()) return cmd_gz(d1, d2, digits, json, jobs, out, err);
    return cmd_enumerate(ds, bound, json, jobs, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CmFieldError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainFailure;
  }
}

}  // namespace cmint
