#include "app.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "dsl.hpp"
#include "icc/error.hpp"
#include "report_output.hpp"

namespace icc::cli {

namespace {

constexpr std::size_t kGrowthDefaultRadius = 6;

struct CheckArgs {
  std::string file;
  std::string format = "text";
  std::size_t oracle_radius = 0;
  std::size_t oracle_cap = 5000;
  std::size_t orbit_cap = 10000;
  long out_order_cap = 16;
  long relation_bound = 8;
  std::string emit_growth;
  std::string expect;
};

int check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.file, std::ios::binary);
  if (!in) {
    err << a.file << ": error: cannot read file\n";
    return kExitInvalidInput;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  auto parsed = parse_extension(buffer.str());
  if (auto* d = std::get_if<Diagnostic>(&parsed)) {
    err << d->format(a.file) << "\n";
    return d->code == DiagnosticCode::Unsupported ? kExitUnsupported : kExitInvalidInput;
  }
  const auto& spec = std::get<analyzer::ExtensionSpec>(parsed);

  RunContext ctx;
  ctx.input_path = a.file;
  ctx.options.orbit_cap = a.orbit_cap;
  ctx.options.out_order_cap = a.out_order_cap;
  ctx.options.relation_bound = a.relation_bound;
  ctx.oracle_radius = a.oracle_radius;
  ctx.oracle_cap = a.oracle_cap;

  analyzer::Report report;
  try {
    report = analyzer::analyze(spec, ctx.options);
  } catch (const UnsupportedError& e) {
    err << a.file << ": error[unsupported]: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ValidationError& e) {
    err << a.file << ": error[validation]: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  std::optional<oracle::CrossCheck> cross;
  const std::size_t radius = a.oracle_radius > 0 ? a.oracle_radius : (a.emit_growth.empty() ? 0 : kGrowthDefaultRadius);
  if (radius > 0) {
    try {
      cross = oracle::cross_check(spec, report, radius, a.oracle_cap);
    } catch (const UnsupportedError& e) {
      cross = oracle::CrossCheck{false, true, e.what(), {}};
    }
  }
  if (!a.emit_growth.empty()) {
    if (!cross || cross->probes.empty()) {
      err << a.file << ": warning: no growth curve to emit (" << (cross ? cross->summary : "") << ")\n";
    } else {
      std::ofstream csv(a.emit_growth, std::ios::binary);
      if (!csv) {
        err << a.emit_growth << ": error: cannot write file\n";
        return kExitInvalidInput;
      }
      oracle::write_growth_csv(csv, cross->probes.front().curve);
    }
  }
  // the growth curve alone does not put a cross-check into the report
  const std::optional<oracle::CrossCheck> shown = a.oracle_radius > 0 ? cross : std::nullopt;

  if (a.format == "json") {
    out << report_json(spec, report, ctx, shown).dump(2) << "\n";
  } else {
    out << report_text(spec, report, ctx, shown);
  }

  if (!a.expect.empty() && a.expect != analyzer::to_string(report.verdict)) {
    err << a.file << ": assertion failed: expected " << a.expect << ", got " << analyzer::to_string(report.verdict)
        << "\n";
    return kExitAssertMismatch;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether a group extension is icc", kToolName};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  CheckArgs a;
  auto* cmd = app.add_subcommand("check", "Analyse one extension description file");
  cmd->add_option("FILE", a.file, "Extension description")->required();
  cmd->add_option("--format", a.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--oracle-radius", a.oracle_radius, "Conjugacy-ball radius for the oracle cross-check (0 disables)");
  cmd->add_option("--oracle-cap", a.oracle_cap, "Class-set size cap for the oracle");
  cmd->add_option("--orbit-cap", a.orbit_cap, "Orbit enumeration cap for witness certification");
  cmd->add_option("--out-order-cap", a.out_order_cap, "Largest power tested for innerness")->check(CLI::PositiveNumber);
  cmd->add_option("--relation-bound", a.relation_bound, "Exponent bound for abelian quotient relations")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--emit-growth", a.emit_growth, "Write the first oracle growth curve as CSV");
  cmd->add_option("--assert", a.expect, "Exit 1 unless the verdict matches")->check(CLI::IsMember({"icc", "not_icc", "unknown"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  return check(a, out, err);
}

}  // namespace icc::cli
