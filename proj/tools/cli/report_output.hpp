#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "icc/analyzer/analyzer.hpp"
#include "icc/oracle/concrete_group.hpp"

namespace icc::cli {

inline constexpr const char* kToolName = "icc";
inline constexpr const char* kSchemaId = "icc-report/1";

struct RunContext {
  std::string input_path;
  analyzer::AnalyzerOptions options;
  std::size_t oracle_radius = 0;
  std::size_t oracle_cap = 5000;
};

std::string tool_version();

nlohmann::ordered_json witness_json(const analyzer::ExtensionSpec& spec, const analyzer::Witness& w);

/// One report object. Field order is fixed and no field depends on time
/// or environment, so equal inputs give byte-identical output.
nlohmann::ordered_json report_json(const analyzer::ExtensionSpec& spec, const analyzer::Report& report,
                                   const RunContext& ctx, const std::optional<oracle::CrossCheck>& cross);

std::string report_text(const analyzer::ExtensionSpec& spec, const analyzer::Report& report, const RunContext& ctx,
                        const std::optional<oracle::CrossCheck>& cross);

}  // namespace icc::cli
