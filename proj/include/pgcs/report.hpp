#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pgcs/experiment.hpp"

namespace pgcs {

// Bumped whenever a field of the JSON report or CSV header changes.
inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Json, Csv };
ReportFormat parse_format(std::string_view name);

// Fully resolved configuration. Infinite numbers are written as the strings
// "inf" / "-inf" since JSON has no literal for them.
nlohmann::json config_to_json(const ExperimentConfig& config);

// Inverse of config_to_json. Missing keys fall back to the named "preset" if
// present, otherwise to the defaults of the named "function".
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

nlohmann::json row_to_json(const ReportRow& row);

// {"schema_version", "config_echo", "rows"}
nlohmann::json report_json(const std::vector<ReportRow>& rows, const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "method,function,dimension,seed,final_position,final_value,outer_iterations,evaluations,"
    "refinements,wall_time,termination_reason";

// One line per row after the header. final_position is a single field with
// coordinates separated by ';'. Reals use 17 significant digits.
std::string report_csv(const std::vector<ReportRow>& rows);

// Writes to `destination`, or to stdout when it is empty or "-". Throws
// IoError naming the path when it cannot be written. Throws ConfigError on
// an empty row set.
void emit_report(const std::vector<ReportRow>& rows, const ExperimentConfig& config, ReportFormat format,
                 const std::string& destination);

// Comparison table in the layout method | [position..., objective value]. The
// stochastic methods show the run with the median final value, followed by a
// per-method summary line.
std::string format_table(const ExperimentConfig& config, const std::vector<ReportRow>& rows);

struct PaperTables {
  std::vector<std::pair<ExperimentConfig, std::vector<ReportRow>>> benchmarks;
  std::string text;
};

// Runs bench1..bench3 with all three methods over `seeds`.
PaperTables reproduce_paper_tables(const std::vector<std::uint64_t>& seeds = default_seeds());

// {"schema_version", "benchmarks": [report_json per benchmark]}
nlohmann::json tables_json(const PaperTables& tables);

}  // namespace pgcs
