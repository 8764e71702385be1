#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctxrbi/summary.hpp"

namespace ctxrbi {

enum class ReportFormat { Csv, Json, PlotData };

/// "csv", "json" or "plot-data". Throws Error(DomainError).
ReportFormat parse_report_format(std::string_view text);

struct ReportInput {
    const SummaryReport& report;
    const std::map<std::string, BatterLedger>& ledgers;
    std::span<const EventResult> events;
};

// Output file names.
inline constexpr std::string_view kLedgersFile = "ledgers.csv";
inline constexpr std::string_view kSummaryFile = "summary.json";
inline constexpr std::string_view kEventMetricsFile = "event_metrics.csv";

/// Writes one format into `out_dir` (created if missing) and returns the
/// files written, in a fixed order. Output is a pure function of the input.
///
///   csv:       ledgers.csv, leaders_rbi.csv, leaders_arbi_per_rbi.csv,
///              leaders_crbi_per_rbi.csv
///   json:      summary.json
///   plot-data: hist_<stat>.csv for every histogram, event_metrics.csv
///
/// Throws Error(IoError).
std::vector<std::filesystem::path> emit_report(const ReportInput& input, ReportFormat format,
                                               const std::filesystem::path& out_dir);

// Building blocks, exposed for tests and the bindings.

/// batter_id,Batter,RBI,ARBI,ARBI/RBI,CRBI,CRBI/RBI,events; rows ranked by
/// RBI then batter_id.
void write_ledgers_csv(std::ostream& out, const std::map<std::string, BatterLedger>& ledgers);
/// Batter,RBI,ARBI,ARBI/RBI,CRBI,CRBI/RBI in the given order.
void write_leaderboard_csv(std::ostream& out, std::span<const BatterLedger> rows);
/// bin_left,bin_right,count.
void write_histogram_csv(std::ostream& out, const Histogram& histogram);
void write_event_metrics_csv(std::ostream& out, std::span<const EventResult> events);
/// The summary.json document.
std::string to_json(const ReportInput& input);

/// Reads a file produced by write_ledgers_csv. Ratios are recomputed from
/// the totals. Throws Error(MalformedRow) with the line number.
std::vector<BatterLedger> read_ledgers_csv(std::istream& in);

/// Fixed-width text table with two decimals, as printed by the CLI.
std::string render_leaderboard(std::span<const BatterLedger> rows);

}  // namespace ctxrbi
