#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ctxrbi/events.hpp"
#include "ctxrbi/metrics.hpp"

namespace ctxrbi {

/// Season totals for one batter.
struct BatterLedger {
    std::string batter_id;
    std::string batter_name;
    long rbi = 0;
    double arbi = 0.0;
    double crbi = 0.0;
    double arbi_per_rbi = 0.0;
    double crbi_per_rbi = 0.0;
    int event_count = 0;
};

/// Adds one event's runs, ARBI and CRBI.
void add_event(BatterLedger& ledger, const MetricValues& metrics) noexcept;
/// Recomputes the per-RBI ratios from the totals (left at 0 when rbi is 0).
void finalize(BatterLedger& ledger) noexcept;

struct EventResult {
    std::string game_id;
    std::string event_id;
    std::string batter_id;
    DeltaWe delta_we{};
    MetricValues metrics{};
};

struct PipelineResult {
    /// Sorted by (game_id, event_id).
    std::vector<EventResult> events;
    std::map<std::string, BatterLedger> ledgers;
    /// One message per event that raised a MetricWarnings flag.
    std::vector<std::string> warnings;
};

/// Scores every event and folds the results into per-batter ledgers.
///
/// Events are put in (game_id, event_id) order before anything is summed,
/// so the result is bit-identical under any permutation of the input. A
/// batter's name is taken from their first event in that order.
///
/// Throws Error(UnknownState) naming the offending event.
PipelineResult run_pipeline(const WeModel& model, const AlphaFamily& family, std::span<const EventRecord> events);

}  // namespace ctxrbi
