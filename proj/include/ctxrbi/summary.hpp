#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctxrbi/pipeline.hpp"

namespace ctxrbi {

/// Equal-width bins over [lo, hi]; the last bin is closed on the right.
struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::size_t> counts;

    /// Spans the observed range; a single distinct value gets the unit
    /// interval centred on it. Throws Error(DomainError) for bins == 0.
    static Histogram build(std::span<const double> values, std::size_t bins);

    double bin_left(std::size_t i) const noexcept;
    double bin_right(std::size_t i) const noexcept;
    std::size_t total() const noexcept;
};

/// Percentile p in [0, 100] by linear interpolation between order
/// statistics: rank p / 100 * (n - 1). Input need not be sorted.
/// Throws Error(DomainError) on empty input or p outside [0, 100].
double percentile(std::span<const double> values, double p);

struct Quartiles {
    double p25 = 0.0;
    double p50 = 0.0;
    double p75 = 0.0;
};

struct SummaryOptions {
    long min_rbi = 30;
    std::size_t bins = 50;
    std::size_t top_n = 10;
};

struct SeasonSummary {
    std::size_t event_count = 0;
    std::size_t batter_count = 0;
    std::size_t qualifying_batters = 0;
    long min_rbi = 30;
    double delta_mean = 0.0;
    /// Sample standard deviation (n - 1); 0 below two events.
    double delta_sd = 0.0;
    double alpha_mean = 0.0;
    double beta_mean = 0.0;
    std::optional<Quartiles> arbi_per_rbi;
    std::optional<Quartiles> crbi_per_rbi;
    /// Keys: delta_we, alpha, beta (per event) and arbi_per_rbi,
    /// crbi_per_rbi (per qualifying batter). Empty input has none.
    std::map<std::string, Histogram> histograms;
};

/// Highest first, ties by ascending batter_id.
struct Leaderboards {
    std::vector<BatterLedger> by_rbi;           // all batters
    std::vector<BatterLedger> by_arbi_per_rbi;  // qualifying batters
    std::vector<BatterLedger> by_crbi_per_rbi;  // qualifying batters
};

struct SummaryReport {
    SeasonSummary summary;
    Leaderboards leaders;
};

SummaryReport summarize(const std::map<std::string, BatterLedger>& ledgers, std::span<const EventResult> events,
                        const SummaryOptions& options = {});

enum class LeaderMetric { Rbi, ArbiPerRbi, CrbiPerRbi };

/// All given ledgers, ordered as the leaderboards are.
std::vector<BatterLedger> rank_batters(std::vector<BatterLedger> ledgers, LeaderMetric metric);

}  // namespace ctxrbi
