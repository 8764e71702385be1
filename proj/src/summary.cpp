#include "ctxrbi/summary.hpp"

#include <algorithm>
#include <cmath>

#include "ctxrbi/errors.hpp"

namespace ctxrbi {

Histogram Histogram::build(std::span<const double> values, std::size_t bins) {
    if (bins == 0) throw Error(ErrorKind::DomainError, "histogram needs at least one bin");
    Histogram h;
    h.counts.assign(bins, 0);
    if (values.empty()) return h;

    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    h.lo = *lo;
    h.hi = *hi;
    if (h.lo == h.hi) {
        h.lo -= 0.5;
        h.hi += 0.5;
    }
    const double width = (h.hi - h.lo) / static_cast<double>(bins);
    for (const double v : values) {
        auto i = static_cast<std::size_t>(std::floor((v - h.lo) / width));
        h.counts[std::min(i, bins - 1)] += 1;
    }
    return h;
}

double Histogram::bin_left(std::size_t i) const noexcept {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(counts.size());
}

double Histogram::bin_right(std::size_t i) const noexcept {
    return i + 1 == counts.size() ? hi : bin_left(i + 1);
}

std::size_t Histogram::total() const noexcept {
    std::size_t n = 0;
    for (const auto c : counts) n += c;
    return n;
}

double percentile(std::span<const double> values, double p) {
    if (values.empty()) throw Error(ErrorKind::DomainError, "percentile of an empty sample");
    if (!(p >= 0.0 && p <= 100.0)) throw Error(ErrorKind::DomainError, "percentile rank outside [0, 100]");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double rank = p / 100.0 * static_cast<double>(sorted.size() - 1);
    const auto below = static_cast<std::size_t>(std::floor(rank));
    const std::size_t above = std::min(below + 1, sorted.size() - 1);
    const double frac = rank - static_cast<double>(below);
    return sorted[below] + frac * (sorted[above] - sorted[below]);
}

std::vector<BatterLedger> rank_batters(std::vector<BatterLedger> ledgers, LeaderMetric metric) {
    const auto key = [metric](const BatterLedger& l) {
        switch (metric) {
            case LeaderMetric::Rbi: return static_cast<double>(l.rbi);
            case LeaderMetric::ArbiPerRbi: return l.arbi_per_rbi;
            case LeaderMetric::CrbiPerRbi: return l.crbi_per_rbi;
        }
        return 0.0;
    };
    std::sort(ledgers.begin(), ledgers.end(), [&](const BatterLedger& a, const BatterLedger& b) {
        const double ka = key(a);
        const double kb = key(b);
        if (ka != kb) return ka > kb;
        return a.batter_id < b.batter_id;
    });
    return ledgers;
}

namespace {

Quartiles quartiles(std::span<const double> values) {
    return Quartiles{percentile(values, 25.0), percentile(values, 50.0), percentile(values, 75.0)};
}

std::vector<BatterLedger> top(std::vector<BatterLedger> ledgers, LeaderMetric metric, std::size_t n) {
    auto ranked = rank_batters(std::move(ledgers), metric);
    if (ranked.size() > n) ranked.resize(n);
    return ranked;
}

}  // namespace

SummaryReport summarize(const std::map<std::string, BatterLedger>& ledgers, std::span<const EventResult> events,
                        const SummaryOptions& options) {
    SummaryReport report;
    SeasonSummary& s = report.summary;
    s.event_count = events.size();
    s.batter_count = ledgers.size();
    s.min_rbi = options.min_rbi;

    std::vector<double> deltas;
    std::vector<double> alphas;
    std::vector<double> betas;
    for (const auto& e : events) {
        deltas.push_back(e.delta_we.delta);
        alphas.push_back(e.metrics.alpha);
        betas.push_back(e.metrics.beta);
    }
    if (!events.empty()) {
        const auto n = static_cast<double>(events.size());
        const auto mean = [n](const std::vector<double>& v) {
            double sum = 0.0;
            for (const double x : v) sum += x;
            return sum / n;
        };
        s.delta_mean = mean(deltas);
        s.alpha_mean = mean(alphas);
        s.beta_mean = mean(betas);
        if (events.size() > 1) {
            double ss = 0.0;
            for (const double d : deltas) ss += (d - s.delta_mean) * (d - s.delta_mean);
            s.delta_sd = std::sqrt(ss / (n - 1.0));
        }
        s.histograms["delta_we"] = Histogram::build(deltas, options.bins);
        s.histograms["alpha"] = Histogram::build(alphas, options.bins);
        s.histograms["beta"] = Histogram::build(betas, options.bins);
    }

    std::vector<BatterLedger> all;
    std::vector<BatterLedger> qualifying;
    std::vector<double> arbi_ratio;
    std::vector<double> crbi_ratio;
    for (const auto& [id, ledger] : ledgers) {
        all.push_back(ledger);
        if (ledger.rbi >= options.min_rbi && ledger.rbi > 0) {
            qualifying.push_back(ledger);
            arbi_ratio.push_back(ledger.arbi_per_rbi);
            crbi_ratio.push_back(ledger.crbi_per_rbi);
        }
    }
    s.qualifying_batters = qualifying.size();
    if (!qualifying.empty()) {
        s.arbi_per_rbi = quartiles(arbi_ratio);
        s.crbi_per_rbi = quartiles(crbi_ratio);
        s.histograms["arbi_per_rbi"] = Histogram::build(arbi_ratio, options.bins);
        s.histograms["crbi_per_rbi"] = Histogram::build(crbi_ratio, options.bins);
    }

    report.leaders.by_rbi = top(std::move(all), LeaderMetric::Rbi, options.top_n);
    report.leaders.by_arbi_per_rbi = top(qualifying, LeaderMetric::ArbiPerRbi, options.top_n);
    report.leaders.by_crbi_per_rbi = top(std::move(qualifying), LeaderMetric::CrbiPerRbi, options.top_n);
    return report;
}

}  // namespace ctxrbi
