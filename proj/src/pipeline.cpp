#include "ctxrbi/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace ctxrbi {

void add_event(BatterLedger& ledger, const MetricValues& metrics) noexcept {
    ledger.rbi += metrics.rbi;
    ledger.arbi += metrics.arbi;
    ledger.crbi += metrics.crbi;
    ledger.event_count += 1;
}

void finalize(BatterLedger& ledger) noexcept {
    ledger.arbi_per_rbi = 0.0;
    ledger.crbi_per_rbi = 0.0;
    if (ledger.rbi > 0) {
        ledger.arbi_per_rbi = ledger.arbi / static_cast<double>(ledger.rbi);
        ledger.crbi_per_rbi = ledger.crbi / static_cast<double>(ledger.rbi);
    }
}

PipelineResult run_pipeline(const WeModel& model, const AlphaFamily& family, std::span<const EventRecord> events) {
    std::vector<std::size_t> order(events.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(events[a].game_id, events[a].event_id) < std::tie(events[b].game_id, events[b].event_id);
    });

    PipelineResult out;
    out.events.reserve(events.size());
    for (const std::size_t i : order) {
        const EventRecord& record = events[i];
        EventResult r{record.game_id, record.event_id, record.batter_id, {}, {}};
        try {
            const ScoringEvent event = to_scoring_event(record);
            r.delta_we = compute_delta_we(model, event);
            r.metrics = score_event_metrics(family, r.delta_we, credit_rbis(event).rbi);
        } catch (const Error& e) {
            throw Error(e.kind(), "event " + record.game_id + "/" + record.event_id + ": " + e.detail());
        }

        if (r.metrics.warnings.sigma_degenerate) {
            out.warnings.push_back("event " + record.game_id + "/" + record.event_id +
                                   ": WE change near 1 collapses the beta bell");
        }
        if (r.metrics.warnings.we_end_infeasible) {
            out.warnings.push_back("event " + record.game_id + "/" + record.event_id +
                                   ": WE after the play is below the WE change (inconsistent WE table?)");
        }

        auto [it, fresh] = out.ledgers.try_emplace(record.batter_id);
        BatterLedger& ledger = it->second;
        if (fresh) {
            ledger.batter_id = record.batter_id;
            ledger.batter_name = record.batter_name;
        }
        add_event(ledger, r.metrics);

        out.events.push_back(std::move(r));
    }

    for (auto& [id, ledger] : out.ledgers) finalize(ledger);
    return out;
}

}  // namespace ctxrbi
