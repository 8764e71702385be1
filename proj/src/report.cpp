#include "ctxrbi/report.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "ctxrbi/csv.hpp"
#include "ctxrbi/errors.hpp"

namespace ctxrbi {

namespace {

constexpr int kDigits = 10;
constexpr std::string_view kLedgerHeader = "batter_id,Batter,RBI,ARBI,ARBI/RBI,CRBI,CRBI/RBI,events";
constexpr std::string_view kLeaderHeader = "Batter,RBI,ARBI,ARBI/RBI,CRBI,CRBI/RBI";

std::string num(double v) { return csv::format_fixed(v, kDigits); }

std::vector<BatterLedger> values(const std::map<std::string, BatterLedger>& ledgers) {
    std::vector<BatterLedger> out;
    out.reserve(ledgers.size());
    for (const auto& [id, l] : ledgers) out.push_back(l);
    return out;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path.string() + "'");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path.string() + "'");
}

nlohmann::json ledger_json(const BatterLedger& l) {
    return {{"batter_id", l.batter_id}, {"batter_name", l.batter_name},   {"rbi", l.rbi},
            {"arbi", l.arbi},           {"arbi_per_rbi", l.arbi_per_rbi}, {"crbi", l.crbi},
            {"crbi_per_rbi", l.crbi_per_rbi}, {"event_count", l.event_count}};
}

nlohmann::json board_json(const std::vector<BatterLedger>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& l : rows) out.push_back(ledger_json(l));
    return out;
}

nlohmann::json quartiles_json(const std::optional<Quartiles>& q) {
    if (!q) return nullptr;
    return {{"p25", q->p25}, {"p50", q->p50}, {"p75", q->p75}};
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
    if (text == "csv") return ReportFormat::Csv;
    if (text == "json") return ReportFormat::Json;
    if (text == "plot-data") return ReportFormat::PlotData;
    throw Error(ErrorKind::DomainError, "unknown report format '" + std::string(text) + "'");
}

void write_ledgers_csv(std::ostream& out, const std::map<std::string, BatterLedger>& ledgers) {
    out << kLedgerHeader << '\n';
    for (const auto& l : rank_batters(values(ledgers), LeaderMetric::Rbi)) {
        out << csv::join({l.batter_id, l.batter_name, std::to_string(l.rbi), num(l.arbi), num(l.arbi_per_rbi),
                          num(l.crbi), num(l.crbi_per_rbi), std::to_string(l.event_count)})
            << '\n';
    }
}

void write_leaderboard_csv(std::ostream& out, std::span<const BatterLedger> rows) {
    out << kLeaderHeader << '\n';
    for (const auto& l : rows) {
        out << csv::join({l.batter_name, std::to_string(l.rbi), num(l.arbi), num(l.arbi_per_rbi), num(l.crbi),
                          num(l.crbi_per_rbi)})
            << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
    out << "bin_left,bin_right,count\n";
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        out << num(h.bin_left(i)) << ',' << num(h.bin_right(i)) << ',' << h.counts[i] << '\n';
    }
}

void write_event_metrics_csv(std::ostream& out, std::span<const EventResult> events) {
    out << "game_id,event_id,batter_id,we_start,we_end,delta_we,alpha,beta,rbi,arbi,crbi\n";
    for (const auto& e : events) {
        out << csv::join({e.game_id, e.event_id, e.batter_id, num(e.delta_we.we_start), num(e.delta_we.we_end),
                          num(e.delta_we.delta), num(e.metrics.alpha), num(e.metrics.beta),
                          std::to_string(e.metrics.rbi), num(e.metrics.arbi), num(e.metrics.crbi)})
            << '\n';
    }
}

namespace {

nlohmann::json summary_document(const ReportInput& input) {
    const SeasonSummary& s = input.report.summary;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [name, h] : s.histograms) {
        nlohmann::json bins = nlohmann::json::array();
        for (std::size_t i = 0; i < h.counts.size(); ++i) {
            bins.push_back({{"bin_left", h.bin_left(i)}, {"bin_right", h.bin_right(i)}, {"count", h.counts[i]}});
        }
        hist[name] = std::move(bins);
    }

    nlohmann::json ledgers = nlohmann::json::array();
    for (const auto& l : rank_batters(values(input.ledgers), LeaderMetric::Rbi)) ledgers.push_back(ledger_json(l));

    return {
        {"event_count", s.event_count},
        {"batter_count", s.batter_count},
        {"min_rbi", s.min_rbi},
        {"qualifying_batters", s.qualifying_batters},
        {"delta_we_mean", s.delta_mean},
        {"delta_we_sd", s.delta_sd},
        {"alpha_mean", s.alpha_mean},
        {"beta_mean", s.beta_mean},
        {"percentiles", {{"arbi_per_rbi", quartiles_json(s.arbi_per_rbi)},
                         {"crbi_per_rbi", quartiles_json(s.crbi_per_rbi)}}},
        {"leaderboards", {{"rbi", board_json(input.report.leaders.by_rbi)},
                          {"arbi_per_rbi", board_json(input.report.leaders.by_arbi_per_rbi)},
                          {"crbi_per_rbi", board_json(input.report.leaders.by_crbi_per_rbi)}}},
        {"histograms", std::move(hist)},
        {"ledgers", std::move(ledgers)},
    };
}

}  // namespace

std::string to_json(const ReportInput& input) { return summary_document(input).dump(2) + "\n"; }

std::vector<std::filesystem::path> emit_report(const ReportInput& input, ReportFormat format,
                                               const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorKind::IoError, "cannot create '" + out_dir.string() + "': " + ec.message());

    std::vector<std::filesystem::path> written;
    const auto emit = [&](std::string_view name, const auto& body) {
        const auto path = out_dir / name;
        auto out = open_output(path);
        body(out);
        finish(out, path);
        written.push_back(path);
    };

    switch (format) {
        case ReportFormat::Csv: {
            const Leaderboards& b = input.report.leaders;
            emit(kLedgersFile, [&](std::ostream& o) { write_ledgers_csv(o, input.ledgers); });
            emit("leaders_rbi.csv", [&](std::ostream& o) { write_leaderboard_csv(o, b.by_rbi); });
            emit("leaders_arbi_per_rbi.csv", [&](std::ostream& o) { write_leaderboard_csv(o, b.by_arbi_per_rbi); });
            emit("leaders_crbi_per_rbi.csv", [&](std::ostream& o) { write_leaderboard_csv(o, b.by_crbi_per_rbi); });
            break;
        }
        case ReportFormat::Json:
            emit(kSummaryFile, [&](std::ostream& o) { o << to_json(input); });
            break;
        case ReportFormat::PlotData:
            for (const auto& [name, h] : input.report.summary.histograms) {
                emit("hist_" + name + ".csv", [&](std::ostream& o) { write_histogram_csv(o, h); });
            }
            emit(kEventMetricsFile, [&](std::ostream& o) { write_event_metrics_csv(o, input.events); });
            break;
    }
    return written;
}

std::vector<BatterLedger> read_ledgers_csv(std::istream& in) {
    csv::Reader reader(in);
    const auto header = reader.next();
    if (!header || csv::join(*header) != kLedgerHeader) {
        throw Error(ErrorKind::MalformedRow, "ledger header must be '" + std::string(kLedgerHeader) + "'",
                    reader.line());
    }
    std::vector<BatterLedger> out;
    while (auto row = reader.next()) {
        const auto& f = *row;
        const auto bad = [&](const std::string& what) { return Error(ErrorKind::MalformedRow, what, reader.line()); };
        if (f.size() != 8) throw bad("expected 8 columns, got " + std::to_string(f.size()));
        const auto rbi = csv::to_integer(f[2]);
        const auto arbi = csv::to_double(f[3]);
        const auto crbi = csv::to_double(f[5]);
        const auto events = csv::to_integer(f[7]);
        if (!rbi || !arbi || !crbi || !events) throw bad("non-numeric ledger field");
        if (*rbi < 0) throw bad("negative RBI");
        BatterLedger l;
        l.batter_id = f[0];
        l.batter_name = f[1];
        l.rbi = static_cast<long>(*rbi);
        l.arbi = *arbi;
        l.crbi = *crbi;
        l.event_count = static_cast<int>(*events);
        finalize(l);
        out.push_back(std::move(l));
    }
    return out;
}

std::string render_leaderboard(std::span<const BatterLedger> rows) {
    std::size_t width = 6;
    for (const auto& l : rows) width = std::max(width, l.batter_name.size());

    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-*s %5s %9s %9s %9s %9s\n", static_cast<int>(width), "Batter", "RBI", "ARBI",
                  "ARBI/RBI", "CRBI", "CRBI/RBI");
    out << buf;
    for (const auto& l : rows) {
        std::snprintf(buf, sizeof buf, "%-*s %5ld %9.2f %9.2f %9.2f %9.2f\n", static_cast<int>(width),
                      l.batter_name.c_str(), l.rbi, l.arbi, l.arbi_per_rbi, l.crbi, l.crbi_per_rbi);
        out << buf;
    }
    return out.str();
}

}  // namespace ctxrbi
