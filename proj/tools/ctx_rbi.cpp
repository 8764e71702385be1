#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctxrbi/ctxrbi.hpp"
#include "ctxrbi/csv.hpp"

namespace fs = std::filesystem;
using namespace ctxrbi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::IoError:
        case ErrorKind::MalformedRow:
        case ErrorKind::NonMonotoneRow:
        case ErrorKind::DuplicateState:
            return kExitIo;
        default:
            return kExitUsage;
    }
}

struct StateArgs {
    int inning = 1;
    std::string half;
    int outs = 0;
    std::string bases = "000";

    StateKey key() const { return make_state_key(inning, parse_half(half), outs, parse_bases_code(bases)); }
};

void add_state_options(CLI::App* cmd, StateArgs& s) {
    cmd->add_option("--inning", s.inning, "Inning, 1-9")->required()->check(CLI::Range(1, kInnings));
    cmd->add_option("--half", s.half, "top or bottom")->required();
    cmd->add_option("--outs", s.outs, "Outs, 0-2")->required()->check(CLI::Range(0, kMaxOuts));
    cmd->add_option("--bases", s.bases, "Occupied bases as 1st/2nd/3rd flags, e.g. 101")->default_val("000");
}

std::string fmt6(double v) { return csv::format_fixed(v, 6); }

WeModel open_model(const std::string& path) {
    if (path.empty()) throw Error(ErrorKind::IoError, "no WE table given (use --we-table or CTX_RBI_WE_TABLE)");
    return WeModel(load_we_table(path));
}

struct ComputeArgs {
    std::string events;
    std::string family = "sigmoid";
    std::optional<double> k;
    long min_rbi = 30;
    std::string output_dir = "ctx_rbi_out";
    std::size_t bins = 50;
    std::size_t top = 10;
    std::vector<std::string> formats{"csv", "json", "plot-data"};
};

AlphaFamily make_family(const ComputeArgs& a) {
    const AlphaKind kind = parse_alpha_kind(a.family);
    if (kind == AlphaKind::Power && !a.k) throw Error(ErrorKind::DomainError, "--alpha-family power needs --alpha-k");
    return AlphaFamily(kind, a.k.value_or(4.0));
}

void print_board(const char* title, const std::vector<BatterLedger>& rows) {
    std::cout << "\n" << title << "\n" << render_leaderboard(rows);
}

int run_we_eval(const std::string& table, const StateArgs& s, double diff) {
    const WeModel model = open_model(table);
    std::cout << fmt6(model.lookup(s.key(), diff)) << "\n";
    return kExitOk;
}

int run_we_curve(const std::string& table, const StateArgs& s, double from, double to, double step) {
    if (!(step > 0.0) || !(to >= from)) throw Error(ErrorKind::DomainError, "need --to >= --from and --step > 0");
    const WeModel model = open_model(table);
    const StateKey key = s.key();
    std::cout << "diff,we\n";
    const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9));
    for (long i = 0; i <= count; ++i) {
        const double x = from + static_cast<double>(i) * step;
        std::cout << csv::format_fixed(x, 6) << "," << fmt6(model.lookup(key, x)) << "\n";
    }
    return kExitOk;
}

int run_compute(const std::string& table, const ComputeArgs& a) {
    const AlphaFamily family = make_family(a);
    const WeModel model = open_model(table);
    const EventParseResult parsed = load_events(a.events);
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) std::cerr << a.events << ": " << e.to_string() << "\n";
        return kExitIo;
    }
    if (parsed.records.empty()) std::cerr << "warning: " << a.events << " contains no events\n";

    const PipelineResult result = run_pipeline(model, family, parsed.records);
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";

    const SummaryReport report = summarize(result.ledgers, result.events, SummaryOptions{a.min_rbi, a.bins, a.top});
    const ReportInput input{report, result.ledgers, result.events};
    for (const auto& f : a.formats) emit_report(input, parse_report_format(f), a.output_dir);

    const auto& s = report.summary;
    std::cout << "events: " << s.event_count << "\n"
              << "batters: " << s.batter_count << " (" << s.qualifying_batters << " with RBI >= " << s.min_rbi
              << ")\n"
              << "alpha: " << to_string(family.kind()) << " k=" << csv::format_fixed(family.k(), 3) << "\n"
              << "mean delta WE: " << fmt6(s.delta_mean) << "\n"
              << "mean alpha: " << fmt6(s.alpha_mean) << "\n"
              << "mean beta: " << fmt6(s.beta_mean) << "\n";
    if (s.arbi_per_rbi) std::cout << "median ARBI/RBI: " << fmt6(s.arbi_per_rbi->p50) << "\n";
    if (s.crbi_per_rbi) std::cout << "median CRBI/RBI: " << fmt6(s.crbi_per_rbi->p50) << "\n";
    std::cout << "output: " << a.output_dir << "\n";
    return kExitOk;
}

int run_report(const std::string& ledgers_path, long min_rbi, std::size_t top) {
    std::ifstream in(ledgers_path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + ledgers_path);
    std::vector<BatterLedger> all = read_ledgers_csv(in);

    std::vector<BatterLedger> qualifying;
    for (const auto& l : all) {
        if (l.rbi >= min_rbi) qualifying.push_back(l);
    }
    const auto head = [top](std::vector<BatterLedger> v) {
        if (v.size() > top) v.resize(top);
        return v;
    };
    print_board("Top RBI", head(rank_batters(all, LeaderMetric::Rbi)));
    print_board("Top ARBI/RBI", head(rank_batters(qualifying, LeaderMetric::ArbiPerRbi)));
    print_board("Top CRBI/RBI", head(rank_batters(qualifying, LeaderMetric::CrbiPerRbi)));

    std::cout << "\nqualifying batters (RBI >= " << min_rbi << "): " << qualifying.size() << "\n";
    if (!qualifying.empty()) {
        std::vector<double> a;
        std::vector<double> c;
        for (const auto& l : qualifying) {
            a.push_back(l.arbi_per_rbi);
            c.push_back(l.crbi_per_rbi);
        }
        for (const auto& [name, values] : {std::pair{"ARBI/RBI", &a}, std::pair{"CRBI/RBI", &c}}) {
            std::cout << name << " p25/p50/p75: " << fmt6(percentile(*values, 25)) << " "
                      << fmt6(percentile(*values, 50)) << " " << fmt6(percentile(*values, 75)) << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Context-adjusted RBI metrics from win expectancy tables"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ctx_rbi 0.1.0");

    std::string table;
    app.add_option("--we-table", table, "WE table CSV")->envname("CTX_RBI_WE_TABLE");

    StateArgs eval_state;
    double diff = 0.0;
    auto* we_eval = app.add_subcommand("we-eval", "Home win expectancy for one game state");
    add_state_options(we_eval, eval_state);
    we_eval->add_option("--diff", diff, "Score differential, home minus away")->required();

    StateArgs curve_state;
    double from = -10.0;
    double to = 10.0;
    double step = 1.0;
    auto* we_curve = app.add_subcommand("we-curve", "Sample the extended WE curve as CSV");
    add_state_options(we_curve, curve_state);
    we_curve->add_option("--from", from, "First differential")->capture_default_str();
    we_curve->add_option("--to", to, "Last differential")->capture_default_str();
    we_curve->add_option("--step", step, "Spacing")->capture_default_str();

    ComputeArgs compute;
    auto* cmp = app.add_subcommand("compute", "Score a season of events and write reports");
    cmp->add_option("--events", compute.events, "Scoring-event CSV")->required();
    cmp->add_option("--alpha-family", compute.family, "sigmoid or power")->capture_default_str();
    cmp->add_option("--alpha-k", compute.k, "Steepness k > 0 (default 4 for sigmoid)")
        ->check(CLI::PositiveNumber);
    cmp->add_option("--min-rbi", compute.min_rbi, "RBI needed to qualify for ratio boards")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    cmp->add_option("--output-dir", compute.output_dir, "Directory for output files")->capture_default_str();
    cmp->add_option("--bins", compute.bins, "Histogram bins")->capture_default_str()->check(CLI::PositiveNumber);
    cmp->add_option("--top", compute.top, "Leaderboard length")->capture_default_str();
    cmp->add_option("--format", compute.formats, "csv, json, plot-data (repeatable)")
        ->check(CLI::IsMember({"csv", "json", "plot-data"}));

    std::string ledgers_path;
    long report_min_rbi = 30;
    std::size_t report_top = 10;
    auto* rep = app.add_subcommand("report", "Leaderboards and percentiles from a ledgers.csv");
    rep->add_option("--ledgers", ledgers_path, "ledgers.csv written by compute")->required();
    rep->add_option("--min-rbi", report_min_rbi, "RBI needed to qualify")->capture_default_str();
    rep->add_option("--top", report_top, "Leaderboard length")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*we_eval) return run_we_eval(table, eval_state, diff);
        if (*we_curve) return run_we_curve(table, curve_state, from, to, step);
        if (*cmp) return run_compute(table, compute);
        if (*rep) return run_report(ledgers_path, report_min_rbi, report_top);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}
