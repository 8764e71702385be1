#include "doctest.h"

#include <filesystem>
#include <sstream>

#include "ctxrbi/errors.hpp"
#include "ctxrbi/report.hpp"
#include "support.hpp"

using namespace ctxrbi;
namespace fs = std::filesystem;

namespace {

struct Season {
    WeModel model{load_we_table(test::data_dir() / "we_synthetic.csv")};
    PipelineResult result;
    SummaryReport report;

    Season() {
        const auto parsed = load_events(test::data_dir() / "season20_events.csv");
        result = run_pipeline(model, AlphaFamily::standard(), parsed.records);
        report = summarize(result.ledgers, result.events, SummaryOptions{5, 10, 3});
    }

    ReportInput input() const { return ReportInput{report, result.ledgers, result.events}; }
};

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("ctxrbi_report_" + name);
    fs::remove_all(p);
    return p;
}

}  // namespace

TEST_CASE("report formats write their files") {
    const Season s;
    const fs::path dir = scratch("formats");

    const auto csv_files = emit_report(s.input(), ReportFormat::Csv, dir);
    CHECK(csv_files.size() == 4);
    for (const auto& f : csv_files) CHECK(fs::exists(f));
    const auto rows = test::read_csv_rows(dir / std::string(kLedgersFile));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].at("batter_id") == "B01");
    CHECK(rows[0].at("RBI") == "10");

    const auto json_files = emit_report(s.input(), ReportFormat::Json, dir);
    REQUIRE(json_files.size() == 1);
    const std::string json = test::slurp(json_files[0]);
    CHECK(json.find("\"event_count\": 20") != std::string::npos);

    const auto plot_files = emit_report(s.input(), ReportFormat::PlotData, dir);
    CHECK(plot_files.size() == 6);
    CHECK(fs::exists(dir / std::string(kEventMetricsFile)));
    fs::remove_all(dir);
}

TEST_CASE("report output is deterministic") {
    const Season a;
    const Season b;
    CHECK(to_json(a.input()) == to_json(b.input()));
    std::ostringstream x;
    std::ostringstream y;
    write_ledgers_csv(x, a.result.ledgers);
    write_ledgers_csv(y, b.result.ledgers);
    CHECK(x.str() == y.str());
}

TEST_CASE("ledgers round-trip through CSV") {
    const Season s;
    std::ostringstream out;
    write_ledgers_csv(out, s.result.ledgers);
    std::istringstream in(out.str());
    const auto back = read_ledgers_csv(in);
    REQUIRE(back.size() == s.result.ledgers.size());
    for (const auto& l : back) {
        const auto& orig = s.result.ledgers.at(l.batter_id);
        CHECK(l.rbi == orig.rbi);
        CHECK(l.batter_name == orig.batter_name);
        CHECK(test::near(l.arbi, orig.arbi, 1e-9));
    }

    std::istringstream bad("batter_id,Batter,RBI,ARBI,ARBI/RBI,CRBI,CRBI/RBI,events\nB1,X,ten,1,1,1,1,1\n");
    try {
        read_ledgers_csv(bad);
        FAIL("expected MalformedRow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedRow);
        CHECK(e.line() == 2);
    }
}

TEST_CASE("format names and text rendering") {
    CHECK(parse_report_format("csv") == ReportFormat::Csv);
    CHECK(parse_report_format("plot-data") == ReportFormat::PlotData);
    CHECK_THROWS_AS(parse_report_format("xml"), Error);

    const Season s;
    const std::string text = render_leaderboard(s.report.leaders.by_rbi);
    CHECK(text.find("Avery Stone") != std::string::npos);
    CHECK(text.find("10") != std::string::npos);
}
