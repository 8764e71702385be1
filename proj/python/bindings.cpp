#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctxrbi/ctxrbi.hpp"

namespace py = pybind11;
using namespace ctxrbi;

namespace {

StateKey state(int inning, const std::string& half, int outs, const std::string& bases) {
    return make_state_key(inning, parse_half(half), outs, parse_bases_code(bases));
}

AlphaFamily family(const std::string& kind, double k) { return AlphaFamily(parse_alpha_kind(kind), k); }

py::dict ledger_dict(const BatterLedger& l) {
    py::dict d;
    d["batter_id"] = l.batter_id;
    d["batter_name"] = l.batter_name;
    d["rbi"] = l.rbi;
    d["arbi"] = l.arbi;
    d["crbi"] = l.crbi;
    d["arbi_per_rbi"] = l.arbi_per_rbi;
    d["crbi_per_rbi"] = l.crbi_per_rbi;
    d["events"] = l.event_count;
    return d;
}

py::dict metrics_dict(const DeltaWe& dw, const MetricValues& m) {
    py::dict d;
    d["we_start"] = dw.we_start;
    d["we_end"] = dw.we_end;
    d["delta"] = dw.delta;
    d["alpha"] = m.alpha;
    d["beta"] = m.beta;
    d["arbi"] = m.arbi;
    d["crbi"] = m.crbi;
    d["rbi"] = m.rbi;
    d["sigma_degenerate"] = m.warnings.sigma_degenerate;
    d["we_end_infeasible"] = m.warnings.we_end_infeasible;
    return d;
}

py::dict compute(const std::filesystem::path& we_table, const std::filesystem::path& events, const std::string& kind,
                 double k, long min_rbi, std::size_t bins, std::size_t top_n,
                 const std::optional<std::filesystem::path>& output_dir, const std::vector<std::string>& formats) {
    const AlphaFamily f = family(kind, k);
    const WeModel model(load_we_table(we_table));
    const EventParseResult parsed = load_events(events);
    if (!parsed.ok()) {
        const RowError& e = parsed.errors.front();
        throw Error(e.kind, e.message, e.line);
    }
    const PipelineResult result = run_pipeline(model, f, parsed.records);
    const SummaryReport report = summarize(result.ledgers, result.events, SummaryOptions{min_rbi, bins, top_n});

    py::list written;
    if (output_dir) {
        const ReportInput input{report, result.ledgers, result.events};
        for (const auto& fmt : formats) {
            for (const auto& p : emit_report(input, parse_report_format(fmt), *output_dir)) written.append(p);
        }
    }

    py::list ledgers;
    for (const auto& l : rank_batters([&] {
             std::vector<BatterLedger> v;
             for (const auto& [id, l] : result.ledgers) v.push_back(l);
             return v;
         }(),
                                      LeaderMetric::Rbi)) {
        ledgers.append(ledger_dict(l));
    }
    py::list per_event;
    for (const auto& e : result.events) {
        py::dict d = metrics_dict(e.delta_we, e.metrics);
        d["game_id"] = e.game_id;
        d["event_id"] = e.event_id;
        d["batter_id"] = e.batter_id;
        per_event.append(d);
    }

    const auto& s = report.summary;
    py::dict summary;
    summary["event_count"] = s.event_count;
    summary["batter_count"] = s.batter_count;
    summary["qualifying_batters"] = s.qualifying_batters;
    summary["delta_we_mean"] = s.delta_mean;
    summary["delta_we_sd"] = s.delta_sd;
    summary["alpha_mean"] = s.alpha_mean;
    summary["beta_mean"] = s.beta_mean;
    if (s.arbi_per_rbi) summary["arbi_per_rbi_median"] = s.arbi_per_rbi->p50;
    if (s.crbi_per_rbi) summary["crbi_per_rbi_median"] = s.crbi_per_rbi->p50;

    py::dict out;
    out["ledgers"] = ledgers;
    out["events"] = per_event;
    out["summary"] = summary;
    out["warnings"] = result.warnings;
    out["files"] = written;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Context-adjusted RBI metrics";

    static py::exception<Error> error_type(m, "CtxRbiError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            exc.attr("line") = e.line();
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<WeModel, std::shared_ptr<WeModel>>(m, "WeModel")
        .def(py::init([](const std::filesystem::path& path) { return std::make_shared<WeModel>(load_we_table(path)); }),
             py::arg("path"))
        .def(
            "lookup",
            [](const WeModel& self, int inning, const std::string& half, int outs, const std::string& bases,
               double diff) { return self.lookup(state(inning, half, outs, bases), diff); },
            py::arg("inning"), py::arg("half"), py::arg("outs"), py::arg("bases"), py::arg("diff"),
            "Home win expectancy; bases is a 1st/2nd/3rd code such as \"101\".")
        .def(
            "curve",
            [](const WeModel& self, int inning, const std::string& half, int outs, const std::string& bases,
               const std::vector<double>& diffs) {
                const StateKey key = state(inning, half, outs, bases);
                std::vector<double> out;
                out.reserve(diffs.size());
                for (const double d : diffs) out.push_back(self.lookup(key, d));
                return out;
            },
            py::arg("inning"), py::arg("half"), py::arg("outs"), py::arg("bases"), py::arg("diffs"))
        .def("__len__", [](const WeModel& self) { return self.table().size(); });

    m.def("pchip", [](const std::vector<double>& x, const std::vector<double>& y, const std::vector<double>& at) {
        if (x.size() != y.size()) throw Error(ErrorKind::DegenerateKnots, "x and y differ in length");
        std::vector<Knot> knots;
        for (std::size_t i = 0; i < x.size(); ++i) knots.push_back(Knot{x[i], y[i]});
        const WeCurve c = build_curve(knots);
        std::vector<double> out;
        for (const double v : at) out.push_back(c(v));
        return out;
    }, py::arg("x"), py::arg("y"), py::arg("at"), "Evaluate the tail-extended monotone curve through (x, y).");

    m.def("alpha", [](double delta, const std::string& kind, double k) { return family(kind, k)(delta); },
          py::arg("delta"), py::arg("family") = "sigmoid", py::arg("k") = 4.0);
    m.def("beta", [](double delta, double we_end, const std::string& kind, double k) {
        return beta(family(kind, k), delta, we_end);
    }, py::arg("delta"), py::arg("we_end"), py::arg("family") = "sigmoid", py::arg("k") = 4.0);
    m.def("score_event", [](double we_start, double we_end, int rbi, const std::string& kind, double k) {
        const DeltaWe dw = make_delta_we(we_start, we_end);
        return metrics_dict(dw, score_event_metrics(family(kind, k), dw, rbi));
    }, py::arg("we_start"), py::arg("we_end"), py::arg("rbi"), py::arg("family") = "sigmoid", py::arg("k") = 4.0);

    m.def("compute", &compute, py::arg("we_table"), py::arg("events"), py::arg("family") = "sigmoid",
          py::arg("k") = 4.0, py::arg("min_rbi") = 30, py::arg("bins") = 50, py::arg("top_n") = 10,
          py::arg("output_dir") = py::none(), py::arg("formats") = std::vector<std::string>{"csv", "json", "plot-data"});
}
