#include "ctxrbi/we_table.hpp"

#include <cmath>
#include <fstream>
#include <mutex>
#include <string>

#include "ctxrbi/csv.hpp"
#include "ctxrbi/errors.hpp"

namespace ctxrbi {

namespace {

constexpr std::size_t kColumns = 4 + (kTableMaxDiff - kTableMinDiff + 1);

int parse_int_field(std::string_view field, std::string_view name, std::size_t line) {
    const auto v = csv::to_integer(field);
    if (!v) {
        throw Error(ErrorKind::MalformedRow,
                    std::string(name) + " is not an integer: '" + std::string(field) + "'", line);
    }
    return static_cast<int>(*v);
}

}  // namespace

void WeTable::insert(const StateKey& key, std::vector<Knot> knots) {
    if (knots.size() < 2) {
        throw Error(ErrorKind::DegenerateKnots, describe(key) + ": need at least 2 knots");
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (knots[i].y < 0.0 || knots[i].y > 1.0) {
            throw Error(ErrorKind::DomainError, describe(key) + ": win expectancy outside [0, 1]");
        }
        if (i > 0 && !(knots[i].x > knots[i - 1].x)) {
            throw Error(ErrorKind::DegenerateKnots, describe(key) + ": score diffs not increasing");
        }
        if (i > 0 && knots[i].y < knots[i - 1].y) {
            throw Error(ErrorKind::NonMonotoneRow, describe(key) + ": win expectancy decreases in score diff");
        }
    }
    const auto [it, inserted] = entries_.emplace(key, std::move(knots));
    if (!inserted) throw Error(ErrorKind::DuplicateState, describe(key) + " appears twice");
}

const std::vector<Knot>* WeTable::find(const StateKey& key) const noexcept {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

WeTable parse_we_table(std::istream& in) {
    csv::Reader reader(in);
    const auto header = reader.next();
    if (!header) throw Error(ErrorKind::MalformedRow, "empty WE table");
    std::vector<std::string> expected = csv::split(kWeTableHeader);
    std::vector<std::string> got;
    for (const auto& h : *header) got.emplace_back(csv::trim(h));
    if (got != expected) {
        throw Error(ErrorKind::MalformedRow,
                    "header must be '" + std::string(kWeTableHeader) + "'", reader.line());
    }

    WeTable table;
    while (auto row = reader.next()) {
        const std::size_t line = reader.line();
        if (row->size() != kColumns) {
            throw Error(ErrorKind::MalformedRow,
                        "expected " + std::to_string(kColumns) + " columns, got " + std::to_string(row->size()),
                        line);
        }
        const auto& f = *row;
        StateKey key;
        try {
            key = make_state_key(parse_int_field(f[0], "inning", line), parse_half(f[1]),
                                 parse_int_field(f[2], "outs", line), parse_runner_label(f[3]));
        } catch (const Error& e) {
            if (e.line() != 0) throw;
            throw Error(ErrorKind::MalformedRow, e.detail(), line);
        }

        std::vector<Knot> knots;
        knots.reserve(kColumns - 4);
        for (std::size_t c = 4; c < kColumns; ++c) {
            const auto we = csv::to_double(f[c]);
            if (!we) {
                throw Error(ErrorKind::MalformedRow,
                            "non-numeric win expectancy '" + f[c] + "' in column " + expected[c], line);
            }
            if (*we < 0.0 || *we > 1.0) {
                throw Error(ErrorKind::MalformedRow,
                            "win expectancy " + f[c] + " outside [0, 1] in column " + expected[c], line);
            }
            const int diff = kTableMinDiff + static_cast<int>(c - 4);
            if (!knots.empty() && *we < knots.back().y) {
                throw Error(ErrorKind::NonMonotoneRow,
                            describe(key) + ": win expectancy drops from " + csv::format_fixed(knots.back().y, 3) +
                                " to " + f[c] + " at diff " + std::to_string(diff),
                            line);
            }
            knots.push_back(Knot{static_cast<double>(diff), *we});
        }

        if (table.contains(key)) {
            throw Error(ErrorKind::DuplicateState, describe(key) + " appears twice", line);
        }
        table.insert(key, std::move(knots));
    }
    return table;
}

WeTable load_we_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open WE table '" + path.string() + "'");
    return parse_we_table(in);
}

WeModel::WeModel(WeTable table) : table_(std::move(table)) {}

const std::vector<Knot>& WeModel::knots_for(const StateKey& key) const {
    const auto* knots = table_.find(key);
    if (knots == nullptr) throw Error(ErrorKind::UnknownState, "no WE row for " + describe(key));
    return *knots;
}

const WeCurve& WeModel::curve(const StateKey& key) const {
    const auto& knots = knots_for(key);
    {
        std::shared_lock lock(mutex_);
        if (const auto it = curves_.find(key); it != curves_.end()) return *it->second;
    }
    auto built = std::make_unique<const WeCurve>(WeCurve::build(knots));
    std::unique_lock lock(mutex_);
    const auto [it, inserted] = curves_.try_emplace(key, std::move(built));
    return *it->second;
}

void WeModel::precompute() const {
    for (const auto& [key, knots] : table_.entries()) curve(key);
}

double WeModel::lookup(const StateKey& key, double score_diff) const {
    const auto& knots = knots_for(key);
    if (score_diff == std::floor(score_diff) && score_diff >= knots.front().x && score_diff <= knots.back().x) {
        for (const auto& k : knots) {
            if (k.x == score_diff) return k.y;
        }
    }
    return curve(key)(score_diff);
}

}  // namespace ctxrbi
