#include "ctxrbi/events.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <utility>

#include "ctxrbi/csv.hpp"

namespace ctxrbi {

namespace {

constexpr std::size_t kEventColumns = 15;

[[noreturn]] void range_violation(const std::string& message) { throw Error(ErrorKind::RangeViolation, message); }

int runners_on(Bases b) { return (b.first ? 1 : 0) + (b.second ? 1 : 0) + (b.third ? 1 : 0); }

// The game is decided by this play: walk-off, or a half inning in the 9th
// that ends with the batting team still behind / the home side ahead.
bool ends_game(const EventRecord& r) {
    if (r.inning != kInnings) return false;
    if (r.half == Half::Bottom) return r.score_diff_after > 0 || (r.outs_after == 3 && r.score_diff_after < 0);
    return r.outs_after == 3 && r.score_diff_after > 0;
}

int int_field(const std::string& text, std::string_view name) {
    const auto v = csv::to_integer(text);
    if (!v) throw Error(ErrorKind::MalformedRow, std::string(name) + " is not an integer: '" + text + "'");
    return static_cast<int>(*v);
}

bool bool_field(const std::string& text, std::string_view name) {
    const auto t = csv::trim(text);
    if (t == "1" || t == "true" || t == "TRUE" || t == "True") return true;
    if (t == "0" || t == "false" || t == "FALSE" || t == "False") return false;
    throw Error(ErrorKind::MalformedRow, std::string(name) + " must be true/false, got '" + text + "'");
}

EventRecord parse_row(const std::vector<std::string>& f) {
    if (f.size() != kEventColumns) {
        throw Error(ErrorKind::MalformedRow, "expected " + std::to_string(kEventColumns) + " columns, got " +
                                                 std::to_string(f.size()));
    }
    EventRecord r;
    r.game_id = std::string(csv::trim(f[0]));
    r.event_id = std::string(csv::trim(f[1]));
    r.batter_id = std::string(csv::trim(f[2]));
    r.batter_name = std::string(csv::trim(f[3]));
    if (r.game_id.empty() || r.event_id.empty() || r.batter_id.empty()) {
        throw Error(ErrorKind::MalformedRow, "game_id, event_id and batter_id must be non-empty");
    }
    r.batting_team = parse_team(f[4]);
    r.inning = int_field(f[5], "inning");
    r.half = parse_half(f[6]);
    r.outs_before = int_field(f[7], "outs_before");
    r.outs_after = int_field(f[8], "outs_after");
    r.bases_before = parse_bases_code(csv::trim(f[9]));
    r.bases_after = parse_bases_code(csv::trim(f[10]));
    r.score_diff_before = int_field(f[11], "score_diff_before");
    r.score_diff_after = int_field(f[12], "score_diff_after");
    r.runs_scored = int_field(f[13], "runs_scored");
    r.terminal_after = bool_field(f[14], "terminal_after");
    return r;
}

}  // namespace

void validate(const EventRecord& r) {
    if (r.inning < 1) range_violation("inning " + std::to_string(r.inning) + " below 1");
    if (r.inning > kInnings) {
        range_violation("inning " + std::to_string(r.inning) + ": extra innings are not supported");
    }
    if (r.outs_before < 0 || r.outs_before > kMaxOuts) {
        range_violation("outs_before " + std::to_string(r.outs_before) + " outside 0-2");
    }
    if (r.outs_after < r.outs_before || r.outs_after > 3) {
        range_violation("outs_after " + std::to_string(r.outs_after) + " must lie in [outs_before, 3]");
    }
    if (r.runs_scored < 1) range_violation("runs_scored must be at least 1");
    if (r.runs_scored > runners_on(r.bases_before) + 1) {
        range_violation("runs_scored " + std::to_string(r.runs_scored) + " exceeds runners on base plus batter");
    }
    if (r.batting_team != batting_team(r.half)) {
        range_violation(std::string(to_string(r.batting_team)) + " team does not bat in the " +
                        std::string(to_string(r.half)) + " half");
    }

    const int change = r.score_diff_after - r.score_diff_before;
    const int expected = r.batting_team == Team::Home ? r.runs_scored : -r.runs_scored;
    if (change != expected) {
        throw Error(ErrorKind::InconsistentScore,
                    "score_diff moved by " + std::to_string(change) + " but " + std::to_string(r.runs_scored) +
                        " run(s) scored for the " + std::string(to_string(r.batting_team)) + " team");
    }

    if (r.inning == kInnings && r.half == Half::Bottom && r.score_diff_before > 0) {
        range_violation("bottom of the 9th with the home team already ahead");
    }
    if (r.inning == kInnings && r.half == Half::Bottom && r.outs_after == 3 && r.score_diff_after == 0) {
        range_violation("tied after the 9th: extra innings are not supported");
    }
    if (ends_game(r) != r.terminal_after) {
        range_violation(r.terminal_after ? "terminal_after set but the play does not end the game"
                                         : "the play ends the game but terminal_after is false");
    }
}

ScoringEvent to_scoring_event(const EventRecord& r) {
    validate(r);
    ScoringEvent e;
    e.event_id = r.event_id;
    e.game_id = r.game_id;
    e.batter_id = r.batter_id;
    e.batting_team = r.batting_team;
    e.runs_scored = r.runs_scored;
    e.before = GameState::ongoing(StateKey{r.inning, r.half, r.outs_before, r.bases_before}, r.score_diff_before);

    if (r.terminal_after) {
        e.after = GameState::final_score(r.score_diff_after);
    } else if (r.outs_after == 3) {
        const StateKey next = r.half == Half::Top ? StateKey{r.inning, Half::Bottom, 0, Bases{}}
                                                  : StateKey{r.inning + 1, Half::Top, 0, Bases{}};
        e.after = GameState::ongoing(next, r.score_diff_after);
    } else {
        e.after = GameState::ongoing(StateKey{r.inning, r.half, r.outs_after, r.bases_after}, r.score_diff_after);
    }
    return e;
}

std::string RowError::to_string() const {
    return "line " + std::to_string(line) + ": " + std::string(ctxrbi::to_string(kind)) + ": " + message;
}

EventParseResult parse_events(std::istream& in) {
    EventParseResult result;
    csv::Reader reader(in);

    const auto header = reader.next();
    if (!header) return result;
    std::vector<std::string> got;
    for (const auto& h : *header) got.emplace_back(csv::trim(h));
    if (got != csv::split(kEventHeader)) {
        result.errors.push_back(
            RowError{reader.line(), ErrorKind::MalformedRow, "header must be '" + std::string(kEventHeader) + "'"});
        return result;
    }

    std::set<std::pair<std::string, std::string>> seen;
    while (auto row = reader.next()) {
        try {
            EventRecord r = parse_row(*row);
            validate(r);
            if (!seen.emplace(r.game_id, r.event_id).second) {
                throw Error(ErrorKind::MalformedRow, "duplicate event " + r.game_id + "/" + r.event_id);
            }
            result.records.push_back(std::move(r));
        } catch (const Error& e) {
            result.errors.push_back(RowError{reader.line(), e.kind(), e.detail()});
        }
    }
    return result;
}

EventParseResult load_events(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open events file '" + path.string() + "'");
    return parse_events(in);
}

void write_events(std::ostream& out, std::span<const EventRecord> records) {
    out << kEventHeader << '\n';
    for (const auto& r : records) {
        out << csv::join({r.game_id, r.event_id, r.batter_id, r.batter_name, std::string(to_string(r.batting_team)),
                          std::to_string(r.inning), std::string(to_string(r.half)), std::to_string(r.outs_before),
                          std::to_string(r.outs_after), bases_code(r.bases_before), bases_code(r.bases_after),
                          std::to_string(r.score_diff_before), std::to_string(r.score_diff_after),
                          std::to_string(r.runs_scored), r.terminal_after ? "true" : "false"})
            << '\n';
    }
}

}  // namespace ctxrbi
