#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctxrbi/errors.hpp"
#include "ctxrbi/game.hpp"

namespace ctxrbi {

inline constexpr std::string_view kEventHeader =
    "game_id,event_id,batter_id,batter_name,batting_team,inning,half,outs_before,outs_after,"
    "bases_before,bases_after,score_diff_before,score_diff_after,runs_scored,terminal_after";

/// One row of the scoring-event CSV.
///
/// outs_after = 3 means the half inning ended on the play; the after-state
/// is then the start of the next half inning (bases_after is ignored).
struct EventRecord {
    std::string game_id;
    std::string event_id;
    std::string batter_id;
    std::string batter_name;
    Team batting_team = Team::Home;
    int inning = 1;
    Half half = Half::Bottom;
    int outs_before = 0;
    int outs_after = 0;
    Bases bases_before{};
    Bases bases_after{};
    int score_diff_before = 0;
    int score_diff_after = 0;
    int runs_scored = 1;
    bool terminal_after = false;

    friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// Checks field ranges and game logic. Throws Error with kind
/// RangeViolation (ranges, extra innings, impossible endings) or
/// InconsistentScore (runs disagree with the differential change).
void validate(const EventRecord& record);

/// Maps a validated record onto before/after game states.
ScoringEvent to_scoring_event(const EventRecord& record);

struct RowError {
    std::size_t line = 0;
    ErrorKind kind = ErrorKind::MalformedRow;
    std::string message;

    std::string to_string() const;
};

struct EventParseResult {
    std::vector<EventRecord> records;
    std::vector<RowError> errors;

    bool ok() const noexcept { return errors.empty(); }
};

/// Reads every row, keeping valid records in input order and collecting
/// row errors with their line numbers. A bad header is a single error on
/// line 1 and stops parsing. Duplicate (game_id, event_id) pairs are
/// MalformedRow.
EventParseResult parse_events(std::istream& in);
/// Throws Error(IoError) when the file cannot be opened.
EventParseResult load_events(const std::filesystem::path& path);

void write_events(std::ostream& out, std::span<const EventRecord> records);

}  // namespace ctxrbi
