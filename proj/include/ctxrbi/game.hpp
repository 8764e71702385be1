#pragma once

#include <string>

#include "ctxrbi/state.hpp"
#include "ctxrbi/we_table.hpp"

namespace ctxrbi {

/// A point in a game. Terminal states carry only the final differential;
/// their key is ignored.
struct GameState {
    StateKey key{};
    int score_diff = 0;  // home minus away
    bool terminal = false;

    static GameState ongoing(const StateKey& key, int score_diff) { return GameState{key, score_diff, false}; }
    /// Throws Error(DomainError) on a tied final.
    static GameState final_score(int score_diff);
};

/// One plate appearance during which at least one run scored.
///
/// Runs must already be attributed to the plate appearance by whoever
/// produced the data; a run scoring on a wild pitch in the next batter's
/// plate appearance belongs to that next event.
struct ScoringEvent {
    std::string event_id;
    std::string game_id;
    std::string batter_id;
    Team batting_team = Team::Home;
    GameState before{};
    GameState after{};
    int runs_scored = 1;
};

/// Win expectancy change across a scoring event, seen from the batting
/// team: delta = we_end - we_start.
struct DeltaWe {
    double we_start = 0.0;
    double we_end = 0.0;
    double delta = 0.0;
};

inline DeltaWe make_delta_we(double we_start, double we_end) noexcept {
    return DeltaWe{we_start, we_end, we_end - we_start};
}

/// Win expectancy of `team`. Terminal states give exactly 1 or 0.
double batting_team_we(const WeModel& model, const GameState& state, Team team);

/// Throws Error(UnknownState) when either side has no table row.
DeltaWe compute_delta_we(const WeModel& model, const ScoringEvent& event);

struct RbiCredit {
    std::string batter_id;
    int rbi = 0;
};

/// Every run scored during the plate appearance is credited to the batter,
/// including runs on errors, wild pitches and double plays.
inline RbiCredit credit_rbis(const ScoringEvent& event) { return RbiCredit{event.batter_id, event.runs_scored}; }

}  // namespace ctxrbi
