#include "ctxrbi/game.hpp"

#include "ctxrbi/errors.hpp"

namespace ctxrbi {

GameState GameState::final_score(int score_diff) {
    if (score_diff == 0) throw Error(ErrorKind::DomainError, "a finished game cannot be tied");
    return GameState{StateKey{}, score_diff, true};
}

double batting_team_we(const WeModel& model, const GameState& state, Team team) {
    double home = 0.0;
    if (state.terminal) {
        if (state.score_diff == 0) throw Error(ErrorKind::DomainError, "a finished game cannot be tied");
        home = state.score_diff > 0 ? 1.0 : 0.0;
    } else {
        home = model.lookup(state.key, static_cast<double>(state.score_diff));
    }
    return team == Team::Home ? home : 1.0 - home;
}

DeltaWe compute_delta_we(const WeModel& model, const ScoringEvent& event) {
    const double start = batting_team_we(model, event.before, event.batting_team);
    const double end = batting_team_we(model, event.after, event.batting_team);
    return make_delta_we(start, end);
}

}  // namespace ctxrbi
