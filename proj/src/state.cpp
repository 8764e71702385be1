#include "ctxrbi/state.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "ctxrbi/errors.hpp"

namespace ctxrbi {

namespace {

std::string normalize(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

// Indexed by Bases::mask().
constexpr std::array<std::string_view, 8> kRunnerLabels = {
    "Empty", "1B Only", "2B Only", "1B 2B", "3B Only", "1B 3B", "2B 3B", "Loaded",
};

}  // namespace

StateKey make_state_key(int inning, Half half, int outs, Bases bases) {
    if (inning < 1 || inning > kInnings) {
        throw Error(ErrorKind::RangeViolation,
                    "inning " + std::to_string(inning) + " outside 1-" + std::to_string(kInnings));
    }
    if (outs < 0 || outs > kMaxOuts) {
        throw Error(ErrorKind::RangeViolation, "outs " + std::to_string(outs) + " outside 0-2");
    }
    return StateKey{inning, half, outs, bases};
}

std::string_view to_string(Half half) noexcept { return half == Half::Top ? "Top" : "Bottom"; }

std::string_view to_string(Team team) noexcept { return team == Team::Home ? "Home" : "Away"; }

Half parse_half(std::string_view text) {
    const std::string t = normalize(text);
    if (t == "top" || t == "t") return Half::Top;
    if (t == "bottom" || t == "bot" || t == "b") return Half::Bottom;
    throw Error(ErrorKind::MalformedRow, "unknown half '" + std::string(text) + "'");
}

Team parse_team(std::string_view text) {
    const std::string t = normalize(text);
    if (t == "home") return Team::Home;
    if (t == "away") return Team::Away;
    throw Error(ErrorKind::MalformedRow, "unknown team '" + std::string(text) + "'");
}

std::string_view runner_label(Bases bases) noexcept { return kRunnerLabels[bases.mask()]; }

Bases parse_runner_label(std::string_view text) {
    const std::string t = normalize(text);
    for (std::uint8_t m = 0; m < kRunnerLabels.size(); ++m) {
        if (normalize(kRunnerLabels[m]) == t) return Bases::from_mask(m);
    }
    throw Error(ErrorKind::MalformedRow, "unknown runners label '" + std::string(text) + "'");
}

std::string bases_code(Bases bases) {
    return {bases.first ? '1' : '0', bases.second ? '1' : '0', bases.third ? '1' : '0'};
}

Bases parse_bases_code(std::string_view text) {
    const bool valid = text.size() == 3 && std::all_of(text.begin(), text.end(), [](char c) {
                           return c == '0' || c == '1';
                       });
    if (!valid) {
        throw Error(ErrorKind::MalformedRow,
                    "bases must be three 0/1 characters, got '" + std::string(text) + "'");
    }
    return Bases{text[0] == '1', text[1] == '1', text[2] == '1'};
}

std::string describe(const StateKey& key) {
    return std::string(to_string(key.half)) + " " + std::to_string(key.inning) + ", " +
           std::to_string(key.outs) + " out, " + std::string(runner_label(key.bases));
}

}  // namespace ctxrbi
