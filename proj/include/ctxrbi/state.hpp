#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ctxrbi {

enum class Half : std::uint8_t { Top, Bottom };
enum class Team : std::uint8_t { Home, Away };

inline constexpr int kInnings = 9;
inline constexpr int kMaxOuts = 2;

/// Occupancy of first, second and third base.
struct Bases {
    bool first = false;
    bool second = false;
    bool third = false;

    constexpr std::uint8_t mask() const noexcept {
        return static_cast<std::uint8_t>((first ? 1 : 0) | (second ? 2 : 0) | (third ? 4 : 0));
    }
    static constexpr Bases from_mask(std::uint8_t m) noexcept {
        return Bases{(m & 1) != 0, (m & 2) != 0, (m & 4) != 0};
    }

    friend constexpr bool operator==(Bases a, Bases b) noexcept { return a.mask() == b.mask(); }
    friend constexpr auto operator<=>(Bases a, Bases b) noexcept { return a.mask() <=> b.mask(); }
};

/// Inning, half, outs and base occupancy: everything a WE lookup needs
/// besides the score differential.
struct StateKey {
    int inning = 1;
    Half half = Half::Top;
    int outs = 0;
    Bases bases{};

    friend constexpr bool operator==(const StateKey&, const StateKey&) = default;
    friend constexpr auto operator<=>(const StateKey&, const StateKey&) = default;
};

/// Validates ranges; throws Error(RangeViolation).
StateKey make_state_key(int inning, Half half, int outs, Bases bases);

/// The team at bat in a given half inning.
constexpr Team batting_team(Half half) noexcept { return half == Half::Top ? Team::Away : Team::Home; }

std::string_view to_string(Half half) noexcept;
std::string_view to_string(Team team) noexcept;

// Case-insensitive parsers; throw Error(MalformedRow) on unknown text.
Half parse_half(std::string_view text);
Team parse_team(std::string_view text);

/// "Empty", "1B Only", ..., "Loaded".
std::string_view runner_label(Bases bases) noexcept;
/// Accepts the eight runner labels, ignoring case and whitespace.
Bases parse_runner_label(std::string_view text);

/// Three characters of 0/1 for first, second, third ("101" = 1st and 3rd).
std::string bases_code(Bases bases);
Bases parse_bases_code(std::string_view text);

std::string describe(const StateKey& key);

}  // namespace ctxrbi
