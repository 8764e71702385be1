#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string_view>
#include <vector>

#include "ctxrbi/pchip.hpp"
#include "ctxrbi/state.hpp"

namespace ctxrbi {

/// Header of the WE table CSV. Columns m5..p5 hold score differentials
/// -5..+5 (home minus away).
inline constexpr std::string_view kWeTableHeader =
    "inning,half,outs,runners,m5,m4,m3,m2,m1,tie,p1,p2,p3,p4,p5";
inline constexpr int kTableMinDiff = -5;
inline constexpr int kTableMaxDiff = 5;

/// Empirical home-team win expectancy per game state, as knots over the
/// score differential.
class WeTable {
public:
    using Entries = std::map<StateKey, std::vector<Knot>>;

    /// Adds one state. Knots need strictly increasing x, at least two of
    /// them, y inside [0, 1] and non-decreasing.
    void insert(const StateKey& key, std::vector<Knot> knots);

    const std::vector<Knot>* find(const StateKey& key) const noexcept;
    bool contains(const StateKey& key) const noexcept { return find(key) != nullptr; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Entries& entries() const noexcept { return entries_; }

private:
    Entries entries_;
};

/// Parses the CSV layout named by kWeTableHeader. Errors carry the line
/// number: MalformedRow, NonMonotoneRow, DuplicateState.
WeTable parse_we_table(std::istream& in);
WeTable load_we_table(const std::filesystem::path& path);

/// A WE table plus lazily built per-state curves.
///
/// Integer differentials inside a state's knot range return the table value
/// itself; everything else goes through the curve. The curve cache is
/// guarded, so one model can serve concurrent readers.
class WeModel {
public:
    explicit WeModel(WeTable table);

    WeModel(const WeModel&) = delete;
    WeModel& operator=(const WeModel&) = delete;

    /// Home-team WE. Throws Error(UnknownState).
    double lookup(const StateKey& key, double score_diff) const;
    const WeCurve& curve(const StateKey& key) const;
    /// Builds every curve up front.
    void precompute() const;

    const WeTable& table() const noexcept { return table_; }

private:
    const std::vector<Knot>& knots_for(const StateKey& key) const;

    WeTable table_;
    mutable std::shared_mutex mutex_;
    mutable std::map<StateKey, std::unique_ptr<const WeCurve>> curves_;
};

inline double lookup_we(const WeModel& model, const StateKey& key, double score_diff) {
    return model.lookup(key, score_diff);
}

}  // namespace ctxrbi
