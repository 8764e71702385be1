#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctxrbi/csv.hpp"
#include "ctxrbi/pchip.hpp"

namespace ctxrbi::test {

inline std::filesystem::path data_dir() { return CTXRBI_DATA_DIR; }
inline std::filesystem::path golden_dir() { return CTXRBI_GOLDEN_DIR; }

/// Absolute-tolerance comparison; false for NaN.
inline bool near(double actual, double expected, double tol) { return std::fabs(actual - expected) <= tol; }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// n in [2, 11] knots with strictly increasing x (gaps in [0.5, 2]) and
/// non-decreasing y drawn from (0, 1); about one gap in six is flat.
inline std::vector<Knot> random_monotone_knots(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(2, 11);
    std::uniform_real_distribution<double> gap(0.5, 2.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> start(-8.0, 0.0);

    const int n = count(rng);
    std::vector<double> ys(static_cast<std::size_t>(n));
    for (auto& y : ys) {
        do {
            y = unit(rng);
        } while (y <= 0.0 || y >= 1.0);
    }
    std::sort(ys.begin(), ys.end());
    for (std::size_t i = 1; i < ys.size(); ++i) {
        if (unit(rng) < 1.0 / 6.0) ys[i] = ys[i - 1];
    }

    std::vector<Knot> knots;
    double x = start(rng);
    for (const double y : ys) {
        knots.push_back(Knot{x, y});
        x += gap(rng);
    }
    return knots;
}

/// Rows of a CSV with a header, as name -> value maps.
inline std::vector<std::map<std::string, std::string>> read_csv_rows(const std::filesystem::path& p) {
    std::ifstream in(p);
    csv::Reader reader(in);
    std::vector<std::map<std::string, std::string>> rows;
    const auto header = reader.next();
    if (!header) return rows;
    while (auto row = reader.next()) {
        std::map<std::string, std::string> m;
        for (std::size_t i = 0; i < header->size() && i < row->size(); ++i) m[(*header)[i]] = (*row)[i];
        rows.push_back(std::move(m));
    }
    return rows;
}

}  // namespace ctxrbi::test
