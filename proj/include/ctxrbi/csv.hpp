#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctxrbi::csv {

/// Line-oriented reader for RFC 4180 style CSV. Quoted fields may contain
/// commas and doubled quotes but not newlines.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    /// Next non-blank record, or nullopt at end of input.
    std::optional<std::vector<std::string>> next();
    /// 1-based line number of the record last returned.
    std::size_t line() const noexcept { return line_; }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

std::vector<std::string> split(std::string_view line);
std::string quote(std::string_view field);
std::string join(const std::vector<std::string>& fields);

std::string_view trim(std::string_view s) noexcept;

// Strict numeric parsing of a whole (trimmed) field.
std::optional<double> to_double(std::string_view s) noexcept;
std::optional<long long> to_integer(std::string_view s) noexcept;

/// Fixed-point rendering with `digits` decimals, "-0" folded to "0".
std::string format_fixed(double value, int digits);

}  // namespace ctxrbi::csv
