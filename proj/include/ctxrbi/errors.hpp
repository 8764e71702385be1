#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ctxrbi {

enum class ErrorKind {
    MalformedRow,
    NonMonotoneRow,
    DuplicateState,
    DegenerateKnots,
    UnknownState,
    DomainError,
    InconsistentScore,
    RangeViolation,
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception. `line()` is the 1-based input line for parse
/// errors and 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::size_t line = 0);

    ErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::size_t line_;
    std::string detail_;
};

}  // namespace ctxrbi
