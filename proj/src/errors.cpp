#include "ctxrbi/errors.hpp"

namespace ctxrbi {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MalformedRow: return "MalformedRow";
        case ErrorKind::NonMonotoneRow: return "NonMonotoneRow";
        case ErrorKind::DuplicateState: return "DuplicateState";
        case ErrorKind::DegenerateKnots: return "DegenerateKnots";
        case ErrorKind::UnknownState: return "UnknownState";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::InconsistentScore: return "InconsistentScore";
        case ErrorKind::RangeViolation: return "RangeViolation";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, std::size_t line) {
    std::string out(to_string(kind));
    if (line > 0) {
        out += " (line " + std::to_string(line) + ")";
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::size_t line)
    : std::runtime_error(compose(kind, message, line)), kind_(kind), line_(line), detail_(message) {}

}  // namespace ctxrbi
