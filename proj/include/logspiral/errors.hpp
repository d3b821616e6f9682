#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace logspiral {

enum class ErrorKind {
    OutOfDomain,
    DegenerateJet,
    BadParameter,
    NumericalBreakdown,
    DomainError,
    NotOrthogonal,
    Unsupported,
    PreconditionFailed,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::OutOfDomain: return "out of domain";
    case ErrorKind::DegenerateJet: return "degenerate jet";
    case ErrorKind::BadParameter: return "bad parameter";
    case ErrorKind::NumericalBreakdown: return "numerical breakdown";
    case ErrorKind::DomainError: return "domain error";
    case ErrorKind::NotOrthogonal: return "not orthogonal";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::PreconditionFailed: return "precondition failed";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what)
{
    throw GeometryError(kind, what);
}

} // namespace logspiral
