#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wittrep {

enum class ErrorKind {
    NotPrime,
    Reducible,
    InvalidArgument,
    NotUnit,
    BadPrime,
    TooLarge,
    UnboundVariable,
    NotInSpan,
    ZeroTorusParameter,
    NotInGroup,
    NotInRadical,
    BudgetExceeded,
    ParseError,
    NotFirstOrder,
    WindowTooSmall,
    NoWitness,
    NonTerminating,
    CollisionFound,
    NotUnipotent,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a stable exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace wittrep
