#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultraword {

enum class ErrorKind {
    DivisionByZero,
    UnknownLabel,
    InadmissibleIndex,
    InvalidScheme,
    InvalidPointRule,
    InvalidWord,
    TooFewMembers,
    DuplicateMember,
    IncomparableMembers,
    UnknownSentence,
    InvalidRule,
    AxiomCollision,
    NotPerceived,
    EmptySource,
    TagCollision,
    Unlimited,
    ArityMismatch,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every domain failure raised by the library. The kind is stable and is what
/// callers (and the CLI exit-code mapping) switch on; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ultraword
