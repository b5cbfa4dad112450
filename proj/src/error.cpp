#include "ultraword/error.hpp"

namespace ultraword {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::InadmissibleIndex: return "InadmissibleIndex";
        case ErrorKind::InvalidScheme: return "InvalidScheme";
        case ErrorKind::InvalidPointRule: return "InvalidPointRule";
        case ErrorKind::InvalidWord: return "InvalidWord";
        case ErrorKind::TooFewMembers: return "TooFewMembers";
        case ErrorKind::DuplicateMember: return "DuplicateMember";
        case ErrorKind::IncomparableMembers: return "IncomparableMembers";
        case ErrorKind::UnknownSentence: return "UnknownSentence";
        case ErrorKind::InvalidRule: return "InvalidRule";
        case ErrorKind::AxiomCollision: return "AxiomCollision";
        case ErrorKind::NotPerceived: return "NotPerceived";
        case ErrorKind::EmptySource: return "EmptySource";
        case ErrorKind::TagCollision: return "TagCollision";
        case ErrorKind::Unlimited: return "Unlimited";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace ultraword
