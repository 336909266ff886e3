#pragma once

#include <stdexcept>
#include <string>

namespace overq {

enum class ErrorKind {
    PrefixSumViolation,
    CollidingSums,
    ModulusTooSmall,
    NotInAlphaTable,
    WindowMismatch,
    NonzeroConstantTerm,
    InexactDivision,
    OutsideWindow,
    DivergentAtWindow,
    RangeTooSmall,
    RankTooSmall,
    InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::PrefixSumViolation: return "PrefixSumViolation";
    case ErrorKind::CollidingSums:      return "CollidingSums";
    case ErrorKind::ModulusTooSmall:    return "ModulusTooSmall";
    case ErrorKind::NotInAlphaTable:    return "NotInAlphaTable";
    case ErrorKind::WindowMismatch:     return "WindowMismatch";
    case ErrorKind::NonzeroConstantTerm:return "NonzeroConstantTerm";
    case ErrorKind::InexactDivision:    return "InexactDivision";
    case ErrorKind::OutsideWindow:      return "OutsideWindow";
    case ErrorKind::DivergentAtWindow:  return "DivergentAtWindow";
    case ErrorKind::RangeTooSmall:      return "RangeTooSmall";
    case ErrorKind::RankTooSmall:       return "RankTooSmall";
    case ErrorKind::InvalidArgument:    return "InvalidArgument";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}
