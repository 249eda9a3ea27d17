// Error taxonomy shared by all modules.
#pragma once

#include <stdexcept>
#include <string>

namespace swz {

enum class ErrorKind {
    DivisionByZero,
    ZeroFunction,
    BasePointMismatch,
    DivisionByZeroSeries,
    ConstantInput,
    DegenerateMap,
    SyntaxError,
    NonPositiveExponent,
    ZeroDenominator,
    NotAZero,
    SingularCoefficient,
    TruncationExhausted,
    NoAuxiliary,
    UnsupportedCandidate,
    SingularPoint,
    Internal,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ZeroFunction: return "ZeroFunction";
        case ErrorKind::BasePointMismatch: return "BasePointMismatch";
        case ErrorKind::DivisionByZeroSeries: return "DivisionByZeroSeries";
        case ErrorKind::ConstantInput: return "ConstantInput";
        case ErrorKind::DegenerateMap: return "DegenerateMap";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NonPositiveExponent: return "NonPositiveExponent";
        case ErrorKind::ZeroDenominator: return "ZeroDenominator";
        case ErrorKind::NotAZero: return "NotAZero";
        case ErrorKind::SingularCoefficient: return "SingularCoefficient";
        case ErrorKind::TruncationExhausted: return "TruncationExhausted";
        case ErrorKind::NoAuxiliary: return "NoAuxiliary";
        case ErrorKind::UnsupportedCandidate: return "UnsupportedCandidate";
        case ErrorKind::SingularPoint: return "SingularPoint";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Syntax errors carry the byte offset into the input text.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t pos, const std::string& msg)
        : Error(ErrorKind::SyntaxError, msg + " (at position " + std::to_string(pos) + ")"),
          position_(pos) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace swz
