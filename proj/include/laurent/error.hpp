#pragma once

#include <stdexcept>
#include <string>

namespace laurent {

enum class ErrorCode {
    DegreeMismatch,
    QMismatch,
    NotTransitive,
    NotPermutation,
    UnsortedInput,
    NotQ3,
    InvalidPassport,
    InternalPlanError,
    PlanInconsistent,
    SyntaxError,
    AmbiguousFace,
    NoFace,
    InvalidDocument,
    NotRealizable,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::QMismatch: return "QMismatch";
        case ErrorCode::NotTransitive: return "NotTransitive";
        case ErrorCode::NotPermutation: return "NotPermutation";
        case ErrorCode::UnsortedInput: return "UnsortedInput";
        case ErrorCode::NotQ3: return "NotQ3";
        case ErrorCode::InvalidPassport: return "InvalidPassport";
        case ErrorCode::InternalPlanError: return "InternalPlanError";
        case ErrorCode::PlanInconsistent: return "PlanInconsistent";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::AmbiguousFace: return "AmbiguousFace";
        case ErrorCode::NoFace: return "NoFace";
        case ErrorCode::InvalidDocument: return "InvalidDocument";
        case ErrorCode::NotRealizable: return "NotRealizable";
    }
    return "Unknown";
}

/// Contract violations raised by library operations. The code identifies the
/// failure class; what() carries a human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace laurent
