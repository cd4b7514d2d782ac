#pragma once

#include <stdexcept>
#include <string>

namespace nzeta {

// Error taxonomy; exit_code groups errors the way the CLI reports them:
// 1 parse/validation, 2 not-ODP/not-isolated, 3 equisingularity,
// 4 precision/ambiguity, 5 internal invariant violation.
enum class ErrorCode {
    Parse,
    PDivides,
    AmbiguousLift,
    SingularMatrix,
    NotSingular,
    NotIsolated,
    TransversalityFailure,
    Equisingularity,
    ResidueNotInIdeal,
    DimensionMismatch,
    DegreeMismatch,
    WeilViolation,
    BudgetExceeded,
    Mismatch,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

    int exit_code() const {
        switch (code_) {
        case ErrorCode::Parse: return 1;
        case ErrorCode::NotSingular:
        case ErrorCode::NotIsolated:
        case ErrorCode::DimensionMismatch: return 2;
        case ErrorCode::Equisingularity: return 3;
        case ErrorCode::PDivides:
        case ErrorCode::AmbiguousLift: return 4;
        default: return 5;
        }
    }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

}  // namespace nzeta
