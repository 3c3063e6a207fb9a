#pragma once

#include <stdexcept>
#include <string>

namespace transurf {

/// Every failure mode the library can report. Values are stable: the CLI
/// maps them to process exit codes as 10 + static_cast<int>(code).
enum class ErrorCode {
    ZeroRoot = 0,
    SameSign,
    ComplexRoots,
    ZeroC1,
    DoubleRoot,
    InitialValueOutOfBand,
    StepTooLarge,
    NonpositiveY,
    NonpositiveKappa,
    ZeroTorsion,
    BadRadius,
    SpanHitsSingularity,
    GridTooCoarse,
    DegenerateSecondDerivative,
    NonmonotonePhase,
    ParallelDirections,
    GridHitsSingularity,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }
    int exit_code() const { return 10 + static_cast<int>(code_); }

private:
    ErrorCode code_;
};

} // namespace transurf
