#include "transurf/error.hpp"

namespace transurf {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroRoot: return "ZeroRoot";
        case ErrorCode::SameSign: return "SameSign";
        case ErrorCode::ComplexRoots: return "ComplexRoots";
        case ErrorCode::ZeroC1: return "ZeroC1";
        case ErrorCode::DoubleRoot: return "DoubleRoot";
        case ErrorCode::InitialValueOutOfBand: return "InitialValueOutOfBand";
        case ErrorCode::StepTooLarge: return "StepTooLarge";
        case ErrorCode::NonpositiveY: return "NonpositiveY";
        case ErrorCode::NonpositiveKappa: return "NonpositiveKappa";
        case ErrorCode::ZeroTorsion: return "ZeroTorsion";
        case ErrorCode::BadRadius: return "BadRadius";
        case ErrorCode::SpanHitsSingularity: return "SpanHitsSingularity";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::DegenerateSecondDerivative: return "DegenerateSecondDerivative";
        case ErrorCode::NonmonotonePhase: return "NonmonotonePhase";
        case ErrorCode::ParallelDirections: return "ParallelDirections";
        case ErrorCode::GridHitsSingularity: return "GridHitsSingularity";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace transurf
