#include "cqv/error.hpp"

namespace cqv {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
        case ErrorCode::NegativePart: return "NegativePart";
        case ErrorCode::NotStrictlyDecreasing: return "NotStrictlyDecreasing";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidHook: return "InvalidHook";
        case ErrorCode::PTooSmall: return "PTooSmall";
        case ErrorCode::NotACore: return "NotACore";
        case ErrorCode::NotACoreVector: return "NotACoreVector";
        case ErrorCode::NonPolynomial: return "NonPolynomial";
        case ErrorCode::EmptyMultipartition: return "EmptyMultipartition";
        case ErrorCode::NonTrivialCore: return "NonTrivialCore";
        case ErrorCode::NotDiagonal: return "NotDiagonal";
        case ErrorCode::ConditionCViolated: return "ConditionCViolated";
        case ErrorCode::CharacterMismatch: return "CharacterMismatch";
        case ErrorCode::DecodeFailure: return "DecodeFailure";
        case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorCode::DegenerateParameter: return "DegenerateParameter";
        case ErrorCode::ReflectionMismatch: return "ReflectionMismatch";
        case ErrorCode::UnknownSuite: return "UnknownSuite";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace cqv
