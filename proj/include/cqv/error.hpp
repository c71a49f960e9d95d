#pragma once

#include <stdexcept>
#include <string>

namespace cqv {

enum class ErrorCode {
    NotWeaklyDecreasing,
    NegativePart,
    NotStrictlyDecreasing,
    SizeMismatch,
    InvalidHook,
    PTooSmall,
    NotACore,
    NotACoreVector,
    NonPolynomial,
    EmptyMultipartition,
    NonTrivialCore,
    NotDiagonal,
    ConditionCViolated,
    CharacterMismatch,
    DecodeFailure,
    NegativeCoefficient,
    DegenerateParameter,
    ReflectionMismatch,
    UnknownSuite,
    InvalidArgument,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cqv
