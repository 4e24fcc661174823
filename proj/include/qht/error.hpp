#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qht {

enum class ErrorCode {
    DivisionByZero,
    MismatchedCyclotomicOrder,
    MixedDirections,
    ZeroElement,
    SchemaError,
    GradingViolation,
    NonAssociative,
    NonCommutative,
    MissingIdentity,
    RelationViolated,
    DimensionMismatch,
    RepeatedRoot,
    UnfactorableShape,
    RootNotInField,
    NotCyclic,
    MonotonicityMismatch,
    BoundarySquareNonzero,
    ActionNonDecreasing,
    NotACycle,
    NullHomologous,
    BadLambdaShape,
    BadFlagSpec,
    MethodDisagreement,
    UnknownCommand,
    InexactResult,
    Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a stable error code; every module reports failures through it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace qht
