#include "qht/error.hpp"

namespace qht {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::MismatchedCyclotomicOrder: return "MismatchedCyclotomicOrder";
        case ErrorCode::MixedDirections: return "MixedDirections";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::GradingViolation: return "GradingViolation";
        case ErrorCode::NonAssociative: return "NonAssociative";
        case ErrorCode::NonCommutative: return "NonCommutative";
        case ErrorCode::MissingIdentity: return "MissingIdentity";
        case ErrorCode::RelationViolated: return "RelationViolated";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::RepeatedRoot: return "RepeatedRoot";
        case ErrorCode::UnfactorableShape: return "UnfactorableShape";
        case ErrorCode::RootNotInField: return "RootNotInField";
        case ErrorCode::NotCyclic: return "NotCyclic";
        case ErrorCode::MonotonicityMismatch: return "MonotonicityMismatch";
        case ErrorCode::BoundarySquareNonzero: return "BoundarySquareNonzero";
        case ErrorCode::ActionNonDecreasing: return "ActionNonDecreasing";
        case ErrorCode::NotACycle: return "NotACycle";
        case ErrorCode::NullHomologous: return "NullHomologous";
        case ErrorCode::BadLambdaShape: return "BadLambdaShape";
        case ErrorCode::BadFlagSpec: return "BadFlagSpec";
        case ErrorCode::MethodDisagreement: return "MethodDisagreement";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
        case ErrorCode::InexactResult: return "InexactResult";
        case ErrorCode::Internal: return "Internal";
    }
    return "Internal";
}

}  // namespace qht
