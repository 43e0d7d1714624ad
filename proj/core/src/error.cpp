#include <polarstroke/error.hpp>

namespace polarstroke {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::MultipleSubpaths: return "MultipleSubpaths";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::ContiguityError: return "ContiguityError";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::InvalidSegment: return "InvalidSegment";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::DegenerateSegment: return "DegenerateSegment";
    case ErrorCode::OffsetCuspSingularity: return "OffsetCuspSingularity";
    case ErrorCode::InvalidStyle: return "InvalidStyle";
    case ErrorCode::RotationTooLarge: return "RotationTooLarge";
    case ErrorCode::TargetOutOfInterval: return "TargetOutOfInterval";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::MismatchedInputs: return "MismatchedInputs";
    }
    return "Unknown";
}

} // namespace polarstroke
