#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarstroke {

enum class ErrorCode {
    // path_model
    UnknownCommand,
    ArityError,
    EmptyPath,
    MultipleSubpaths,
    SchemaError,
    ContiguityError,
    NonPositiveWeight,
    InvalidSegment,
    // diffgeo
    ParameterOutOfRange,
    DegenerateSegment,
    OffsetCuspSingularity,
    // tessellator
    InvalidStyle,
    RotationTooLarge,
    TargetOutOfInterval,
    // auditor
    ZeroLengthEdge,
    ParallelLines,
    MismatchedInputs,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// True for the errors raised while reading path input.
    bool is_parse_error() const noexcept {
        return code_ <= ErrorCode::InvalidSegment;
    }

private:
    ErrorCode code_;
};

} // namespace polarstroke
