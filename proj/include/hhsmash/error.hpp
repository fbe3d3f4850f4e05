#pragma once

#include <stdexcept>
#include <string>

namespace hhs {

enum class ErrorCode {
    NotInSpan,
    NotAGroup,
    NotSemisimple,
    NoIntegral,
    IntegralNotTwoSided,
    DegreeOverflow,
    RelationNotPreserved,
    NotACocycle,
    TargetBasisIncomplete,
    BasisMismatch,
    ParseError,
    ValidationError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace hhs
