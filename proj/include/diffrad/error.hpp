#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace diffrad {

enum class ErrorCode {
    DIsSquare,
    ZeroRadicand,
    NonRealRadicand,
    DivisionByZero,
    TowerMismatch,
    ZeroShift,
    BothZero,
    NotDivisible,
    ZeroPolynomial,
    SyntaxError,
    UnknownConstant,
    NegativeExponent,
    NonConstantDivisor,
    ZeroLeading,
    NonPositiveMultiplicity,
    BadOrder,
    EmptyList,
    BadArity,
    DependentInputs,
    ZeroSum,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the byte offset into the source and the tokens that would have been accepted.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t position, std::vector<std::string> expected,
               const std::string& message);

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

}  // namespace diffrad
