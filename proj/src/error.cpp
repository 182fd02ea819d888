#include "diffrad/error.hpp"

namespace diffrad {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DIsSquare: return "DIsSquare";
    case ErrorCode::ZeroRadicand: return "ZeroRadicand";
    case ErrorCode::NonRealRadicand: return "NonRealRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::TowerMismatch: return "TowerMismatch";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NonConstantDivisor: return "NonConstantDivisor";
    case ErrorCode::ZeroLeading: return "ZeroLeading";
    case ErrorCode::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::BadArity: return "BadArity";
    case ErrorCode::DependentInputs: return "DependentInputs";
    case ErrorCode::ZeroSum: return "ZeroSum";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

std::string with_expected(const std::string& message, const std::vector<std::string>& expected) {
    if (expected.empty()) return message;
    std::string out = message + " (expected one of:";
    for (const auto& e : expected) out += " " + e;
    return out + ")";
}

}  // namespace

ParseError::ParseError(ErrorCode code, std::size_t position, std::vector<std::string> expected,
                       const std::string& message)
    : Error(code, "at offset " + std::to_string(position) + ": " + with_expected(message, expected)),
      position_(position),
      expected_(std::move(expected)) {}

}  // namespace diffrad
