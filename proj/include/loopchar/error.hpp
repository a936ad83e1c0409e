#pragma once

#include <stdexcept>
#include <string>

namespace loopchar {

enum class ErrorCode {
    NonSymmetric,
    PositivityViolation,
    GcdViolation,
    SignViolation,
    IntegralityViolation,
    NotFiniteType,
    MissingDimensionTable,
    DivisionByZero,
    BadSpecialization,
    MixedSigns,
    Inhomogeneous,
    ZeroPolynomial,
    InfinitePolytope,
    EmptyBand,
    ZeroConstantDivisor,
    CapInstability,
    AllSpecializationsBad,
    NonIntegerSolution,
    ParseError,
    InternalError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonSymmetric: return "NonSymmetric";
        case ErrorCode::PositivityViolation: return "PositivityViolation";
        case ErrorCode::GcdViolation: return "GcdViolation";
        case ErrorCode::SignViolation: return "SignViolation";
        case ErrorCode::IntegralityViolation: return "IntegralityViolation";
        case ErrorCode::NotFiniteType: return "NotFiniteType";
        case ErrorCode::MissingDimensionTable: return "MissingDimensionTable";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::BadSpecialization: return "BadSpecialization";
        case ErrorCode::MixedSigns: return "MixedSigns";
        case ErrorCode::Inhomogeneous: return "Inhomogeneous";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::InfinitePolytope: return "InfinitePolytope";
        case ErrorCode::EmptyBand: return "EmptyBand";
        case ErrorCode::ZeroConstantDivisor: return "ZeroConstantDivisor";
        case ErrorCode::CapInstability: return "CapInstability";
        case ErrorCode::AllSpecializationsBad: return "AllSpecializationsBad";
        case ErrorCode::NonIntegerSolution: return "NonIntegerSolution";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace loopchar
