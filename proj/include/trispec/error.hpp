#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace trispec {

enum class ErrorCode {
    InvalidParameter,
    InvalidCertificate,
    LambdaOutsideDomain,
    NoConvergence,
    CountMismatch,
    ZOutsideDisk,
    QuadratureFailure,
    NearCollision,
    UnsupportedOrder,
    FormulaFloor,
    ExactUnavailable,
    Divergent,
    ZTooLarge,
    NoLimit,
    AlphaOutOfRange,
    UnsupportedFamily,
    GridTooCoarse,
    NotMonotone,
    IllConditionedFit,
};

[[nodiscard]] constexpr const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::InvalidCertificate: return "InvalidCertificate";
        case ErrorCode::LambdaOutsideDomain: return "LambdaOutsideDomain";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::ZOutsideDisk: return "ZOutsideDisk";
        case ErrorCode::QuadratureFailure: return "QuadratureFailure";
        case ErrorCode::NearCollision: return "NearCollision";
        case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
        case ErrorCode::FormulaFloor: return "FormulaFloor";
        case ErrorCode::ExactUnavailable: return "ExactUnavailable";
        case ErrorCode::Divergent: return "Divergent";
        case ErrorCode::ZTooLarge: return "ZTooLarge";
        case ErrorCode::NoLimit: return "NoLimit";
        case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
        case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::NotMonotone: return "NotMonotone";
        case ErrorCode::IllConditionedFit: return "IllConditionedFit";
    }
    return "Unknown";
}

/// Domain error raised by every library operation.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class CountMismatchError : public Error {
public:
    CountMismatchError(int expected, int got)
        : Error(ErrorCode::CountMismatch,
                "expected " + std::to_string(expected) + " eigenvalues, got " + std::to_string(got)),
          expected(expected), got(got) {}

    int expected;
    int got;
};

class NearCollisionError : public Error {
public:
    NearCollisionError(std::complex<double> z, double gap)
        : Error(ErrorCode::NearCollision,
                "eigenvalue gap " + std::to_string(gap) + " at z = (" + std::to_string(z.real()) + ", " +
                    std::to_string(z.imag()) + ")"),
          z(z), gap(gap) {}

    std::complex<double> z;
    double gap;
};

} // namespace trispec
