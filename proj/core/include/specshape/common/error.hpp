#pragma once

#include <stdexcept>
#include <string>

namespace specshape {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes (input errors -> 2, configuration errors -> 3).
enum class ErrorCode {
    TooFewPoints,
    DegenerateConfiguration,
    NotAnEllipse,
    ZeroMatrix,
    NotSymmetric,
    BehindCamera,
    EmptyImage,
    NoSpecularity,
    OutOfDomain,
    ParseError,
    EmptyMesh,
    IsolatedVertex,
    NonUnitInput,
    NonOrthonormalPair,
    ZeroMaxCurvature,
    EmptyInput,
    InvalidRange,
    InvalidParams,
    UnsupportedFormat,
    CorruptHeader,
    DecodeError,
    ConfigError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace specshape
