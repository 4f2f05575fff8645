#pragma once

#include <stdexcept>
#include <string>

namespace polysphere {

enum class ErrorCode {
    // geometry kernel
    NoIntersection,
    DegenerateCenter,
    OutOfRange,
    NotOnCircle,
    OutsideArc,
    DegenerateArc,
    // polygon space
    WrongArity,
    InvalidSpec,
    NotFound,
    InvalidPolygon,
    // sphere model
    NotUnit,
    DimensionMismatch,
    AntipodalEndpoints,
    InvalidCoords,
    // coordinate map / planner
    SpecMismatch,
    InconsistentGeometry,
    // io
    ParseError,
    ValidationError,
    IoError,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-checkable code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace polysphere
