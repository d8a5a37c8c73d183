#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cas {

enum class ErrorCode {
    DegenerateVector,
    DegenerateCurve,
    DegeneratePoint,
    SingularPoint,
    OutOfDomain,
    WrongCase,
    CurveNotUnitSpeed,
    CurveNotOnSphere,
    CurveNotOnHyperboloid,
    UnknownExample,
    UnsupportedSpace,
    UnsupportedChart,
    EmptyGrid,
    DimensionMismatch,
    PoleInRange,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cas
