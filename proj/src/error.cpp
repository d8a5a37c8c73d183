#include "cas/error.hpp"

namespace cas {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DegenerateVector: return "DegenerateVector";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::WrongCase: return "WrongCase";
    case ErrorCode::CurveNotUnitSpeed: return "CurveNotUnitSpeed";
    case ErrorCode::CurveNotOnSphere: return "CurveNotOnSphere";
    case ErrorCode::CurveNotOnHyperboloid: return "CurveNotOnHyperboloid";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::UnsupportedSpace: return "UnsupportedSpace";
    case ErrorCode::UnsupportedChart: return "UnsupportedChart";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PoleInRange: return "PoleInRange";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

} // namespace cas
