#include "specshape/common/error.hpp"

namespace specshape {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::TooFewPoints: return "TooFewPoints";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::NotAnEllipse: return "NotAnEllipse";
        case ErrorCode::ZeroMatrix: return "ZeroMatrix";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::BehindCamera: return "BehindCamera";
        case ErrorCode::EmptyImage: return "EmptyImage";
        case ErrorCode::NoSpecularity: return "NoSpecularity";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::EmptyMesh: return "EmptyMesh";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::NonUnitInput: return "NonUnitInput";
        case ErrorCode::NonOrthonormalPair: return "NonOrthonormalPair";
        case ErrorCode::ZeroMaxCurvature: return "ZeroMaxCurvature";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorCode::CorruptHeader: return "CorruptHeader";
        case ErrorCode::DecodeError: return "DecodeError";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

}  // namespace specshape
