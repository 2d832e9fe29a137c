#include "kecs/error.hpp"

namespace kecs {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdgeInSimpleMode: return "DuplicateEdgeInSimpleMode";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotATriangle: return "NotATriangle";
    case Errc::DoubledTriangleEdge: return "DoubledTriangleEdge";
    case Errc::UnknownPattern: return "UnknownPattern";
    case Errc::BothOrNeitherFreeAtStart: return "BothOrNeitherFreeAtStart";
    case Errc::EdgeNotUncolored: return "EdgeNotUncolored";
    case Errc::StaleFan: return "StaleFan";
    case Errc::ImproperAssignment: return "ImproperAssignment";
    case Errc::PaletteMismatch: return "PaletteMismatch";
    case Errc::IterationCapExceeded: return "IterationCapExceeded";
    case Errc::UnsupportedDelta: return "UnsupportedDelta";
    case Errc::BadDimensions: return "BadDimensions";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::FractionNotReached: return "FractionNotReached";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NotKNormal: return "NotKNormal";
    case Errc::CoreRatioMiss: return "CoreRatioMiss";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::BadTag: return "BadTag";
    case Errc::EvenDelta: return "EvenDelta";
    case Errc::UnsatisfiableParameters: return "UnsatisfiableParameters";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::NotSimple: return "NotSimple";
    case Errc::InvariantViolated: return "InvariantViolated";
    }
    return "Unknown";
}

} // namespace kecs
