#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kecs {

enum class Errc {
    LoopEdge,
    DuplicateEdgeInSimpleMode,
    IndexOutOfRange,
    NotATriangle,
    DoubledTriangleEdge,
    UnknownPattern,
    BothOrNeitherFreeAtStart,
    EdgeNotUncolored,
    StaleFan,
    ImproperAssignment,
    PaletteMismatch,
    IterationCapExceeded,
    UnsupportedDelta,
    BadDimensions,
    DegreeTooHigh,
    PreconditionViolated,
    FractionNotReached,
    Infeasible,
    NotKNormal,
    CoreRatioMiss,
    InstanceTooLarge,
    BadTag,
    EvenDelta,
    UnsatisfiableParameters,
    SyntaxError,
    CountMismatch,
    NotSimple,
    InvariantViolated,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure surfaces as this exception; `code()` names the
/// contract that was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace kecs
