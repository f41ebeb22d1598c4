#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace localh {

/// Failure categories. The CLI maps these onto exit codes, so every throw
/// site picks the most specific kind.
enum class ErrorKind {
    InvalidArgument,
    NotSymmetric,
    DegreeTooLarge,
    VoidComplex,
    NotAFace,
    LabelCollision,
    NotPure,
    RidgeInThreeFacets,
    NotASimplex,
    NotASubcomplex,
    MissingCarrier,
    Ungraded,
    BoundaryUndetermined,
    Precondition,
    InvalidTarget,
    EnumerationBound,
    Schema,
    InternalMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace localh
