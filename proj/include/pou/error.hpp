#pragma once

#include <stdexcept>
#include <string>

namespace pou {

/// Failure categories surfaced by the library. Every throw site uses one of
/// these so callers can branch on the condition rather than parse messages.
enum class ErrorKind {
    AsymmetricMatrix,
    NegativeEntry,
    ZeroDistance,
    TriangleViolation,
    CoordMismatch,
    IndexMismatch,
    EmptyMember,
    NotACover,
    TooFewPoints,
    NoPathWithinEps,
    UnknownIndex,
    BadExponent,
    BadParameter,
    InconsistentBounds,
    NotARefinement,
    NotCovered,
    OffLattice,
    CoverTooTight,
    SchemaError,
    IoError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

    [[noreturn]] static void raise(ErrorKind kind, const std::string& message);

  private:
    ErrorKind kind_;
};

}  // namespace pou
