#include "pou/error.hpp"

namespace pou {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::ZeroDistance: return "ZeroDistance";
        case ErrorKind::TriangleViolation: return "TriangleViolation";
        case ErrorKind::CoordMismatch: return "CoordMismatch";
        case ErrorKind::IndexMismatch: return "IndexMismatch";
        case ErrorKind::EmptyMember: return "EmptyMember";
        case ErrorKind::NotACover: return "NotACover";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::NoPathWithinEps: return "NoPathWithinEps";
        case ErrorKind::UnknownIndex: return "UnknownIndex";
        case ErrorKind::BadExponent: return "BadExponent";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::InconsistentBounds: return "InconsistentBounds";
        case ErrorKind::NotARefinement: return "NotARefinement";
        case ErrorKind::NotCovered: return "NotCovered";
        case ErrorKind::OffLattice: return "OffLattice";
        case ErrorKind::CoverTooTight: return "CoverTooTight";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void Error::raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace pou
