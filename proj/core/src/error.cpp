#include "localh/error.hpp"

namespace localh {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::NotSymmetric: return "not-symmetric";
        case ErrorKind::DegreeTooLarge: return "degree-too-large";
        case ErrorKind::VoidComplex: return "void-complex";
        case ErrorKind::NotAFace: return "not-a-face";
        case ErrorKind::LabelCollision: return "label-collision";
        case ErrorKind::NotPure: return "not-pure";
        case ErrorKind::RidgeInThreeFacets: return "ridge-in-three-facets";
        case ErrorKind::NotASimplex: return "not-a-simplex";
        case ErrorKind::NotASubcomplex: return "not-a-subcomplex";
        case ErrorKind::MissingCarrier: return "missing-carrier";
        case ErrorKind::Ungraded: return "ungraded";
        case ErrorKind::BoundaryUndetermined: return "boundary-undetermined";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::InvalidTarget: return "invalid-target";
        case ErrorKind::EnumerationBound: return "enumeration-bound";
        case ErrorKind::Schema: return "schema";
        case ErrorKind::InternalMismatch: return "internal-mismatch";
    }
    return "unknown";
}

}  // namespace localh
