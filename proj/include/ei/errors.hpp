#pragma once

#include <stdexcept>
#include <string>

namespace ei {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define EI_DEFINE_ERROR(name)                                  \
    struct name : Error {                                      \
        explicit name(const std::string& msg) : Error(msg) {}  \
    }

EI_DEFINE_ERROR(CapacityExceeded);
EI_DEFINE_ERROR(InvalidEdge);
EI_DEFINE_ERROR(InvalidVertex);
EI_DEFINE_ERROR(VoidComplex);
EI_DEFINE_ERROR(VariableAbsent);
EI_DEFINE_ERROR(IdealZero);
EI_DEFINE_ERROR(IdealImproper);
EI_DEFINE_ERROR(NoEdges);
EI_DEFINE_ERROR(IsolatedVertex);
EI_DEFINE_ERROR(SandwichViolation);
EI_DEFINE_ERROR(NotIndependent);
EI_DEFINE_ERROR(NotAnEdge);
EI_DEFINE_ERROR(AdjacencyViolation);
EI_DEFINE_ERROR(SizeOutOfRange);
EI_DEFINE_ERROR(InvalidParameter);
EI_DEFINE_ERROR(BaseUnavailable);
EI_DEFINE_ERROR(InvalidTriple);
EI_DEFINE_ERROR(VerificationFailed);
EI_DEFINE_ERROR(RegularityTooSmall);
EI_DEFINE_ERROR(DegreeTooSmall);
EI_DEFINE_ERROR(TooLarge);
EI_DEFINE_ERROR(ParseError);

#undef EI_DEFINE_ERROR

} // namespace ei
