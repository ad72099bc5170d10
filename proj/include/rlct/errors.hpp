#pragma once

#include <stdexcept>
#include <string>

namespace rlct {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define RLCT_DEFINE_ERROR(Name)                                         \
    struct Name : Error {                                               \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

RLCT_DEFINE_ERROR(DivisionByZero);
RLCT_DEFINE_ERROR(ModulusMismatch);
RLCT_DEFINE_ERROR(ArityMismatch);
RLCT_DEFINE_ERROR(IndexError);
RLCT_DEFINE_ERROR(RelationViolation);
RLCT_DEFINE_ERROR(ParityError);
RLCT_DEFINE_ERROR(DegreeError);
RLCT_DEFINE_ERROR(VerificationFailure);
RLCT_DEFINE_ERROR(ClosureError);
RLCT_DEFINE_ERROR(ContactNormalizationError);
RLCT_DEFINE_ERROR(InvalidForm);
RLCT_DEFINE_ERROR(NotSemisimple);
RLCT_DEFINE_ERROR(NotInvertible);
RLCT_DEFINE_ERROR(OutsideOmegaBeta);
RLCT_DEFINE_ERROR(EnvelopeError);
RLCT_DEFINE_ERROR(UsageError);

#undef RLCT_DEFINE_ERROR

} // namespace rlct
