// expsum — error taxonomy.
//
// Every failure mode surfaced by the library is a subclass of expsum::Error,
// so callers can distinguish "the input is outside the supported range"
// (TooLarge, KTooLarge, HypothesisFailed) from "arithmetic could not certify
// the requested precision" (PrecisionExhausted, TruncationUncertified) from
// genuine verification failures (FEViolation, IdentityFailure, ...).

#ifndef EXPSUM_ERRORS_HPP
#define EXPSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expsum {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define EXPSUM_DEFINE_ERROR(NAME)                                         \
    struct NAME : Error {                                                 \
        explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
    }

// construction / input errors
EXPSUM_DEFINE_ERROR(CompositeP);
EXPSUM_DEFINE_ERROR(DegreeZero);
EXPSUM_DEFINE_ERROR(FieldMismatch);
EXPSUM_DEFINE_ERROR(TooLarge);
EXPSUM_DEFINE_ERROR(NotAUnit);
EXPSUM_DEFINE_ERROR(BadIndex);
EXPSUM_DEFINE_ERROR(OddK);
EXPSUM_DEFINE_ERROR(KTooLarge);
EXPSUM_DEFINE_ERROR(HypothesisFailed);
EXPSUM_DEFINE_ERROR(EmptyInput);
EXPSUM_DEFINE_ERROR(DegreeMismatch);

// precision / convergence errors
EXPSUM_DEFINE_ERROR(PrecisionExhausted);
EXPSUM_DEFINE_ERROR(NonConvergent);
EXPSUM_DEFINE_ERROR(TruncationUncertified);
EXPSUM_DEFINE_ERROR(DivisionInexact);

// verification failures
EXPSUM_DEFINE_ERROR(FEViolation);
EXPSUM_DEFINE_ERROR(IdentityFailure);
EXPSUM_DEFINE_ERROR(ConstancyViolation);
EXPSUM_DEFINE_ERROR(IntertwineViolation);

// census store
EXPSUM_DEFINE_ERROR(ConflictError);
EXPSUM_DEFINE_ERROR(NotFound);

#undef EXPSUM_DEFINE_ERROR

}  // namespace expsum

#endif  // EXPSUM_ERRORS_HPP
